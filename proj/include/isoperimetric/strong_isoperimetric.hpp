#pragma once

#include <string>
#include <vector>

#include "isoperimetric/digraph.hpp"
#include "isoperimetric/element_set.hpp"
#include "isoperimetric/error.hpp"
#include "isoperimetric/group.hpp"
#include "isoperimetric/iso.hpp"
#include "isoperimetric/menger.hpp"

namespace isoperimetric {

// Coset extension of X by translates of its H-parts.
//
// With S = S_0 u ... u S_u and X = X_0 u ... u X_t the H-decompositions
// (S_0 = S n H), the witness picks distinct part indices n_i and y_i in
// S \ H so that X u X_(n_1) y_1 u ... u X_(n_r) y_r meets t+1+u cosets.
struct QuotientWitness {
  int t = 0;  // X has t+1 parts
  int u = 0;  // S has u+1 parts
  int kappa1_quotient = 0;
  std::vector<int> indices;   // n_1..n_r
  std::vector<int> elements;  // y_1..y_r
  int cosets_reached = 0;     // recounted |phi(X u ...)|
  CosetDecomposition s_parts;
  CosetDecomposition x_parts;
};

// G abelian, S generating with 1 in S, H a subgroup that is a 2-fragment of
// Cay(G, S), and X nonempty with t+1 >= u and |G| - (t+1)|H| >= u|H|.
// The matching is taken in Cay(G/H, phi(S)) after checking
// kappa_1(phi(S)) >= u.
inline QuotientWitness abelian_strong_iso(const FiniteGroup& g, const ElementSet& s,
                                          const ElementSet& h, const ElementSet& x) {
  require_universe(g, s);
  require_universe(g, h);
  require_universe(g, x);
  if (!g.is_abelian()) throw PreconditionError("abelian_strong_iso: G must be abelian");
  if (!s.contains(FiniteGroup::identity()))
    throw PreconditionError("abelian_strong_iso: S must contain the identity");
  if (!generates(g, s)) throw PreconditionError("abelian_strong_iso: S must generate G");
  if (!is_subgroup(g, h)) throw PreconditionError("abelian_strong_iso: H is not a subgroup");
  if (x.empty()) throw PreconditionError("abelian_strong_iso: X must be nonempty");

  const Digraph cay = cayley_graph(g, s);
  const ElementSet far = co_complement(cay, h);
  const int hs = static_cast<int>(h.count());
  if (g.order() < 3 || hs < 2 || far.count() < 2 ||
      static_cast<int>(boundary(cay, h).count()) != kappa(cay, 2))
    throw PreconditionError("abelian_strong_iso: H is not a 2-fragment of Cay(G, S)");

  QuotientWitness w;
  w.s_parts = coset_decomposition(g, s, h, Side::left);
  w.x_parts = coset_decomposition(g, x, h, Side::left);
  w.u = static_cast<int>(w.s_parts.parts.size()) - 1;
  w.t = static_cast<int>(w.x_parts.parts.size()) - 1;
  if (g.order() - (w.t + 1) * hs < w.u * hs)
    throw PreconditionError("abelian_strong_iso: need |G| - (t+1)|H| >= u|H|");
  if (w.t + 1 < w.u) throw PreconditionError("abelian_strong_iso: need t+1 >= u");

  const QuotientGroup q = quotient_group(g, h);
  const int m = q.group.order();
  ElementSet phi_s(static_cast<std::size_t>(m)), phi_x(static_cast<std::size_t>(m));
  s.for_each([&](int e) { phi_s.insert(q.projection[e]); });
  x.for_each([&](int e) { phi_x.insert(q.projection[e]); });
  const Digraph qcay = cayley_graph(q.group, phi_s);
  w.kappa1_quotient = m >= 1 ? kappa(qcay, 1) : 0;
  if (w.kappa1_quotient < w.u)
    throw Error("abelian_strong_iso: kappa_1(phi(S)) = " + std::to_string(w.kappa1_quotient) +
                " is below u = " + std::to_string(w.u));

  const Matching mt = strong_iso_matching(qcay, phi_x, w.u, w.kappa1_quotient);
  ElementSet reached = x;
  for (auto [a, b] : mt.pairs) {
    int part = -1;
    for (std::size_t i = 0; i < w.x_parts.parts.size(); ++i)
      if (q.projection[w.x_parts.parts[i].first()] == a) part = static_cast<int>(i);
    // y in S \ H with phi(y) = a^-1 b
    const int step = q.group.mul(q.group.inverse(a), b);
    int y = -1;
    s.for_each([&](int e) {
      if (y < 0 && !h.contains(e) && q.projection[e] == step) y = e;
    });
    if (part < 0 || y < 0) throw Error("abelian_strong_iso: matching does not lift to G");
    w.indices.push_back(part);
    w.elements.push_back(y);
    reached |= right_translate(g, w.x_parts.parts[static_cast<std::size_t>(part)], y);
  }
  ElementSet cosets(static_cast<std::size_t>(m));
  reached.for_each([&](int e) { cosets.insert(q.projection[e]); });
  w.cosets_reached = static_cast<int>(cosets.count());
  if (w.cosets_reached != w.t + 1 + w.u)
    throw Error("abelian_strong_iso: extension reaches " + std::to_string(w.cosets_reached) +
                " cosets, expected t+1+u = " + std::to_string(w.t + 1 + w.u));
  return w;
}

}  // namespace isoperimetric

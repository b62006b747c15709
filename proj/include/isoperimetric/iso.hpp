#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isoperimetric/detail/masks.hpp"
#include "isoperimetric/digraph.hpp"
#include "isoperimetric/element_set.hpp"
#include "isoperimetric/error.hpp"
#include "isoperimetric/group.hpp"
#include "isoperimetric/menger.hpp"
#include "isoperimetric/report.hpp"

namespace isoperimetric {

// Largest graph handled by subset enumeration.
inline constexpr int kExhaustiveLimit = 24;
// Above this order kappa(g, 1) switches to the flow method.
inline constexpr int kFlowThreshold = 20;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// A list of fragments or atoms. A non-separable graph has every k-subset as a
// fragment; that family is kept as a descriptor and enumerated on demand.
class FragmentFamily {
 public:
  FragmentFamily() = default;

  static FragmentFamily listed(std::size_t universe, std::vector<ElementSet> sets) {
    FragmentFamily f;
    f.universe_ = universe;
    f.sets_ = std::move(sets);
    std::sort(f.sets_.begin(), f.sets_.end());
    return f;
  }
  static FragmentFamily all_subsets(std::size_t universe, int k) {
    FragmentFamily f;
    f.universe_ = universe;
    f.streamed_ = true;
    f.subset_size_ = k;
    return f;
  }

  bool streamed() const noexcept { return streamed_; }
  std::size_t universe() const noexcept { return universe_; }
  int subset_size() const noexcept { return subset_size_; }

  std::uint64_t size() const {
    return streamed_ ? binomial(static_cast<int>(universe_), subset_size_) : sets_.size();
  }

  const std::vector<ElementSet>& sets() const {
    if (streamed_) throw PreconditionError("fragment family is streamed; use for_each or take");
    return sets_;
  }

  // Visits members in canonical order; f returns false to stop.
  template <class F>
  void for_each(F&& f) const {
    if (!streamed_) {
      for (const auto& s : sets_)
        if (!f(s)) return;
      return;
    }
    const int n = static_cast<int>(universe_), k = subset_size_;
    if (k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (!f(ElementSet::from_indices(universe_, idx))) return;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) return;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::vector<ElementSet> take(std::size_t limit) const {
    std::vector<ElementSet> out;
    if (limit == 0) return out;
    for_each([&](const ElementSet& s) {
      out.push_back(s);
      return out.size() < limit;
    });
    return out;
  }

  // Number of members containing v.
  std::uint64_t count_containing(int v) const {
    if (streamed_) return binomial(static_cast<int>(universe_) - 1, subset_size_ - 1);
    std::uint64_t c = 0;
    for (const auto& s : sets_) c += s.contains(v) ? 1 : 0;
    return c;
  }

 private:
  std::size_t universe_ = 0;
  bool streamed_ = false;
  int subset_size_ = 0;
  std::vector<ElementSet> sets_;
};

struct IsoProfile {
  int k = 1;
  Sign sign = Sign::forward;
  bool separable = false;
  int kappa = 0;
  int alpha = 0;
  int omega = 0;
  FragmentFamily fragments;
  FragmentFamily atoms;
};

namespace detail {

struct ScanResult {
  bool separable = false;
  int kappa = 0;
  int alpha = 0;
  std::vector<Mask> fragments;  // only when collected
};

// Visits every X with |X| >= k and |V \ Gamma(X)| >= k exactly once, each
// with its image. With root >= 0 only sets containing root are visited.
// Images only grow along a branch, so a branch stops once |V \ Gamma(X)| < k.
template <class Visit>
void for_each_separating(const MaskGraph& g, int k, int root, Visit&& visit) {
  const int n = g.n;
  auto rec = [&](auto& self, Mask set, Mask img, int size, int next) -> void {
    if (size >= k) visit(set, img, size);
    for (int v = next; v < n; ++v) {
      if (v == root || !g.has_vertex(v)) continue;
      const Mask grown = img | g.rows[v] | bit(v);
      if (popcount(g.full & ~grown) < k) continue;
      self(self, set | bit(v), grown, size + 1, v + 1);
    }
  };
  if (root >= 0) {
    const Mask img = g.rows[root] | bit(root);
    if (popcount(g.full & ~img) >= k) rec(rec, bit(root), img, 1, 0);
  } else {
    rec(rec, Mask{0}, Mask{0}, 0, 0);
  }
}

inline ScanResult scan(const MaskGraph& g, int k, int root, bool collect) {
  ScanResult r;
  int best = INT_MAX;
  for_each_separating(g, k, root, [&](Mask set, Mask img, int size) {
    const int b = popcount(img) - size;
    if (b < best) {
      best = b;
      r.fragments.clear();
    }
    if (collect && b == best) r.fragments.push_back(set);
  });
  r.separable = best != INT_MAX;
  r.kappa = r.separable ? best : g.order() - 2 * k + 1;
  if (r.separable && collect) {
    r.alpha = INT_MAX;
    for (Mask f : r.fragments) r.alpha = std::min(r.alpha, popcount(f));
  } else if (!r.separable) {
    r.alpha = k;
  }
  return r;
}

inline bool is_fragment(const MaskGraph& g, int k, int kappa, Mask x) {
  return popcount(x) >= k && popcount(g.far_side(x)) >= k && popcount(g.boundary(x)) == kappa;
}

inline std::vector<Mask> atoms_of(const std::vector<Mask>& fragments, int alpha) {
  std::vector<Mask> out;
  for (Mask f : fragments)
    if (popcount(f) == alpha) out.push_back(f);
  return out;
}

inline std::vector<ElementSet> to_sets(std::size_t n, const std::vector<Mask>& masks) {
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(to_set(n, m));
  return out;
}

inline void require_kappa_domain(const Digraph& g, int k, const char* op) {
  require_reflexive(g, op);
  if (k < 1) throw PreconditionError(std::string(op) + ": k must be positive");
  if (g.order() < 2 * k - 1)
    throw PreconditionError(std::string(op) + ": kappa_k needs |V| >= 2k-1 (|V| = " +
                            std::to_string(g.order()) + ", k = " + std::to_string(k) + ")");
}

inline void require_exhaustive(const Digraph& g, const char* op) {
  if (g.order() > kExhaustiveLimit)
    throw PreconditionError(std::string(op) + ": exhaustive mode is limited to " +
                            std::to_string(kExhaustiveLimit) + " vertices");
}

inline int root_for(const Digraph& g) { return g.vertex_transitive() ? 0 : -1; }

}  // namespace detail

// kappa_k (forward) or kappa_-k (reverse). Non-separable graphs get |V|-2k+1.
inline int kappa(const Digraph& g, int k, Sign sign = Sign::forward) {
  detail::require_kappa_domain(g, k, "kappa");
  if (k == 1 && g.order() > kFlowThreshold) {
    if (sign == Sign::forward) return kappa1_flow(g);
    return kappa1_flow(reverse(g));
  }
  detail::require_exhaustive(g, "kappa");
  const detail::MaskGraph mg(g, sign);
  return detail::scan(mg, k, detail::root_for(g), false).kappa;
}

inline IsoProfile profile(const Digraph& g, int k, Sign sign = Sign::forward) {
  detail::require_kappa_domain(g, k, "profile");
  detail::require_exhaustive(g, "profile");
  const detail::MaskGraph mg(g, sign);
  auto r = detail::scan(mg, k, -1, true);
  IsoProfile p;
  p.k = k;
  p.sign = sign;
  p.separable = r.separable;
  p.kappa = r.kappa;
  p.alpha = r.alpha;
  if (!r.separable) {
    p.fragments = FragmentFamily::all_subsets(g.size(), k);
    p.atoms = p.fragments;
    p.omega = static_cast<int>(binomial(g.order() - 1, k - 1));
    return p;
  }
  auto atom_masks = detail::atoms_of(r.fragments, r.alpha);
  std::vector<int> per_vertex(g.size(), 0);
  for (auto a : atom_masks) detail::for_each_bit(a, [&](int v) { ++per_vertex[v]; });
  p.omega = *std::min_element(per_vertex.begin(), per_vertex.end());
  p.fragments = FragmentFamily::listed(g.size(), detail::to_sets(g.size(), r.fragments));
  p.atoms = FragmentFamily::listed(g.size(), detail::to_sets(g.size(), atom_masks));
  return p;
}

inline FragmentFamily fragments(const Digraph& g, int k, Sign sign = Sign::forward) {
  return profile(g, k, sign).fragments;
}

struct AtomResult {
  int alpha = 0;
  FragmentFamily atoms;
};

inline AtomResult atoms(const Digraph& g, int k, Sign sign = Sign::forward) {
  auto p = profile(g, k, sign);
  return {p.alpha, std::move(p.atoms)};
}

// Least number of k-atoms through a vertex.
inline int omega(const Digraph& g, int k, Sign sign = Sign::forward) {
  return profile(g, k, sign).omega;
}

// Fragments and atoms through one vertex. For vertex-transitive graphs this
// determines kappa, alpha and omega at a fraction of the cost of profile().
struct RootedProfile {
  int k = 1;
  Sign sign = Sign::forward;
  int root = 0;
  bool separable = false;
  int kappa = 0;
  int alpha = 0;
  int omega_at_root = 0;
  std::vector<ElementSet> fragments;  // empty when not separable
  std::vector<ElementSet> atoms;      // empty when not separable
};

inline RootedProfile rooted_profile(const Digraph& g, int k, Sign sign = Sign::forward,
                                    int root = 0) {
  detail::require_kappa_domain(g, k, "rooted_profile");
  detail::require_exhaustive(g, "rooted_profile");
  if (!g.vertex_transitive())
    throw PreconditionError("rooted_profile: graph must be vertex-transitive");
  if (root < 0 || root >= g.order()) throw PreconditionError("rooted_profile: root out of range");
  const detail::MaskGraph mg(g, sign);
  auto r = detail::scan(mg, k, root, true);
  RootedProfile p;
  p.k = k;
  p.sign = sign;
  p.root = root;
  p.separable = r.separable;
  p.kappa = r.kappa;
  p.alpha = r.alpha;
  if (!r.separable) {
    p.omega_at_root = static_cast<int>(binomial(g.order() - 1, k - 1));
    return p;
  }
  auto atom_masks = detail::atoms_of(r.fragments, r.alpha);
  p.omega_at_root = static_cast<int>(atom_masks.size());
  p.fragments = detail::to_sets(g.size(), r.fragments);
  p.atoms = detail::to_sets(g.size(), atom_masks);
  std::sort(p.fragments.begin(), p.fragments.end());
  std::sort(p.atoms.begin(), p.atoms.end());
  return p;
}

// ---------------------------------------------------------------------------
// Subset classification.

struct SubsetInvariants {
  int subgroup_order = 0;  // |<S>|, the group the graph lives on
  bool generating = false;
  int delta = 0;
  int kappa1 = 0;
  bool separable1 = false;
  std::optional<int> kappa2;  // absent when |<S>| < 3
  std::optional<int> mu;
  bool separable2 = false;
  bool cauchy = false;
  bool vosper = false;
};

// Invariants of Cay(<S>, S).
inline SubsetInvariants classify(const FiniteGroup& g, const ElementSet& s) {
  require_universe(g, s);
  if (!s.contains(FiniteGroup::identity()))
    throw PreconditionError("classify: S must contain the identity");
  const ElementSet h = subgroup_generated(g, s);
  const auto emb = subgroup_as_group(g, h);
  const Digraph cay = cayley_graph(emb.group, emb.pull(s));
  SubsetInvariants r;
  r.subgroup_order = emb.group.order();
  r.generating = r.subgroup_order == g.order();
  r.delta = static_cast<int>(s.count());
  r.kappa1 = kappa(cay, 1);
  r.separable1 = is_k_separable(cay, 1).separable;
  if (r.subgroup_order >= 3) {
    detail::require_exhaustive(cay, "classify");
    const detail::MaskGraph mg(cay, Sign::forward);
    const auto scan2 = detail::scan(mg, 2, 0, false);
    r.kappa2 = scan2.kappa;
    r.mu = scan2.kappa - r.delta;
    r.separable2 = scan2.separable;
  }
  r.cauchy = r.kappa1 == r.delta - 1;
  r.vosper = !r.separable2 || (r.kappa2 && *r.kappa2 >= r.delta);
  return r;
}

// ---------------------------------------------------------------------------
// Graph-level property checks. Each returns a report whose counterexamples
// would falsify this implementation. The detail:: cores work on word-sized
// graphs and accept precomputed scans, so catalog sweeps can share them.

namespace detail {

inline nlohmann::json mask_json(Mask m) {
  nlohmann::json a = nlohmann::json::array();
  for_each_bit(m, [&](int v) { a.push_back(v); });
  return a;
}

inline std::string graph_label(const Digraph& g, const std::string& label) {
  return label.empty() ? "digraph(n=" + std::to_string(g.order()) + ")" : label;
}

// A graph in both orientations with its k-scans. Full scans (root -1) list
// every fragment; rooted scans list those through the root.
struct BothSides {
  MaskGraph fwd, rev;
  ScanResult f, r;
  BothSides(MaskGraph forward, MaskGraph backward, int k, int root)
      : fwd(std::move(forward)), rev(std::move(backward)),
        f(scan(fwd, k, root, true)), r(scan(rev, k, root, true)) {}
  BothSides(const Digraph& g, int k, int root = -1)
      : BothSides(MaskGraph(g, Sign::forward), MaskGraph(g, Sign::reverse), k, root) {}
};

inline void duality_core(const BothSides& s, int k, const std::string& name, CheckReport& rep) {
  rep.expect(s.f.kappa == s.r.kappa && s.f.separable == s.r.separable, [&] {
    return Counterexample{name, {{"k", k}},
                          {{"kappa_fwd", s.f.kappa}, {"kappa_rev", s.r.kappa}}};
  });
  if (!s.f.separable) return;
  for (Mask x : s.f.fragments) {
    const Mask y = s.fwd.far_side(x);
    const bool ok = s.rev.boundary(y) == s.fwd.boundary(x) && s.rev.far_side(y) == x &&
                    is_fragment(s.rev, k, s.r.kappa, y);
    rep.expect(ok, [&] {
      return Counterexample{name, {{"k", k}, {"X", mask_json(x)}, {"X_far", mask_json(y)}},
                            {{"boundary", mask_json(s.fwd.boundary(x))},
                             {"neg_boundary_of_far", mask_json(s.rev.boundary(y))}}};
    });
  }
}

// Needs full fragment lists on both sides.
inline void fragment_intersection_core(const BothSides& s, int k, const std::string& name,
                                       CheckReport& rep) {
  if (!s.f.separable) {
    rep.skip();
    return;
  }
  struct Side {
    const MaskGraph& g;
    const ScanResult& r;
    const MaskGraph& dual_g;
    const ScanResult& dual_r;
    const char* orientation;
  };
  const Side sides[2] = {{s.fwd, s.f, s.rev, s.r, "forward"}, {s.rev, s.r, s.fwd, s.f, "reverse"}};
  for (const auto& [mg, r, dg, dr, orientation] : sides) {
    auto cex = [&, orient = orientation, kap = r.kappa](const char* prop, Mask a, Mask b) {
      return Counterexample{name,
                            {{"k", k}, {"orientation", orient}, {"property", prop},
                             {"X", mask_json(a)}, {"Y", mask_json(b)}},
                            {{"kappa", kap}}};
    };
    for (Mask x : r.fragments)
      for (Mask y : r.fragments) {
        if (x == y) continue;
        const int meet = popcount(x & y);
        if (meet < k || popcount(x) - meet + k > popcount(mg.far_side(y))) continue;
        rep.expect(is_fragment(mg, k, r.kappa, x & y) && is_fragment(mg, k, r.kappa, x | y),
                   [&] { return cex("intersection-union", x, y); });
      }
    const auto atom_list = atoms_of(r.fragments, r.alpha);
    if (r.alpha <= dr.alpha) {
      for (Mask a : atom_list)
        for (Mask f : r.fragments) {
          if (popcount(a & f) < k) continue;
          rep.expect((a & ~f) == 0, [&] { return cex("atom-inside-fragment", a, f); });
        }
      for (Mask a : atom_list)
        for (Mask b : atom_list) {
          if (a >= b) continue;
          rep.expect(popcount(a & b) <= k - 1, [&] { return cex("atoms-meet", a, b); });
        }
    }
    for (Mask x : r.fragments)
      for (Mask y : dr.fragments) {
        if (popcount(y) < popcount(x)) continue;
        const Mask yv = dg.far_side(y);
        if (popcount(x & yv) < k) continue;
        const bool atom = popcount(x) == r.alpha;
        rep.expect(is_fragment(mg, k, r.kappa, x & yv) && (!atom || (x & ~yv) == 0),
                   [&] { return cex("fragment-meets-dual", x, y); });
      }
  }
}

// Distinct k-atoms meet in at most k-1 points whenever alpha_k <= alpha_-k,
// on either orientation. Needs full fragment lists.
inline void atoms_meet_core(const BothSides& s, int k, const std::string& name, CheckReport& rep) {
  if (!s.f.separable) {
    rep.skip();
    return;
  }
  for (int side = 0; side < 2; ++side) {
    const ScanResult& r = side == 0 ? s.f : s.r;
    const ScanResult& dr = side == 0 ? s.r : s.f;
    if (r.alpha > dr.alpha) continue;
    const auto atom_list = atoms_of(r.fragments, r.alpha);
    for (Mask a : atom_list)
      for (Mask b : atom_list) {
        if (a >= b) continue;
        rep.expect(popcount(a & b) <= k - 1, [&] {
          return Counterexample{name,
                                {{"k", k}, {"orientation", side == 0 ? "forward" : "reverse"},
                                 {"A", mask_json(a)}, {"B", mask_json(b)}},
                                {{"meet", popcount(a & b)}}};
        });
      }
  }
}

// kprev is kappa_(k-1), or 0 when k = 1.
inline void boundary_bounds_core(const MaskGraph& mg, const ScanResult& r, int k, int kprev,
                                 const std::string& name, CheckReport& rep) {
  if (!r.separable) {
    rep.skip();
    return;
  }
  const int kk = r.kappa;
  for (Mask a : r.fragments)
    for (Mask f : r.fragments) {
      const Mask ff = mg.far_side(f);
      if (popcount(a) > popcount(ff) || popcount(a & f) < k - 1) continue;
      const Mask af = mg.far_side(a);
      const int l1 = popcount(a & mg.boundary(f)), r1 = popcount(mg.boundary(a) & ff);
      const int l2 = popcount(mg.image(a) & mg.image(f)), r2 = popcount(a & f) + kk;
      const int l3 = popcount(ff & ~af), r3 = popcount(a & ~f) + kk - kprev;
      rep.expect(l1 <= r1 && l2 <= r2 && l3 <= r3, [&] {
        return Counterexample{name, {{"k", k}, {"A", mask_json(a)}, {"F", mask_json(f)}},
                              {{"ineq1", {l1, r1}}, {"ineq2", {l2, r2}}, {"ineq3", {l3, r3}}}};
      });
    }
}

inline void dual_frag_order_core(const MaskGraph& mg, const ScanResult& r, int k,
                                 const std::string& name, CheckReport& rep) {
  if (!r.separable) {
    rep.skip();
    return;
  }
  std::vector<Mask> far(r.fragments.size());
  for (std::size_t i = 0; i < far.size(); ++i) far[i] = mg.far_side(r.fragments[i]);
  for (std::size_t i = 0; i < far.size(); ++i)
    for (std::size_t j = 0; j < far.size(); ++j) {
      const Mask x = r.fragments[i], y = r.fragments[j];
      const bool inside = (x & ~y) == 0;
      const bool dual_inside = (far[j] & ~far[i]) == 0;
      rep.expect(inside == dual_inside, [&] {
        return Counterexample{name, {{"k", k}, {"X", mask_json(x)}, {"Y", mask_json(y)}},
                              {{"X_in_Y", inside}, {"Yfar_in_Xfar", dual_inside}}};
      });
    }
}

inline void submodularity_pair(const MaskGraph& mg, Mask x, Mask y, const std::string& name,
                               CheckReport& rep) {
  const int lhs = popcount(mg.boundary(x | y)) + popcount(mg.boundary(x & y));
  const int rhs = popcount(mg.boundary(x)) + popcount(mg.boundary(y));
  rep.expect(lhs <= rhs, [&] {
    return Counterexample{name, {{"X", mask_json(x)}, {"Y", mask_json(y)}},
                          {{"lhs", lhs}, {"rhs", rhs}}};
  });
}

// Every subset X of the vertex set with |X| >= k obeys
// |Gamma(X)| >= min(|V|-k+1, |X| + kappa); kappa is the largest such value
// when the graph is k-separable. Vertex set must be 0..n-1 with n <= 20.
inline void isoperimetric_core(const MaskGraph& mg, int k, int kap, bool separable,
                               const std::string& name, CheckReport& rep) {
  const int n = mg.n;
  std::vector<Mask> img(std::size_t{1} << n, 0);
  bool tight = false;
  for (Mask x = 1; x <= mg.full; ++x) {
    const int low = std::countr_zero(x);
    img[x] = img[x & (x - 1)] | mg.rows[low] | bit(low);
    const int size = popcount(x);
    if (size < k) continue;
    const int gx = popcount(img[x]);
    rep.expect(gx >= std::min(n - k + 1, size + kap), [&] {
      return Counterexample{name, {{"k", k}, {"X", mask_json(x)}},
                            {{"image_size", gx}, {"kappa", kap}}};
    });
    if (gx < std::min(n - k + 1, size + kap + 1)) tight = true;
  }
  if (separable)
    rep.expect(tight, [&] {
      return Counterexample{name, {{"k", k}}, {{"kappa", kap}, {"maximal", false}}};
    });
}

}  // namespace detail

// kappa_k = kappa_-k, and X -> X^ maps fragments onto negative fragments
// with d_-(X^) = d(X) and (X^)v = X.
inline CheckReport check_duality(const Digraph& g, int k, const std::string& label = "") {
  detail::require_kappa_domain(g, k, "check_duality");
  detail::require_exhaustive(g, "check_duality");
  CheckReport rep("duality");
  detail::duality_core(detail::BothSides(g, k), k, detail::graph_label(g, label), rep);
  return rep;
}

// |d(X u Y)| + |d(X n Y)| <= |d(X)| + |d(Y)|, over all pairs for graphs with
// at most 6 vertices and over `samples` random pairs otherwise.
inline CheckReport check_submodularity(const Digraph& g, int samples = 10000,
                                       std::uint64_t seed = 0, const std::string& label = "") {
  require_reflexive(g, "check_submodularity");
  CheckReport rep("submodularity");
  const detail::MaskGraph mg(g, Sign::forward);
  const std::string name = detail::graph_label(g, label);
  if (mg.n <= 6) {
    for (detail::Mask x = 0; x <= mg.full; ++x)
      for (detail::Mask y = 0; y <= mg.full; ++y) detail::submodularity_pair(mg, x, y, name, rep);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      const detail::Mask x = rng() & mg.full;
      detail::submodularity_pair(mg, x, rng() & mg.full, name, rep);
    }
  }
  return rep;
}

// |Gamma(X)| >= min(|V|-k+1, |X| + kappa_k) for every X with |X| >= k, and
// kappa_k is the largest value with this property when g is k-separable.
inline CheckReport check_isoperimetric_inequality(const Digraph& g, int k,
                                                  const std::string& label = "") {
  detail::require_kappa_domain(g, k, "check_isoperimetric_inequality");
  if (g.order() > kFlowThreshold)
    throw PreconditionError("check_isoperimetric_inequality: limited to 20 vertices");
  CheckReport rep("isoperimetric-inequality");
  const detail::MaskGraph mg(g, Sign::forward);
  const auto r = detail::scan(mg, k, detail::root_for(g), false);
  detail::isoperimetric_core(mg, k, r.kappa, r.separable, detail::graph_label(g, label), rep);
  return rep;
}

// Fragment intersection properties, each on g and on its reverse:
//  - X, Y fragments, |X n Y| >= k, |X| - |X n Y| + k <= |Y^|: X n Y and
//    X u Y are fragments;
//  - when alpha_k <= alpha_-k, an atom meeting a fragment in k points lies
//    inside it, so distinct atoms meet in at most k-1 points;
//  - X a fragment, Y a negative fragment, |Y| >= |X|, |X n Yv| >= k:
//    X n Yv is a fragment, and X lies in Yv when X is an atom.
inline CheckReport check_fragment_intersection(const Digraph& g, int k,
                                               const std::string& label = "") {
  detail::require_kappa_domain(g, k, "check_fragment_intersection");
  detail::require_exhaustive(g, "check_fragment_intersection");
  CheckReport rep("fragment-intersection");
  detail::fragment_intersection_core(detail::BothSides(g, k), k, detail::graph_label(g, label), rep);
  return rep;
}

// For fragments A, F with |A| <= |F^| and |A n F| >= k-1 (k >= 2):
//   |A n d(F)| <= |d(A) n F^|,
//   |Gamma(A) n Gamma(F)| <= |A n F| + kappa_k,
//   |F^ \ A^| <= |A \ F| + kappa_k - kappa_(k-1).
inline CheckReport check_fragment_boundary_bounds(const Digraph& g, int k,
                                                  const std::string& label = "") {
  detail::require_kappa_domain(g, k, "check_fragment_boundary_bounds");
  detail::require_exhaustive(g, "check_fragment_boundary_bounds");
  if (k < 2) throw PreconditionError("check_fragment_boundary_bounds: k must be at least 2");
  CheckReport rep("fragment-boundary-bounds");
  const detail::MaskGraph mg(g, Sign::forward);
  const auto r = detail::scan(mg, k, -1, true);
  const int kprev = detail::scan(mg, k - 1, detail::root_for(g), false).kappa;
  detail::boundary_bounds_core(mg, r, k, kprev, detail::graph_label(g, label), rep);
  return rep;
}

// For fragments X, Y: X is contained in Y iff Y^ is contained in X^.
inline CheckReport check_dual_frag_order(const Digraph& g, int k, const std::string& label = "") {
  detail::require_kappa_domain(g, k, "check_dual_frag_order");
  detail::require_exhaustive(g, "check_dual_frag_order");
  CheckReport rep("dual-fragment-order");
  const detail::MaskGraph mg(g, Sign::forward);
  detail::dual_frag_order_core(mg, detail::scan(mg, k, -1, true), k, detail::graph_label(g, label),
                               rep);
  return rep;
}

}  // namespace isoperimetric

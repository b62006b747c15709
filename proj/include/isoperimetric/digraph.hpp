#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isoperimetric/element_set.hpp"
#include "isoperimetric/error.hpp"
#include "isoperimetric/group.hpp"

namespace isoperimetric {

enum class Sign { forward, reverse };

inline Sign opposite(Sign s) { return s == Sign::forward ? Sign::reverse : Sign::forward; }

// Finite directed graph with bit-vector adjacency in both directions.
// in(v) is kept as the exact transpose of out(v).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n)
      : out_(n, ElementSet(n)), in_(n, ElementSet(n)) {}

  Digraph(std::size_t n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
    for (auto [u, v] : arcs) add_arc(u, v);
  }

  std::size_t size() const noexcept { return out_.size(); }
  int order() const noexcept { return static_cast<int>(out_.size()); }

  void add_arc(int u, int v) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= size() ||
        static_cast<std::size_t>(v) >= size())
      throw ConstructionError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside vertex range");
    out_[u].insert(v);
    in_[v].insert(u);
  }

  bool has_arc(int u, int v) const { return out_[u].contains(v); }

  // Gamma(v) and Gamma^-1(v).
  const ElementSet& out(int v) const { return out_[v]; }
  const ElementSet& in(int v) const { return in_[v]; }
  const ElementSet& neighbors(int v, Sign sign) const {
    return sign == Sign::forward ? out_[v] : in_[v];
  }

  bool reflexive() const {
    for (std::size_t v = 0; v < size(); ++v)
      if (!out_[v].contains(static_cast<int>(v))) return false;
    return true;
  }

  // Set by cayley_graph: every vertex maps to every other by an automorphism.
  bool vertex_transitive() const noexcept { return vertex_transitive_; }
  void set_vertex_transitive(bool v) noexcept { vertex_transitive_ = v; }

  std::size_t arc_count() const {
    std::size_t c = 0;
    for (const auto& row : out_) c += row.count();
    return c;
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> a;
    for (std::size_t u = 0; u < size(); ++u)
      out_[u].for_each([&](int v) { a.emplace_back(static_cast<int>(u), v); });
    return a;
  }

  // min_x d(x), the least out-valency.
  int min_valency(Sign sign = Sign::forward) const {
    int best = -1;
    for (std::size_t v = 0; v < size(); ++v) {
      const int d = static_cast<int>(neighbors(static_cast<int>(v), sign).count());
      if (best < 0 || d < best) best = d;
    }
    return best < 0 ? 0 : best;
  }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  friend Digraph reverse(const Digraph& g) {
    Digraph r;
    r.out_ = g.in_;
    r.in_ = g.out_;
    r.vertex_transitive_ = g.vertex_transitive_;
    return r;
  }

 private:
  std::vector<ElementSet> out_;
  std::vector<ElementSet> in_;
  bool vertex_transitive_ = false;
};

inline Digraph reflexive_closure(const Digraph& g) {
  Digraph r = g;
  for (int v = 0; v < g.order(); ++v) r.add_arc(v, v);
  return r;
}

inline const Digraph& oriented(const Digraph& g, Sign sign, Digraph& storage) {
  if (sign == Sign::forward) return g;
  storage = reverse(g);
  return storage;
}

inline void require_reflexive(const Digraph& g, const char* op) {
  if (!g.reflexive())
    throw PreconditionError(std::string(op) + ": graph must be reflexive (see reflexive_closure)");
}

// Cay(G, S): arc (x, y) iff x^-1 y in S, so Gamma(F) = FS.
inline Digraph cayley_graph(const FiniteGroup& g, const ElementSet& s) {
  require_universe(g, s);
  if (!s.contains(FiniteGroup::identity()))
    throw PreconditionError("cayley_graph: S must contain the identity");
  Digraph d(static_cast<std::size_t>(g.order()));
  const auto gens = s.indices();
  for (int x = 0; x < g.order(); ++x)
    for (int y : gens) d.add_arc(x, g.mul(x, y));
  d.set_vertex_transitive(true);
  return d;
}

// Gamma(X) (forward) or Gamma^-1(X) (reverse).
inline ElementSet image(const Digraph& g, const ElementSet& x, Sign sign = Sign::forward) {
  ElementSet out = g.empty_set();
  x.for_each([&](int v) { out |= g.neighbors(v, sign); });
  return out;
}

// d(X) = Gamma(X) \ X, or d_-(X) = Gamma^-1(X) \ X.
inline ElementSet boundary(const Digraph& g, const ElementSet& x, Sign sign = Sign::forward) {
  return image(g, x, sign) - x;
}

// X^ = V \ (X u Gamma(X)) forward, X_v = V \ (X u Gamma^-1(X)) reverse.
inline ElementSet co_complement(const Digraph& g, const ElementSet& x, Sign sign = Sign::forward) {
  return (image(g, x, sign) | x).complement();
}

struct Separation {
  bool separable = false;
  std::optional<ElementSet> witness;
};

namespace detail {

// Searches for X with |X| >= k and |X^| >= k by growing X one vertex at a
// time; images only grow, so a branch dies once |V \ Gamma(X)| < k.
inline bool find_separation(const Digraph& g, int k, ElementSet& x, ElementSet& img, int next) {
  const int n = g.order();
  if (static_cast<int>(x.count()) >= k) return true;
  for (int v = next; v < n; ++v) {
    ElementSet grown = img | g.out(v);
    grown.insert(v);
    if (static_cast<int>(n - grown.count()) < k) continue;
    ElementSet saved = img;
    x.insert(v);
    img = grown;
    if (find_separation(g, k, x, img, v + 1)) return true;
    x.erase(v);
    img = saved;
  }
  return false;
}

}  // namespace detail

// Whether some X satisfies k <= min(|X|, |X^|). A witness is returned when
// one exists; it is the first such X in canonical order.
inline Separation is_k_separable(const Digraph& g, int k) {
  require_reflexive(g, "is_k_separable");
  if (k < 1) throw PreconditionError("is_k_separable: k must be positive");
  ElementSet x = g.empty_set(), img = g.empty_set();
  if (detail::find_separation(g, k, x, img, 0)) return {true, x};
  return {false, std::nullopt};
}

// Whether x -> a x permutes the arcs, for every a.
inline bool left_translations_are_automorphisms(const FiniteGroup& grp, const Digraph& g) {
  for (int a = 0; a < grp.order(); ++a)
    for (auto [u, v] : g.arcs())
      if (!g.has_arc(grp.mul(a, u), grp.mul(a, v))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Graph file format: {"n": int, "arcs": [[u,v],...], "reflexive": bool}.
// "reflexive": true adds any missing loops on load.

inline nlohmann::json graph_to_json(const Digraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  return {{"n", g.size()}, {"arcs", std::move(arcs)}, {"reflexive", g.reflexive()}};
}

inline Digraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<long long>();
    if (n < 1) throw ConstructionError("graph: n must be positive");
    Digraph g(static_cast<std::size_t>(n));
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw ConstructionError("graph: arcs must be pairs");
      g.add_arc(a[0].get<int>(), a[1].get<int>());
    }
    if (j.value("reflexive", false)) g = reflexive_closure(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("graph: malformed JSON: ") + e.what());
  }
}

inline Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("graph: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError("graph: invalid JSON in '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace isoperimetric

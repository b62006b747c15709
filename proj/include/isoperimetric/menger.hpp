#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "isoperimetric/digraph.hpp"
#include "isoperimetric/element_set.hpp"
#include "isoperimetric/error.hpp"

namespace isoperimetric {

// Openly disjoint paths from source to target. A fan has target -1 and
// paths ending at distinct members of its target set.
struct PathFamily {
  int source = 0;
  int target = 0;
  std::vector<std::vector<int>> paths;
};

// Source side of a minimum vertex cut: x in set, y outside Gamma(set).
struct KPart {
  ElementSet set;
  int boundary_size = 0;
  int x = 0;
  int y = 0;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;
};

// Raised when fewer disjoint paths exist than requested; carries a minimum
// cut as witness.
class ConnectivityError : public PreconditionError {
 public:
  ConnectivityError(const std::string& what, KPart witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const KPart& witness() const noexcept { return witness_; }

 private:
  KPart witness_;
};

namespace detail {

// Dinic max-flow on an explicit network.
class Dinic {
 public:
  explicit Dinic(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  int add_edge(int u, int v, int cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(v), cap_.push_back(cap), next_.push_back(head_[u]), head_[u] = id;
    to_.push_back(u), cap_.push_back(0), next_.push_back(head_[v]), head_[v] = id + 1;
    return id;
  }

  int max_flow(int s, int t, int limit = INT_MAX) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      it_ = head_;
      while (flow < limit) {
        const int f = dfs(s, t, limit - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  // Nodes reachable from s in the residual network.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
    }
    return seen;
  }

  // Flow carried by the forward edge `id`.
  int flow_on(int id) const { return cap_[id + 1]; }
  int head(int u) const { return head_[u]; }
  int next(int e) const { return next_[e]; }
  int to(int e) const { return to_[e]; }
  bool forward(int e) const { return (e & 1) == 0; }
  void consume(int e) {
    ++cap_[e];
    --cap_[e + 1];
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int pushed) {
    if (u == t) return pushed;
    for (int& e = it_[u]; e >= 0; e = next_[e]) {
      const int v = to_[e];
      if (cap_[e] <= 0 || level_[v] != level_[u] + 1) continue;
      const int d = dfs(v, t, std::min(pushed, cap_[e]));
      if (d > 0) {
        cap_[e] -= d;
        cap_[e ^ 1] += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, it_;
  std::vector<int> to_, cap_, next_;
};

inline int in_node(int v) { return 2 * v; }
inline int out_node(int v) { return 2 * v + 1; }

// Vertex-split network: v_in -> v_out with capacity 1 except at the given
// unbounded vertices; arc (u, v) becomes u_out -> v_in. Loops are dropped.
inline Dinic split_network(const Digraph& g, std::initializer_list<int> unbounded, int extra_nodes = 0) {
  const int n = g.order();
  Dinic d(2 * n + extra_nodes);
  for (int v = 0; v < n; ++v) {
    const bool free = std::find(unbounded.begin(), unbounded.end(), v) != unbounded.end();
    d.add_edge(in_node(v), out_node(v), free ? n : 1);
  }
  for (int u = 0; u < n; ++u)
    g.out(u).for_each([&](int v) {
      if (u != v) d.add_edge(out_node(u), in_node(v), n);
    });
  return d;
}

inline void require_pair(const Digraph& g, int x, int y, const char* op) {
  require_reflexive(g, op);
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw PreconditionError(std::string(op) + ": vertex out of range");
  if (g.has_arc(x, y) || x == y)
    throw PreconditionError(std::string(op) + ": adjacent pair (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
}

// Follows one unit of flow from x_out to stop_node, consuming it. Returns the
// vertices visited, in order, followed by end_vertex when it is set.
inline std::vector<int> take_path(Dinic& d, int x, int stop_node, int end_vertex) {
  std::vector<int> path{x};
  int node = out_node(x);
  while (node != stop_node) {
    int chosen = -1;
    for (int e = d.head(node); e >= 0; e = d.next(e))
      if (d.forward(e) && d.flow_on(e) > 0) {
        chosen = e;
        break;
      }
    if (chosen < 0) throw Error("flow decomposition ended early");
    d.consume(chosen);
    node = d.to(chosen);
    if (node != stop_node && (node & 1) == 0) path.push_back(node / 2);
  }
  if (end_vertex >= 0) path.push_back(end_vertex);
  return path;
}

inline KPart kpart_from_residual(const Digraph& g, const Dinic& d, int x, int y) {
  const auto seen = d.reachable(out_node(x));
  ElementSet a = g.empty_set();
  for (int v = 0; v < g.order(); ++v)
    if (seen[out_node(v)]) a.insert(v);
  a.insert(x);
  const ElementSet b = boundary(g, a);
  return {a, static_cast<int>(b.count()), x, y};
}

}  // namespace detail

// Largest k such that x is k-connected to y: the size of a minimum vertex
// cut, computed as a unit-capacity max-flow on the vertex-split network.
inline int local_connectivity(const Digraph& g, int x, int y) {
  detail::require_pair(g, x, y, "local_connectivity");
  auto d = detail::split_network(g, {x, y});
  return d.max_flow(detail::out_node(x), detail::in_node(y));
}

// A set A with x in A, y outside Gamma(A), |d(A)| = local_connectivity(x, y).
// It satisfies d_-(A^) = d(A).
inline KPart min_k_part(const Digraph& g, int x, int y) {
  detail::require_pair(g, x, y, "min_k_part");
  auto d = detail::split_network(g, {x, y});
  const int flow = d.max_flow(detail::out_node(x), detail::in_node(y));
  KPart part = detail::kpart_from_residual(g, d, x, y);
  const ElementSet far = co_complement(g, part.set);
  if (part.boundary_size != flow || far.contains(x) || !far.contains(y) ||
      boundary(g, far, Sign::reverse) != boundary(g, part.set))
    throw Error("min_k_part: cut extracted from the flow is not a k-part");
  return part;
}

// k openly disjoint x-y paths, or ConnectivityError with a minimum cut.
inline PathFamily disjoint_paths(const Digraph& g, int x, int y, int k) {
  detail::require_pair(g, x, y, "disjoint_paths");
  if (k < 0) throw PreconditionError("disjoint_paths: k must be nonnegative");
  PathFamily fam{x, y, {}};
  if (k == 0) return fam;
  auto d = detail::split_network(g, {x, y});
  const int flow = d.max_flow(detail::out_node(x), detail::in_node(y));
  if (flow < k)
    throw ConnectivityError("disjoint_paths: " + std::to_string(x) + " is only " +
                                std::to_string(flow) + "-connected to " + std::to_string(y),
                            detail::kpart_from_residual(g, d, x, y));
  for (int i = 0; i < k; ++i) fam.paths.push_back(detail::take_path(d, x, detail::in_node(y), y));
  return fam;
}

// Openly disjoint paths from x to as many members of T as possible, each
// ending at a distinct member. x must not lie in T.
inline PathFamily fan(const Digraph& g, int x, const ElementSet& targets) {
  require_reflexive(g, "fan");
  if (targets.universe() != g.size()) throw PreconditionError("fan: universe mismatch");
  if (targets.contains(x)) throw PreconditionError("fan: source lies in the target set");
  const int n = g.order();
  const int sink = 2 * n;
  auto d = detail::split_network(g, {x}, 1);
  targets.for_each([&](int t) { d.add_edge(detail::out_node(t), sink, 1); });
  d.max_flow(detail::out_node(x), sink);
  // A path stops at the target whose out-node feeds the sink.
  PathFamily fam{x, -1, {}};
  while (true) {
    bool any = false;
    for (int e = d.head(detail::out_node(x)); e >= 0; e = d.next(e))
      if (d.forward(e) && d.flow_on(e) > 0) any = true;
    if (!any) break;
    fam.paths.push_back(detail::take_path(d, x, sink, -1));
  }
  std::sort(fam.paths.begin(), fam.paths.end());
  return fam;
}

// Empty string when `fam` is a valid family of k openly disjoint paths,
// otherwise the first defect found.
inline std::string path_family_defect(const Digraph& g, const PathFamily& fam, int k) {
  if (static_cast<int>(fam.paths.size()) != k) return "wrong number of paths";
  std::vector<int> used(g.size(), 0);
  for (const auto& p : fam.paths) {
    if (p.size() < 2) return "path too short";
    if (p.front() != fam.source) return "path does not start at the source";
    if (fam.target >= 0 && p.back() != fam.target) return "path does not end at the target";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.order() || p[i + 1] < 0 || p[i + 1] >= g.order())
        return "vertex out of range";
      if (!g.has_arc(p[i], p[i + 1])) return "missing arc";
    }
    const std::size_t last = fam.target >= 0 ? p.size() - 1 : p.size();
    for (std::size_t i = 1; i < last; ++i) {
      if (p[i] == fam.source || p[i] == fam.target) return "endpoint repeated inside a path";
      if (++used[p[i]] > 1) return "paths share an inner vertex";
    }
  }
  return "";
}

inline bool verify_path_family(const Digraph& g, const PathFamily& fam, int k) {
  return path_family_defect(g, fam, k).empty();
}

// kappa_1 as the least local connectivity over non-adjacent pairs; one
// source vertex suffices for vertex-transitive graphs. |V| - 1 when every
// pair is adjacent.
inline int kappa1_flow(const Digraph& g) {
  require_reflexive(g, "kappa1_flow");
  const int n = g.order();
  int best = n - 1;
  const int sources = g.vertex_transitive() ? std::min(n, 1) : n;
  for (int x = 0; x < sources; ++x)
    for (int y = 0; y < n; ++y) {
      if (g.has_arc(x, y)) continue;
      auto d = detail::split_network(g, {x, y});
      best = std::min(best, d.max_flow(detail::out_node(x), detail::in_node(y), best));
    }
  return best;
}

namespace detail {

// Maximum matching from X into V \ X along arcs, Kuhn's algorithm on
// word-sized adjacency.
inline std::vector<std::pair<int, int>> max_matching_small(const Digraph& g, const ElementSet& x) {
  const int n = g.order();
  const std::uint64_t xs = x.to_mask();
  std::vector<std::uint64_t> adj(n, 0);
  x.for_each([&](int v) { adj[v] = g.out(v).to_mask() & ~xs; });
  std::vector<int> match_right(n, -1);
  std::uint64_t visited = 0;
  auto augment = [&](auto& self, int u) -> bool {
    std::uint64_t cand = adj[u] & ~visited;
    while (cand != 0) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      visited |= std::uint64_t{1} << v;
      if (match_right[v] < 0 || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  x.for_each([&](int u) {
    visited = 0;
    augment(augment, u);
  });
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v)
    if (match_right[v] >= 0) pairs.emplace_back(match_right[v], v);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// The same matching as a flow: a -> X, X -> V\X along arcs, V\X -> b.
inline std::vector<std::pair<int, int>> max_matching_flow(const Digraph& g, const ElementSet& x) {
  const int n = g.order();
  const int a = 2 * n, b = 2 * n + 1;
  Dinic d(2 * n + 2);
  std::vector<std::pair<int, std::pair<int, int>>> edges;
  for (int u = 0; u < n; ++u) {
    if (x.contains(u)) {
      d.add_edge(a, u, 1);
      g.out(u).for_each([&](int v) {
        if (!x.contains(v)) edges.push_back({d.add_edge(u, n + v, 1), {u, v}});
      });
    } else {
      d.add_edge(n + u, b, 1);
    }
  }
  d.max_flow(a, b);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [id, uv] : edges)
    if (d.flow_on(id) > 0) pairs.push_back(uv);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace detail

// k arcs (x_i, y_i) with distinct x_i in X and distinct y_i outside X.
// Requires k <= kappa_1(g) and k <= min(|X|, |V \ X|); kappa_1 is computed by
// flow unless supplied.
inline Matching strong_iso_matching(const Digraph& g, const ElementSet& x, int k,
                                    std::optional<int> known_kappa1 = std::nullopt) {
  require_reflexive(g, "strong_iso_matching");
  if (x.universe() != g.size()) throw PreconditionError("strong_iso_matching: universe mismatch");
  if (k < 0) throw PreconditionError("strong_iso_matching: k must be nonnegative");
  const int inside = static_cast<int>(x.count());
  if (std::min(inside, g.order() - inside) < k)
    throw PreconditionError("strong_iso_matching: need min(|X|, |V \\ X|) >= k");
  const int k1 = known_kappa1 ? *known_kappa1 : kappa1_flow(g);
  if (k > k1)
    throw PreconditionError("strong_iso_matching: k = " + std::to_string(k) +
                            " exceeds kappa_1 = " + std::to_string(k1));
  auto pairs = g.size() <= 64 ? detail::max_matching_small(g, x) : detail::max_matching_flow(g, x);
  if (static_cast<int>(pairs.size()) < k)
    throw Error("strong_iso_matching: maximum matching smaller than kappa_1 allows");
  pairs.resize(static_cast<std::size_t>(k));
  return {std::move(pairs)};
}

// Whether `m` is a size-k matching from X into V \ X along arcs.
inline bool verify_matching(const Digraph& g, const ElementSet& x, const Matching& m, int k) {
  if (static_cast<int>(m.pairs.size()) != k) return false;
  std::vector<char> left(g.size(), 0), right(g.size(), 0);
  for (auto [u, v] : m.pairs) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
    if (!x.contains(u) || x.contains(v) || !g.has_arc(u, v)) return false;
    if (left[u]++ || right[v]++) return false;
  }
  return true;
}

}  // namespace isoperimetric

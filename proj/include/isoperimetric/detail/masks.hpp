#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "isoperimetric/digraph.hpp"
#include "isoperimetric/element_set.hpp"
#include "isoperimetric/error.hpp"
#include "isoperimetric/group.hpp"

// Single-word set representation for the enumeration-bound inner loops.
// Everything here requires at most 64 vertices.
namespace isoperimetric::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline void require_word_sized(std::size_t n) {
  if (n > 64) throw PreconditionError("operation limited to at most 64 vertices");
}

inline ElementSet to_set(std::size_t universe, Mask m) { return ElementSet::from_mask(universe, m); }

// Adjacency rows of one orientation of a graph. The vertex set is `full`,
// which may be a proper subset of 0..n-1.
struct MaskGraph {
  int n = 0;
  Mask full = 0;
  std::vector<Mask> rows;

  MaskGraph() = default;
  MaskGraph(const Digraph& g, Sign sign) : n(g.order()), full(full_mask(g.order())) {
    require_word_sized(g.size());
    rows.resize(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v, sign).to_mask();
  }

  int order() const { return popcount(full); }
  bool has_vertex(int v) const { return (full >> v) & 1U; }

  Mask image(Mask x) const {
    Mask out = 0;
    for_each_bit(x, [&](int v) { out |= rows[v]; });
    return out;
  }
  Mask boundary(Mask x) const { return image(x) & ~x; }
  // V \ (X u Gamma(X))
  Mask far_side(Mask x) const { return full & ~(image(x) | x); }
};

// Group arithmetic on word-sized sets.
struct MaskGroup {
  int n = 0;
  Mask full = 0;
  const FiniteGroup* group = nullptr;

  explicit MaskGroup(const FiniteGroup& g) : n(g.order()), full(full_mask(g.order())), group(&g) {
    require_word_sized(static_cast<std::size_t>(g.order()));
  }

  Mask left_translate(int a, Mask x) const {
    Mask out = 0;
    for_each_bit(x, [&](int e) { out |= bit(group->mul(a, e)); });
    return out;
  }
  Mask right_translate(Mask x, int a) const {
    Mask out = 0;
    for_each_bit(x, [&](int e) { out |= bit(group->mul(e, a)); });
    return out;
  }
  Mask product(Mask a, Mask b) const {
    Mask out = 0;
    for_each_bit(a, [&](int x) { out |= left_translate(x, b); });
    return out;
  }
  Mask inverse(Mask x) const {
    Mask out = 0;
    for_each_bit(x, [&](int e) { out |= bit(group->inverse(e)); });
    return out;
  }
  Mask conjugate(int a, Mask x) const {
    return right_translate(left_translate(a, x), group->inverse(a));
  }
  Mask generated(Mask s) const {
    Mask h = bit(0), frontier = bit(0);
    while (frontier != 0) {
      const Mask grown = product(frontier, s) & ~h;
      h |= grown;
      frontier = grown;
    }
    return h;
  }
  bool is_subgroup(Mask h) const {
    if ((h & 1) == 0) return false;
    bool closed = true;
    for_each_bit(h, [&](int x) {
      if (closed && (left_translate(x, h) & ~h) != 0) closed = false;
    });
    return closed;
  }
  // {x : xX = X}
  Mask left_stabilizer(Mask x) const {
    Mask out = 0;
    for (int a = 0; a < n; ++a)
      if (left_translate(a, x) == x) out |= bit(a);
    return out;
  }
  Mask right_stabilizer(Mask x) const {
    Mask out = 0;
    for (int a = 0; a < n; ++a)
      if (right_translate(x, a) == x) out |= bit(a);
    return out;
  }
  // Rows of Cay(G, S): row[x] = xS.
  std::vector<Mask> cayley_rows(Mask s) const {
    std::vector<Mask> rows(n);
    for (int x = 0; x < n; ++x) rows[x] = left_translate(x, s);
    return rows;
  }
  MaskGraph cayley(Mask s) const { return cayley_on(s, full); }
  // Cay(<S>, S) as the component of Cay(G, S) on the vertex set `h` = <S>.
  MaskGraph cayley_on(Mask s, Mask h) const {
    MaskGraph g;
    g.n = n;
    g.full = h;
    g.rows.assign(n, 0);
    for_each_bit(h, [&](int x) { g.rows[x] = left_translate(x, s); });
    return g;
  }
};

}  // namespace isoperimetric::detail

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isoperimetric/element_set.hpp"
#include "isoperimetric/error.hpp"

namespace isoperimetric {

// A finite group given by its full multiplication table. Elements are the
// indices 0..n-1 and the identity is always index 0.
class FiniteGroup {
 public:
  // Validates the table (Latin square, identity, inverses, associativity) and
  // relabels so that the identity becomes index 0. Associativity is checked
  // on every triple up to order 64 and on a fixed-seed sample beyond that.
  FiniteGroup(std::string name, const std::vector<std::vector<int>>& table)
      : name_(std::move(name)) {
    const std::size_t n = table.size();
    if (n == 0) throw ConstructionError("table shape: group must have at least one element");
    for (const auto& row : table)
      if (row.size() != n) throw ConstructionError("table shape: table is not square");
    n_ = static_cast<int>(n);
    table_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const int v = table[x][y];
        if (v < 0 || v >= n_)
          throw ConstructionError("table shape: entry " + std::to_string(v) + " out of range");
        table_[x * n + y] = v;
      }
    validate_and_normalize();
  }

  int order() const noexcept { return n_; }
  static constexpr int identity() noexcept { return 0; }
  const std::string& name() const noexcept { return name_; }

  int mul(int x, int y) const noexcept { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  int inverse(int x) const noexcept { return inverse_[x]; }

  bool is_abelian() const noexcept {
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  int element_order(int x) const noexcept {
    int k = 1;
    for (int p = x; p != identity(); p = mul(p, x)) ++k;
    return k;
  }

  ElementSet empty_set() const { return ElementSet(static_cast<std::size_t>(n_)); }
  ElementSet all() const { return ElementSet::full(static_cast<std::size_t>(n_)); }
  ElementSet set(std::initializer_list<int> elems) const {
    return ElementSet(static_cast<std::size_t>(n_), elems);
  }

  // Row-major table, used by the CLI exporter and tests.
  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) t[x][y] = mul(x, y);
    return t;
  }

 private:
  void validate_and_normalize() {
    const int n = n_;
    std::vector<char> seen(n);
    for (int x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int y = 0; y < n; ++y) {
        if (seen[mul(x, y)])
          throw ConstructionError("latin square: row " + std::to_string(x) + " repeats element " +
                                  std::to_string(mul(x, y)));
        seen[mul(x, y)] = 1;
      }
    }
    for (int y = 0; y < n; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int x = 0; x < n; ++x) {
        if (seen[mul(x, y)])
          throw ConstructionError("latin square: column " + std::to_string(y) +
                                  " repeats element " + std::to_string(mul(x, y)));
        seen[mul(x, y)] = 1;
      }
    }

    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = mul(c, x) == x && mul(x, c) == x;
      if (ok) e = c;
    }
    if (e < 0) throw ConstructionError("identity: no two-sided identity element");

    inverse_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (mul(x, y) == e) inverse_[x] = y;
      if (mul(inverse_[x], x) != e)
        throw ConstructionError("inverse: element " + std::to_string(x) +
                                " has no two-sided inverse");
    }

    auto assoc_fails = [&](int x, int y, int z) { return mul(mul(x, y), z) != mul(x, mul(y, z)); };
    auto assoc_error = [&](int x, int y, int z) {
      return ConstructionError("associativity: (" + std::to_string(x) + "*" + std::to_string(y) +
                               ")*" + std::to_string(z) + " differs");
    };
    if (n <= 64) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (assoc_fails(x, y, z)) throw assoc_error(x, y, z);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int i = 0; i < 200000; ++i) {
        const int x = pick(rng), y = pick(rng), z = pick(rng);
        if (assoc_fails(x, y, z)) throw assoc_error(x, y, z);
      }
    }

    if (e != 0) {
      // Swap labels 0 and e.
      auto relabel = [e](int v) { return v == 0 ? e : (v == e ? 0 : v); };
      std::vector<int> t(table_.size());
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[relabel(x) * n + relabel(y)] = relabel(mul(x, y));
      table_ = std::move(t);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (mul(x, y) == 0) inverse_[x] = y;
    }
  }

  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------
// Named families.

namespace families {

inline FiniteGroup cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteGroup("cyclic:" + std::to_string(n), t);
}

// Symmetries of the n-gon, order 2n. Index i < n is r^i, index n + i is s r^i.
inline FiniteGroup dihedral(int n) {
  if (n < 1) throw PreconditionError("dihedral: n must be positive");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x / n, i = x % n, b = y / n, j = y % n;
      // s^a r^i s^b r^j = s^(a+b) r^((-1)^b i + j)
      const int rot = ((b == 0 ? i : n - i) + j) % n;
      t[x][y] = ((a + b) % 2) * n + rot;
    }
  return FiniteGroup("dihedral:" + std::to_string(n), t);
}

// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>.
// Index i < 2n is a^i, index 2n + i is x a^i.
inline FiniteGroup dicyclic(int n) {
  if (n < 1) throw PreconditionError("dicyclic: n must be positive");
  const int m = 2 * n, order = 4 * n;
  auto md = [m](int v) { return ((v % m) + m) % m; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int p = 0; p < order; ++p)
    for (int q = 0; q < order; ++q) {
      const bool px = p >= m, qx = q >= m;
      const int i = p % m, j = q % m;
      if (!px && !qx) t[p][q] = md(i + j);
      else if (!px && qx) t[p][q] = m + md(j - i);
      else if (px && !qx) t[p][q] = m + md(i + j);
      else t[p][q] = md(n + j - i);
    }
  return FiniteGroup("dicyclic:" + std::to_string(n), t);
}

namespace detail {

inline FiniteGroup permutation_group(std::string name, int n, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2 != 0) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<int> c(n);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      // (x*y)(i) = x(y(i))
      for (int i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];
      t[x][y] = index_of(c);
    }
  return FiniteGroup(std::move(name), t);
}

}  // namespace detail

// Permutations of n points in lexicographic order (identity first).
inline FiniteGroup symmetric(int n) {
  if (n < 1 || n > 6) throw PreconditionError("symmetric: n must be in 1..6");
  return detail::permutation_group("symmetric:" + std::to_string(n), n, false);
}

inline FiniteGroup alternating(int n) {
  if (n < 1 || n > 6) throw PreconditionError("alternating: n must be in 1..6");
  return detail::permutation_group("alternating:" + std::to_string(n), n, true);
}

// Elements (g, h) are indexed g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int a = g.order(), b = h.order();
  std::vector<std::vector<int>> t(a * b, std::vector<int>(a * b));
  for (int x = 0; x < a * b; ++x)
    for (int y = 0; y < a * b; ++y)
      t[x][y] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
  return FiniteGroup("product:" + g.name() + "," + h.name(), t);
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline FiniteGroup elementary_abelian(int p, int rank) {
  if (!is_prime(p)) throw PreconditionError("elementary: " + std::to_string(p) + " is not prime");
  if (rank < 1) throw PreconditionError("elementary: rank must be positive");
  FiniteGroup g = cyclic(p);
  for (int i = 1; i < rank; ++i) g = direct_product(g, cyclic(p));
  std::vector<std::vector<int>> t = g.table();
  return FiniteGroup("elementary:" + std::to_string(p) + "^" + std::to_string(rank), t);
}

// Z_m x| Z_n where the generator of Z_n acts on Z_m by a -> r a.
// Element (a, b) has index b * m + a.
inline FiniteGroup semidirect(int m, int n, int r) {
  if (m < 1 || n < 1) throw PreconditionError("semidirect: orders must be positive");
  if (std::gcd(r, m) != 1) throw PreconditionError("semidirect: r must be a unit mod m");
  std::vector<long long> rpow(n + 1, 1 % m);
  for (int i = 1; i <= n; ++i) rpow[i] = (rpow[i - 1] * (((r % m) + m) % m)) % m;
  if (rpow[n] != 1 % m) throw PreconditionError("semidirect: r^n must be 1 mod m");
  const int order = m * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a1 = x % m, b1 = x / m, a2 = y % m, b2 = y / m;
      const int a = static_cast<int>((a1 + rpow[b1] * a2) % m);
      t[x][y] = ((b1 + b2) % n) * m + a;
    }
  return FiniteGroup("semidirect:" + std::to_string(m) + "," + std::to_string(n) + "," +
                         std::to_string(r),
                     t);
}

}  // namespace families

// ---------------------------------------------------------------------------
// Group-spec grammar:
//   cyclic:<n> | dihedral:<n> | symmetric:<n> | alternating:<n> | dicyclic:<n>
//   | quaternion:<order> | elementary:<p>^<r> | semidirect:<m>,<n>,<r>
//   | product:<spec>,<spec> | table:<path>

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FiniteGroup parse_all() {
    FiniteGroup g = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  FiniteGroup parse() {
    const std::string family = word();
    expect(':');
    if (family == "cyclic") return families::cyclic(number());
    if (family == "dihedral") return families::dihedral(number());
    if (family == "symmetric") return families::symmetric(number());
    if (family == "alternating") return families::alternating(number());
    if (family == "dicyclic") return families::dicyclic(number());
    if (family == "quaternion") {
      const int order = number();
      if (order < 8 || order % 4 != 0) fail("quaternion order must be a multiple of 4, at least 8");
      FiniteGroup g = families::dicyclic(order / 4);
      return FiniteGroup("quaternion:" + std::to_string(order), g.table());
    }
    if (family == "elementary") {
      const int p = number();
      expect('^');
      return families::elementary_abelian(p, number());
    }
    if (family == "semidirect") {
      const int m = number();
      expect(',');
      const int n = number();
      expect(',');
      return families::semidirect(m, n, number());
    }
    if (family == "product") {
      FiniteGroup a = parse();
      expect(',');
      FiniteGroup b = parse();
      return families::direct_product(a, b);
    }
    if (family == "table") {
      const std::string path(text_.substr(pos_));
      pos_ = text_.size();
      return load_table(path);
    }
    fail("unknown group family '" + family + "'");
  }

  static FiniteGroup load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConstructionError("table: cannot open '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConstructionError("table: invalid JSON in '" + path + "': " + e.what());
    }
    if (!j.contains("table")) throw ConstructionError("table: missing \"table\" field");
    auto t = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != t.size())
      throw ConstructionError("table shape: \"order\" does not match table size");
    return FiniteGroup("table:" + path, t);
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a group family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ConstructionError("group spec '" + std::string(text_) + "' at offset " +
                            std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FiniteGroup make_group(std::string_view spec) {
  return detail::SpecParser(spec).parse_all();
}

inline FiniteGroup make_group(std::string name, const std::vector<std::vector<int>>& table) {
  return FiniteGroup(std::move(name), table);
}

// Parses "0,1,3" (whitespace tolerated, empty string allowed) into a set.
inline ElementSet parse_element_set(std::size_t universe, std::string_view text) {
  ElementSet s(universe);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw PreconditionError("bad element list '" + std::string(text) + "'");
    if (v < 0 || static_cast<std::size_t>(v) >= universe)
      throw PreconditionError("element " + std::to_string(v) + " outside 0.." +
                              std::to_string(universe - 1));
    s.insert(v);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Set arithmetic.

inline void require_universe(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.order()))
    throw PreconditionError("set universe " + std::to_string(s.universe()) +
                            " does not match group order " + std::to_string(g.order()));
}

// AB = {xy : x in A, y in B}.
inline ElementSet minkowski_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  require_universe(g, a);
  require_universe(g, b);
  ElementSet out = g.empty_set();
  const auto bi = b.indices();
  a.for_each([&](int x) {
    for (int y : bi) out.insert(g.mul(x, y));
  });
  return out;
}

inline ElementSet left_translate(const FiniteGroup& g, int a, const ElementSet& x) {
  ElementSet out = g.empty_set();
  x.for_each([&](int e) { out.insert(g.mul(a, e)); });
  return out;
}

inline ElementSet right_translate(const FiniteGroup& g, const ElementSet& x, int a) {
  ElementSet out = g.empty_set();
  x.for_each([&](int e) { out.insert(g.mul(e, a)); });
  return out;
}

inline ElementSet inverse_set(const FiniteGroup& g, const ElementSet& x) {
  ElementSet out = g.empty_set();
  x.for_each([&](int e) { out.insert(g.inverse(e)); });
  return out;
}

// a X a^-1
inline ElementSet conjugate_set(const FiniteGroup& g, int a, const ElementSet& x) {
  ElementSet out = g.empty_set();
  x.for_each([&](int e) { out.insert(g.mul(g.mul(a, e), g.inverse(a))); });
  return out;
}

// S^j, the j-fold product; S^0 = {1}.
inline ElementSet product_power(const FiniteGroup& g, const ElementSet& s, int j) {
  ElementSet p = g.set({FiniteGroup::identity()});
  for (int i = 0; i < j; ++i) p = minkowski_product(g, p, s);
  return p;
}

// <S>, computed as the closure of {1} under right multiplication by S.
inline ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s) {
  require_universe(g, s);
  ElementSet h = g.set({FiniteGroup::identity()});
  std::vector<int> frontier{FiniteGroup::identity()};
  const auto gens = s.indices();
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y : gens) {
        const int z = g.mul(x, y);
        if (!h.contains(z)) {
          h.insert(z);
          next.push_back(z);
        }
      }
    frontier = std::move(next);
  }
  return h;
}

inline bool generates(const FiniteGroup& g, const ElementSet& s) {
  return subgroup_generated(g, s).count() == static_cast<std::size_t>(g.order());
}

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& h) {
  require_universe(g, h);
  if (!h.contains(FiniteGroup::identity())) return false;
  const auto e = h.indices();
  for (int x : e)
    for (int y : e)
      if (!h.contains(g.mul(x, y))) return false;
  return true;
}

inline std::optional<int> non_normal_witness(const FiniteGroup& g, const ElementSet& h) {
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_set(g, x, h) != h) return x;
  return std::nullopt;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& h) {
  return is_subgroup(g, h) && !non_normal_witness(g, h);
}

// N_G(H) = {x : xHx^-1 = H}
inline ElementSet normalizer(const FiniteGroup& g, const ElementSet& h) {
  ElementSet out = g.empty_set();
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_set(g, x, h) == h) out.insert(x);
  return out;
}

struct Stabilizers {
  ElementSet left;   // {x : xX = X}
  ElementSet right;  // {x : Xx = X}
};

inline Stabilizers stabilizers(const FiniteGroup& g, const ElementSet& x) {
  require_universe(g, x);
  if (x.empty()) throw PreconditionError("stabilizers: set must be nonempty");
  Stabilizers st{g.empty_set(), g.empty_set()};
  for (int a = 0; a < g.order(); ++a) {
    if (left_translate(g, a, x) == x) st.left.insert(a);
    if (right_translate(g, x, a) == x) st.right.insert(a);
  }
  return st;
}

enum class Side { left, right };

struct CosetDecomposition {
  ElementSet subgroup;
  std::vector<ElementSet> parts;  // ordered by smallest element
  Side side = Side::left;
};

// The coset xH (left) or Hx (right).
inline ElementSet coset(const FiniteGroup& g, int x, const ElementSet& h, Side side) {
  return side == Side::left ? left_translate(g, x, h) : right_translate(g, h, x);
}

inline CosetDecomposition coset_decomposition(const FiniteGroup& g, const ElementSet& a,
                                              const ElementSet& h, Side side) {
  require_universe(g, a);
  if (!is_subgroup(g, h)) throw PreconditionError("coset_decomposition: H is not a subgroup");
  CosetDecomposition d{h, {}, side};
  ElementSet rest = a;
  while (!rest.empty()) {
    const ElementSet part = coset(g, rest.first(), h, side) & a;
    d.parts.push_back(part);
    rest -= part;
  }
  return d;
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // element of G -> coset index; coset of 1 is 0
};

inline QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& h) {
  require_universe(g, h);
  if (!is_subgroup(g, h)) throw PreconditionError("quotient_group: H is not a subgroup");
  if (auto w = non_normal_witness(g, h))
    throw PreconditionError("quotient_group: H is not normal, witness x = " + std::to_string(*w) +
                            " has xHx^-1 != H");
  std::vector<int> proj(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (proj[x] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    left_translate(g, x, h).for_each([&](int y) { proj[y] = idx; });
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = proj[g.mul(reps[i], reps[j])];
  return {FiniteGroup(g.name() + "/H", t), std::move(proj)};
}

// A subgroup re-indexed as a standalone group. Elements keep their relative
// order, so the identity stays at index 0.
struct SubgroupEmbedding {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup

  ElementSet pull(const ElementSet& parent_set) const {
    ElementSet out(to_parent.size());
    parent_set.for_each([&](int x) {
      if (from_parent[x] >= 0) out.insert(from_parent[x]);
    });
    return out;
  }
  ElementSet push(const ElementSet& sub_set) const {
    ElementSet out(from_parent.size());
    sub_set.for_each([&](int x) { out.insert(to_parent[x]); });
    return out;
  }
};

inline SubgroupEmbedding subgroup_as_group(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw PreconditionError("subgroup_as_group: not a subgroup");
  std::vector<int> to_parent = h.indices();
  std::vector<int> from_parent(g.order(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = static_cast<int>(i);
  const int m = static_cast<int>(to_parent.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = from_parent[g.mul(to_parent[i], to_parent[j])];
  return {FiniteGroup(g.name() + "<sub>", t), std::move(to_parent), std::move(from_parent)};
}

// p(G): the least order >= 2 of a subgroup. nullopt stands for infinity and
// only occurs for the trivial group. The least such subgroup is cyclic, so it
// suffices to scan element orders.
inline std::optional<int> min_subgroup_order(const FiniteGroup& g) {
  std::optional<int> best;
  for (int x = 1; x < g.order(); ++x) {
    const int o = g.element_order(x);
    if (!best || o < *best) best = o;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Progressions.

struct Progression {
  int ratio = 0;
  int start = 0;  // exponent j (literal) or translating element a (translated)
};

enum class ProgressionForm {
  literal,     // S = {r^j, r^(j+1), ..., r^(j+|S|-1)}
  translated,  // S = a {1, r, ..., r^(|S|-1)}
};

// Every (r, start) realizing S in the requested form, in increasing r.
inline std::vector<Progression> progressions(const FiniteGroup& g, const ElementSet& s,
                                             ProgressionForm form = ProgressionForm::literal) {
  require_universe(g, s);
  if (s.empty()) throw PreconditionError("detect_progression: S must be nonempty");
  const int len = static_cast<int>(s.count());
  std::vector<Progression> out;
  for (int r = 0; r < g.order(); ++r) {
    const int ord = g.element_order(r);
    if (len > ord) continue;
    std::vector<int> powers(ord);
    powers[0] = FiniteGroup::identity();
    for (int i = 1; i < ord; ++i) powers[i] = g.mul(powers[i - 1], r);
    if (form == ProgressionForm::literal) {
      for (int j = 0; j < ord; ++j) {
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) ok = s.contains(powers[(j + i) % ord]);
        if (ok) {
          out.push_back({r, j});
          break;
        }
      }
    } else {
      for (int a = 0; a < g.order(); ++a) {
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) ok = s.contains(g.mul(a, powers[i]));
        if (ok) {
          out.push_back({r, a});
          break;
        }
      }
    }
  }
  return out;
}

inline std::optional<Progression> detect_progression(const FiniteGroup& g, const ElementSet& s,
                                                     ProgressionForm form = ProgressionForm::literal) {
  auto all = progressions(g, s, form);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// ---------------------------------------------------------------------------
// Normal and semi-normal sets.

enum class Normality { normal, semi_normal, neither };

struct NormalityResult {
  Normality kind = Normality::neither;
  int witness = 0;  // the element a for semi-normal sets; the identity for normal sets
};

inline bool is_semi_normal_with(const FiniteGroup& g, const ElementSet& s, int a) {
  const int ai = g.inverse(a);
  for (int x = 0; x < g.order(); ++x) {
    // x S x^-1 == S (a^-1 x a x^-1)
    const int c = g.mul(g.mul(g.mul(ai, x), a), g.inverse(x));
    if (conjugate_set(g, x, s) != right_translate(g, s, c)) return false;
  }
  return true;
}

inline NormalityResult seminormality(const FiniteGroup& g, const ElementSet& s) {
  require_universe(g, s);
  if (!s.contains(FiniteGroup::identity()))
    throw PreconditionError("seminormality: S must contain the identity");
  bool normal = true;
  for (int x = 0; x < g.order() && normal; ++x) normal = conjugate_set(g, x, s) == s;
  if (normal) return {Normality::normal, FiniteGroup::identity()};
  for (int a = 0; a < g.order(); ++a)
    if (is_semi_normal_with(g, s, a)) return {Normality::semi_normal, a};
  return {Normality::neither, 0};
}

}  // namespace isoperimetric

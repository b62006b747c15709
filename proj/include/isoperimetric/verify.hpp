#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isoperimetric/catalog.hpp"
#include "isoperimetric/detail/masks.hpp"
#include "isoperimetric/digraph.hpp"
#include "isoperimetric/error.hpp"
#include "isoperimetric/group.hpp"
#include "isoperimetric/iso.hpp"
#include "isoperimetric/menger.hpp"
#include "isoperimetric/report.hpp"
#include "isoperimetric/strong_isoperimetric.hpp"

namespace isoperimetric {

struct VerifyOptions {
  int max_order = 12;
  std::uint64_t seed = 0;
  int workers = 1;
  // Pairs (A, B) are enumerated exhaustively up to this order and sampled above.
  int exhaustive_pairs_up_to = 8;
  int pair_samples = 10000;
  int random_graphs = 1000;
  std::vector<std::string> manifest = default_manifest();
};

// Runs f(0..count-1) on up to `workers` threads. Results come back in index
// order, so merged output does not depend on the schedule.
template <class F>
auto parallel_map(std::size_t count, int workers, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
        } catch (...) {
          errors[t] = std::current_exception();
          next = count;
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// Reflexive digraph on n vertices; each non-loop arc is present with a
// density drawn from the seed.
inline Digraph random_reflexive_digraph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t density = 150 + rng() % 600;  // per mille
  Digraph g(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u == v || rng() % 1000 < density) g.add_arc(u, v);
  return g;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Atoms through `root`; by convention every k-subset is an atom of a
// non-separable graph (k <= 2 here).
inline std::vector<Mask> rooted_atoms(const MaskGraph& g, const ScanResult& r, int k, int root = 0) {
  if (r.separable) return atoms_of(r.fragments, r.alpha);
  std::vector<Mask> out;
  if (k == 1) {
    out.push_back(bit(root));
  } else if (k == 2) {
    for_each_bit(g.full & ~bit(root), [&](int v) { out.push_back(bit(root) | bit(v)); });
  } else {
    throw PreconditionError("rooted_atoms: k must be 1 or 2");
  }
  return out;
}

// Random nonempty subset of `within`.
inline Mask random_subset(std::mt19937_64& rng, Mask within) {
  while (true) {
    const Mask m = rng() & within;
    if (m != 0) return m;
  }
}

inline Mask power(const MaskGroup& g, Mask s, int j) {
  Mask p = bit(0);
  for (int i = 0; i < j; ++i) p = g.product(p, s);
  return p;
}

inline bool commuting(const FiniteGroup& g, Mask b) {
  bool ok = true;
  for_each_bit(b, [&](int x) {
    for_each_bit(b, [&](int y) {
      if (g.mul(x, y) != g.mul(y, x)) ok = false;
    });
  });
  return ok;
}

// Elements a with x S x^-1 = S a^-1 x a x^-1 for every x.
inline std::vector<int> seminormal_witnesses(const MaskGroup& g, Mask s) {
  const FiniteGroup& grp = *g.group;
  std::vector<int> out;
  for (int a = 0; a < g.n; ++a) {
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x) {
      const int c = grp.mul(grp.mul(grp.mul(grp.inverse(a), x), a), grp.inverse(x));
      ok = g.conjugate(x, s) == g.right_translate(s, c);
    }
    if (ok) out.push_back(a);
  }
  return out;
}

inline Mask normalizer(const MaskGroup& g, Mask h) {
  Mask out = 0;
  for (int x = 0; x < g.n; ++x)
    if (g.conjugate(x, h) == h) out |= bit(x);
  return out;
}

inline nlohmann::json set_of(const char* name, Mask s) { return {{name, mask_json(s)}}; }

using Clock = std::chrono::steady_clock;

// One report per catalog group, merged in catalog order.
template <class Body>
CheckReport sweep_groups(const std::string& id, const VerifyOptions& opt, int max_order,
                         Body&& body) {
  const auto start = Clock::now();
  const auto catalog = build_catalog(std::min(opt.max_order, max_order), opt.manifest);
  auto parts = parallel_map(catalog.size(), opt.workers, [&](std::size_t i) {
    CheckReport rep(id);
    body(catalog[i], i, rep);
    return rep;
  });
  CheckReport total(id);
  for (const auto& p : parts) total.merge(p);
  total.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return total;
}

// body(entry, group, s, rep) for every generating S of every catalog group
// with order in [min_order, max_order].
template <class Body>
CheckReport sweep_generating(const std::string& id, const VerifyOptions& opt, int min_order,
                             int max_order, bool abelian_only, Body&& body) {
  return sweep_groups(id, opt, max_order, [&](const CatalogEntry& e, std::size_t, CheckReport& rep) {
    if (e.group.order() < min_order || (abelian_only && !e.group.is_abelian())) return;
    const MaskGroup g(e.group);
    for (Mask s : generating_sets(e.group)) body(e, g, s, rep);
  });
}

inline std::string instance(const CatalogEntry& e) { return e.spec; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog checkers.

// kappa_1(S) = |S| - 1 for every generating S in groups of prime order.
inline CheckReport check_cauchy_davenport(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_generating("cauchy-davenport", opt, 2, opt.max_order, false,
                          [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& rep) {
                            if (!families::is_prime(g.n)) return;
                            const int k1 = scan(g.cayley(s), 1, 0, false).kappa;
                            rep.expect(k1 == popcount(s) - 1, [&] {
                              return Counterexample{instance(e), set_of("S", s), {{"kappa1", k1}}};
                            });
                          });
}

// The 1-atom through 1 is the subgroup <S n H> when alpha_1 <= alpha_-1 (the
// negative atom and S^-1 otherwise); kappa_1 = min(|LS|-|L|, |SL|-|L|) for a
// subgroup L != G; a k-atom H through 1 with |Pi^r(H)| >= k is a subgroup
// when alpha_k <= alpha_-k, for k = 1, 2.
inline CheckReport check_one_atom_structure(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_generating(
      "one-atom-structure", opt, 2, opt.max_order, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& rep) {
        const Mask sinv = g.inverse(s);
        const MaskGraph fwd = g.cayley(s), rev = g.cayley(sinv);
        const auto f1 = scan(fwd, 1, 0, true), r1 = scan(rev, 1, 0, true);
        const bool forward_side = f1.alpha <= r1.alpha;
        const Mask gen = forward_side ? s : sinv;
        const auto atom_list = forward_side ? rooted_atoms(fwd, f1, 1) : rooted_atoms(rev, r1, 1);
        for (Mask h : atom_list) {
          const bool ok = g.is_subgroup(h) && g.generated(gen & h) == h;
          rep.expect(ok, [&] {
            return Counterexample{instance(e),
                                  {{"S", mask_json(s)}, {"atom", mask_json(h)},
                                   {"side", forward_side ? "forward" : "reverse"}},
                                  {{"subgroup", g.is_subgroup(h)},
                                   {"generated", mask_json(g.generated(gen & h))}}};
          });
        }
        const Mask l = atom_list.front();
        const int ls = popcount(g.product(l, s)) - popcount(l);
        const int sl = popcount(g.product(s, l)) - popcount(l);
        rep.expect(g.is_subgroup(l) && l != g.full && f1.kappa == std::min(ls, sl), [&] {
          return Counterexample{instance(e), {{"S", mask_json(s)}, {"L", mask_json(l)}},
                                {{"kappa1", f1.kappa}, {"LS-L", ls}, {"SL-L", sl}}};
        });
        if (g.n < 3) return;
        const auto f2 = scan(fwd, 2, 0, true), r2 = scan(rev, 2, 0, true);
        const bool fwd2 = f2.alpha <= r2.alpha;
        for (Mask h : fwd2 ? rooted_atoms(fwd, f2, 2) : rooted_atoms(rev, r2, 2)) {
          if (popcount(g.right_stabilizer(h)) < 2) {
            rep.skip();
            continue;
          }
          rep.expect(g.is_subgroup(h), [&] {
            return Counterexample{instance(e),
                                  {{"S", mask_json(s)}, {"two_atom", mask_json(h)},
                                   {"side", fwd2 ? "forward" : "reverse"}},
                                  {{"right_stabilizer", mask_json(g.right_stabilizer(h))}}};
          });
        }
      });
}

// 2 kappa_1(S) >= |S|, with equality iff S = H u Hu (|H| <= |K|) or
// S = K u uK (|H| >= |K|) for the atom H and negative atom K through 1.
// Also 2|B^j| >= min(2|K|, (j+1)|B|) and 2|AB| >= min(2|AK|, 2|A| + |B|)
// with K = <B B^-1>, on pairs from groups of order at most 12.
inline CheckReport check_olson(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "olson", opt, 2, opt.max_order, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const MaskGraph fwd = g.cayley(s), rev = g.cayley(g.inverse(s));
        const auto f1 = scan(fwd, 1, 0, true), r1 = scan(rev, 1, 0, true);
        const int size = popcount(s);
        r.expect(2 * f1.kappa >= size, [&] {
          return Counterexample{instance(e), set_of("S", s), {{"kappa1", f1.kappa}}};
        });
        const Mask h = rooted_atoms(fwd, f1, 1).front();
        const Mask k = rooted_atoms(rev, r1, 1).front();
        bool structure = false;
        for (int u = 0; u < g.n && !structure; ++u) {
          if (popcount(h) <= popcount(k) && s == (h | g.right_translate(h, u))) structure = true;
          if (popcount(h) >= popcount(k) && s == (k | g.left_translate(u, k))) structure = true;
        }
        r.expect((2 * f1.kappa == size) == structure, [&] {
          return Counterexample{instance(e),
                                {{"S", mask_json(s)}, {"H", mask_json(h)}, {"K", mask_json(k)}},
                                {{"kappa1", f1.kappa}, {"structure", structure}}};
        });
      });
  CheckReport pairs = sweep_groups("olson", opt, 12, [&](const CatalogEntry& e, std::size_t idx,
                                                         CheckReport& r) {
    const MaskGroup g(e.group);
    std::mt19937_64 rng(mix_seed(opt.seed, idx, 1));
    auto check_b = [&](Mask b) {
      const Mask kk = g.generated(g.product(b, g.inverse(b)));
      Mask bj = b;
      for (int j = 1; j <= g.n; ++j) {
        if (j > 1) bj = g.product(bj, b);
        r.expect(2 * popcount(bj) >= std::min(2 * popcount(kk), (j + 1) * popcount(b)), [&] {
          return Counterexample{instance(e), {{"B", mask_json(b)}, {"j", j}},
                                {{"Bj", popcount(bj)}, {"K", popcount(kk)}}};
        });
      }
      return kk;
    };
    auto check_ab = [&](Mask a, Mask b, Mask kk) {
      const int ab = popcount(g.product(a, b)), ak = popcount(g.product(a, kk));
      r.expect(2 * ab >= std::min(2 * ak, 2 * popcount(a) + popcount(b)), [&] {
        return Counterexample{instance(e), {{"A", mask_json(a)}, {"B", mask_json(b)}},
                              {{"AB", ab}, {"AK", ak}}};
      });
    };
    if (g.n <= opt.exhaustive_pairs_up_to) {
      for (Mask b = 1; b <= g.full; ++b) {
        const Mask kk = check_b(b);
        for (Mask a = 1; a <= g.full; ++a) check_ab(a, b, kk);
      }
    } else {
      for (int i = 0; i < opt.pair_samples; ++i) {
        const Mask a = random_subset(rng, g.full), b = random_subset(rng, g.full);
        check_ab(a, b, check_b(b));
      }
    }
  });
  rep.merge(pairs);
  return rep;
}

// S^(floor(2n/k) - 1) = G for generating S with |S| = k, |G| = n.
inline CheckReport check_orderbase(const VerifyOptions& opt) {
  using namespace detail;
  std::atomic<long> fail_j1{0}, fail_larger{0}, tested_larger{0};
  CheckReport rep = sweep_generating(
      "order-base", opt, 1, opt.max_order, false,
      [&](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const int j = 2 * g.n / popcount(s) - 1;
        const Mask p = power(g, s, j);
        if (j >= 2) ++tested_larger;
        if (p != g.full) ++(j == 1 ? fail_j1 : fail_larger);
        r.expect(p == g.full, [&] {
          return Counterexample{instance(e), set_of("S", s), {{"j", j}, {"power_size", popcount(p)}}};
        });
      });
  rep.note("failures with exponent 1 (|S| > 2|G|/3): " + std::to_string(fail_j1.load()) +
           "; failures with exponent >= 2: " + std::to_string(fail_larger.load()) + " of " +
           std::to_string(tested_larger.load()));
  return rep;
}

// With K = <S> and W the left K-parts A_i of A with |A_i S| < |K|:
// |W| kappa_1(S) <= |AS| - |A|, kappa_1 taken in Cay(K, S).
inline CheckReport check_diderrich_lemma(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_groups("diderrich-lemma", opt, opt.max_order, [&](const CatalogEntry& e,
                                                                 std::size_t idx, CheckReport& rep) {
    const MaskGroup g(e.group);
    std::unordered_map<Mask, std::pair<Mask, int>> cache;  // S -> (K, kappa_1)
    auto info = [&](Mask s) {
      auto it = cache.find(s);
      if (it != cache.end()) return it->second;
      const Mask k = g.generated(s);
      const int k1 = scan(g.cayley_on(s, k), 1, 0, false).kappa;
      return cache[s] = {k, k1};
    };
    auto one = [&](Mask a, Mask s) {
      const auto [k, k1] = info(s);
      int w = 0;
      Mask rest = a;
      while (rest != 0) {
        const Mask part = a & g.left_translate(std::countr_zero(rest), k);
        if (popcount(g.product(part, s)) < popcount(k)) ++w;
        rest &= ~part;
      }
      const int growth = popcount(g.product(a, s)) - popcount(a);
      rep.expect(w * k1 <= growth, [&] {
        return Counterexample{instance(e), {{"A", mask_json(a)}, {"S", mask_json(s)}},
                              {{"W", w}, {"kappa1", k1}, {"growth", growth}}};
      });
    };
    if (g.n <= opt.exhaustive_pairs_up_to) {
      for (Mask s = 1; s <= g.full; s += 2)
        for (Mask a = 1; a <= g.full; ++a) one(a, s);
    } else {
      std::mt19937_64 rng(mix_seed(opt.seed, idx, 2));
      for (int i = 0; i < opt.pair_samples; ++i) {
        const Mask a = random_subset(rng, g.full);
        one(a, (rng() & g.full) | 1);
      }
    }
  });
}

// Sets of size at most p(G): Cauchy, and a progression when 2-separable with
// kappa_2 = |S| - 1. 2-atoms through 1 with trivial left stabilizer have size
// at most |S| - 1 when |S| >= 3. Critical pairs |AB| = |A| + |B| - 1 <= |K| - 1
// with |B| <= p(G), K = <B>, are progressions or complements.
inline CheckReport check_small_sets(const VerifyOptions& opt) {
  using namespace detail;
  std::atomic<long> nonseparable_hits{0}, nonseparable_progressions{0};
  CheckReport rep = sweep_generating(
      "small-sets", opt, 2, opt.max_order, false,
      [&](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const int p = *min_subgroup_order(e.group);
        const int size = popcount(s);
        const Mask sinv = g.inverse(s);
        const MaskGraph fwd = g.cayley(s), rev = g.cayley(sinv);
        if (size <= p) {
          const int k1 = scan(fwd, 1, 0, false).kappa;
          r.expect(k1 == size - 1, [&] {
            return Counterexample{instance(e), set_of("S", s), {{"kappa1", k1}, {"p", p}}};
          });
        }
        if (g.n < 3) return;
        const auto f2 = scan(fwd, 2, 0, true), r2 = scan(rev, 2, 0, true);
        if (size <= p && f2.kappa == size - 1) {
          const bool prog = !progressions(e.group, to_set(g.n, s)).empty();
          if (f2.separable) {
            r.expect(prog, [&] {
              return Counterexample{instance(e), set_of("S", s), {{"kappa2", f2.kappa}}};
            });
          } else {
            ++nonseparable_hits;
            if (prog) ++nonseparable_progressions;
          }
        }
        if (size < 3) return;
        const bool fwd_side = f2.alpha <= r2.alpha;
        for (Mask h : fwd_side ? rooted_atoms(fwd, f2, 2) : rooted_atoms(rev, r2, 2)) {
          if (popcount(g.left_stabilizer(h)) != 1) {
            r.skip();
            continue;
          }
          r.expect(popcount(h) <= size - 1, [&] {
            return Counterexample{instance(e),
                                  {{"S", mask_json(s)}, {"two_atom", mask_json(h)},
                                   {"side", fwd_side ? "forward" : "reverse"}},
                                  {{"atom_size", popcount(h)}}};
          });
        }
      });
  std::atomic<long> literal{0}, translated{0};
  CheckReport pairs = sweep_groups("small-sets", opt, opt.max_order, [&](const CatalogEntry& e,
                                                                        std::size_t idx,
                                                                        CheckReport& r) {
    if (e.group.order() < 2) return;
    const MaskGroup g(e.group);
    const int p = *min_subgroup_order(e.group);
    auto one = [&](Mask a, Mask b) {
      const int na = popcount(a), nb = popcount(b);
      if (na < 2 || nb < 2 || nb > p) return;
      const Mask k = g.generated(b);
      const int nk = popcount(k);
      const int ab = popcount(g.product(a, b));
      if (ab != na + nb - 1 || ab > nk - 1) {
        r.skip();
        return;
      }
      if (na + nb == nk) {
        bool found = false;
        const Mask target = k & ~b;
        for (int x = 0; x < g.n && !found; ++x) found = g.right_translate(g.inverse(a), x) == target;
        r.expect(found, [&] {
          return Counterexample{instance(e), {{"A", mask_json(a)}, {"B", mask_json(b)}},
                                {{"case", "complement"}}};
        });
        return;
      }
      auto ratios = [&](Mask m, ProgressionForm form) {
        std::vector<int> out;
        for (const auto& pr : progressions(e.group, to_set(g.n, m), form)) out.push_back(pr.ratio);
        return out;
      };
      auto common = [&](ProgressionForm form) {
        const auto ra = ratios(a, form), rb = ratios(b, form);
        for (int x : ra)
          if (std::find(rb.begin(), rb.end(), x) != rb.end()) return true;
        return false;
      };
      const bool lit = common(ProgressionForm::literal);
      const bool tr = common(ProgressionForm::translated);
      if (lit) ++literal;
      if (tr) ++translated;
      r.expect(lit, [&] {
        return Counterexample{instance(e), {{"A", mask_json(a)}, {"B", mask_json(b)}},
                              {{"case", "progression"}, {"translated_form", tr}}};
      });
    };
    if (g.n <= opt.exhaustive_pairs_up_to) {
      for (Mask b = 1; b <= g.full; b += 2)
        for (Mask a = 1; a <= g.full; a += 2) one(a, b);
    } else {
      std::mt19937_64 rng(mix_seed(opt.seed, idx, 3));
      for (int i = 0; i < opt.pair_samples; ++i) {
        const Mask a = (rng() & g.full) | 1;
        // B: the identity plus between 1 and p-1 further elements
        const int extra = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, p - 1)));
        Mask b = 1;
        while (popcount(b) < std::min(extra + 1, g.n)) b |= bit(static_cast<int>(rng() % g.n));
        one(a, b);
      }
    }
  });
  rep.merge(pairs);
  rep.note("progression condition with kappa_2 = |S|-1 on non-2-separable sets: " +
           std::to_string(nonseparable_progressions.load()) + " of " +
           std::to_string(nonseparable_hits.load()) + " are progressions (not asserted)");
  rep.note("critical pairs in the progression case: literal form held in " +
           std::to_string(literal.load()) + ", translated form in " +
           std::to_string(translated.load()));
  return rep;
}

// Abelian groups: kappa_k = kappa_-k and alpha_k = alpha_-k (k = 1, 2). For
// 2-separable S with mu(S) <= 0 (and |S| != |G| - 6 when mu = 0) every
// 2-atom through 1 is a subgroup or has size 2. With mu(S) <= 0, a 2-atom H
// through 1 of size other than 2 that is not a subgroup has
// |H| <= kappa_2(H), and |H| = 3 when H generates G.
inline CheckReport check_abelian_two_atoms(const VerifyOptions& opt) {
  using namespace detail;
  std::atomic<long> excluded{0}, excluded_large{0};
  CheckReport rep = sweep_generating(
      "abelian-two-atoms", opt, 3, opt.max_order, true,
      [&](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const MaskGraph fwd = g.cayley(s), rev = g.cayley(g.inverse(s));
        for (int k = 1; k <= 2; ++k) {
          const auto f = scan(fwd, k, 0, true), b = scan(rev, k, 0, true);
          r.expect(f.kappa == b.kappa && f.alpha == b.alpha, [&] {
            return Counterexample{instance(e), {{"S", mask_json(s)}, {"k", k}},
                                  {{"kappa", {f.kappa, b.kappa}}, {"alpha", {f.alpha, b.alpha}}}};
          });
        }
        const auto f2 = scan(fwd, 2, 0, true);
        const int size = popcount(s);
        const int mu = f2.kappa - size;
        if (mu > 0) {
          r.skip();
          return;
        }
        const auto atom_list = rooted_atoms(fwd, f2, 2);
        const bool excluded_case = mu == 0 && size == g.n - 6;
        if (f2.separable && !excluded_case) {
          for (Mask m : atom_list)
            r.expect(g.is_subgroup(m) || popcount(m) == 2, [&] {
              return Counterexample{instance(e), {{"S", mask_json(s)}, {"M", mask_json(m)}},
                                    {{"mu", mu}, {"atom_size", popcount(m)}}};
            });
        } else if (f2.separable) {
          ++excluded;
          for (Mask m : atom_list)
            if (!g.is_subgroup(m) && popcount(m) != 2) {
              ++excluded_large;
              break;
            }
        }
        for (Mask h : atom_list) {
          if (popcount(h) == 2 || g.is_subgroup(h)) continue;
          const Mask l = g.generated(h);
          const int k2h = scan(g.cayley_on(h, l), 2, 0, false).kappa;
          r.expect(popcount(h) <= k2h && (l != g.full || popcount(h) == 3), [&] {
            return Counterexample{instance(e), {{"S", mask_json(s)}, {"H", mask_json(h)}},
                                  {{"kappa2_of_H", k2h}, {"generates", l == g.full}}};
          });
        }
      });
  rep.note("excluded region mu = 0, |S| = |G| - 6: " + std::to_string(excluded.load()) +
           " instances, " + std::to_string(excluded_large.load()) +
           " with a non-subgroup 2-atom of size other than 2 (informational)");
  return rep;
}

// With H a 2-atom and K a negative 2-atom through 1, |K| >= |H| >= 3 (or the
// reverse): min(omega_2, omega_-2) <= 2 or |H| <= 3 + max(kappa_2 - delta,
// kappa_-2 - delta_-). For S = S^-1 and semi-normal S, 2-atoms H through 1
// with |H| >= 3 and |H| >= kappa_2 - |S| + 4 have |Pi^l(H)| >= 2, and are
// subgroups of normalizer index at most 2 in the semi-normal case.
// Semi-normal S: Y -> a^-1 Y^-1 a maps the k-fragments of S onto those of S^-1.
inline CheckReport check_superatoms(const VerifyOptions& opt) {
  using namespace detail;
  std::atomic<long> size_two{0}, size_two_fail{0};
  CheckReport rep = sweep_generating(
      "superatoms", opt, 3, opt.max_order, false,
      [&](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const Mask sinv = g.inverse(s);
        const MaskGraph fwd = g.cayley(s), rev = g.cayley(sinv);
        const auto f2 = scan(fwd, 2, 0, true), r2 = scan(rev, 2, 0, true);
        const int size = popcount(s);
        const auto atoms_f = rooted_atoms(fwd, f2, 2);
        const auto atoms_r = rooted_atoms(rev, r2, 2);
        // vertex-transitive: every vertex lies in as many atoms as the root
        const int omega_f = static_cast<int>(atoms_f.size());
        const int omega_r = static_cast<int>(atoms_r.size());
        if (std::min(f2.alpha, r2.alpha) >= 3) {
          const int smaller = std::min(f2.alpha, r2.alpha);
          r.expect(std::min(omega_f, omega_r) <= 2 ||
                       smaller <= 3 + std::max(f2.kappa - size, r2.kappa - size),
                   [&] {
                     return Counterexample{instance(e), set_of("S", s),
                                           {{"alpha", {f2.alpha, r2.alpha}},
                                            {"omega", {omega_f, omega_r}},
                                            {"kappa2", {f2.kappa, r2.kappa}}}};
                   });
        } else {
          r.skip();
        }
        auto large = [&](Mask h) { return popcount(h) >= f2.kappa - size + 4; };
        if (s == sinv) {
          for (Mask h : atoms_f) {
            if (!large(h)) continue;
            const bool ok = popcount(g.left_stabilizer(h)) >= 2;
            if (popcount(h) < 3) {
              ++size_two;
              if (!ok) ++size_two_fail;
              continue;
            }
            r.expect(ok, [&] {
              return Counterexample{instance(e), {{"S", mask_json(s)}, {"H", mask_json(h)}},
                                    {{"left_stabilizer", mask_json(g.left_stabilizer(h))}}};
            });
          }
        }
        const auto witnesses = seminormal_witnesses(g, s);
        if (witnesses.empty()) return;
        for (Mask h : atoms_f) {
          if (!large(h)) continue;
          const bool ok = g.is_subgroup(h) && g.n <= 2 * popcount(normalizer(g, h));
          if (popcount(h) < 3) {
            ++size_two;
            if (!ok) ++size_two_fail;
            continue;
          }
          r.expect(ok, [&] {
            return Counterexample{instance(e),
                                  {{"S", mask_json(s)}, {"H", mask_json(h)}, {"semi_normal", true}},
                                  {{"subgroup", g.is_subgroup(h)},
                                   {"normalizer", mask_json(normalizer(g, h))}}};
          });
        }
        const bool full_lists = g.n <= 12;
        for (int k = 1; k <= 2; ++k) {
          const int root = full_lists ? -1 : 0;
          const auto f = scan(fwd, k, root, true), b = scan(rev, k, root, true);
          for (int a : witnesses) {
            std::vector<Mask> mapped;
            for (Mask y : f.fragments) mapped.push_back(g.conjugate(g.group->inverse(a), g.inverse(y)));
            std::sort(mapped.begin(), mapped.end());
            auto target = b.fragments;
            std::sort(target.begin(), target.end());
            r.expect(f.kappa == b.kappa && f.alpha == b.alpha && mapped == target, [&] {
              return Counterexample{instance(e), {{"S", mask_json(s)}, {"a", a}, {"k", k}},
                                    {{"kappa", {f.kappa, b.kappa}},
                                     {"alpha", {f.alpha, b.alpha}},
                                     {"fragments", {mapped.size(), target.size()}}}};
            });
          }
        }
      });
  rep.note("omega is read at the identity; Cayley graphs are vertex-transitive, so the minimum "
           "and maximum over vertices coincide");
  rep.note("2-atoms of size 2 meeting the remaining hypotheses of the symmetric and semi-normal "
           "corollaries: " +
           std::to_string(size_two.load()) + ", conclusion failing in " +
           std::to_string(size_two_fail.load()) + " (not asserted; the argument needs |H| >= 3)");
  return rep;
}

// Kneser (abelian, AB aperiodic), Diderrich (B pairwise commuting,
// Pi^r(AB) trivial): |AB| >= |A| + |B| - 1. |A| + |B| > |G| gives AB = G.
inline CheckReport check_classical_inequalities(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_groups("classical", opt, opt.max_order, [&](const CatalogEntry& e, std::size_t idx,
                                                           CheckReport& rep) {
    const MaskGroup g(e.group);
    const bool abelian = e.group.is_abelian();
    auto one = [&](Mask a, Mask b) {
      const Mask ab = g.product(a, b);
      const int na = popcount(a), nb = popcount(b), nab = popcount(ab);
      if (na + nb > g.n)
        rep.expect(ab == g.full, [&] {
          return Counterexample{instance(e), {{"A", mask_json(a)}, {"B", mask_json(b)}},
                                {{"case", "covering"}, {"AB", nab}}};
        });
      const bool comm = abelian || commuting(e.group, b);
      if (!comm) return;
      if (popcount(g.right_stabilizer(ab)) != 1) {
        rep.skip();
        return;
      }
      rep.expect(nab >= na + nb - 1, [&] {
        return Counterexample{instance(e), {{"A", mask_json(a)}, {"B", mask_json(b)}},
                              {{"case", abelian ? "kneser" : "diderrich"}, {"AB", nab}}};
      });
    };
    if (g.n <= opt.exhaustive_pairs_up_to) {
      for (Mask a = 1; a <= g.full; ++a)
        for (Mask b = 1; b <= g.full; ++b) one(a, b);
    } else {
      std::mt19937_64 rng(mix_seed(opt.seed, idx, 4));
      for (int i = 0; i < opt.pair_samples; ++i) {
        const Mask a = random_subset(rng, g.full);
        // alternate B between arbitrary sets and subsets of a cyclic subgroup
        const Mask within = (i % 2 == 0 || abelian)
                                ? g.full
                                : g.generated(bit(static_cast<int>(rng() % g.n)));
        one(a, random_subset(rng, within));
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Graph-level sweeps over catalog Cayley graphs and random digraphs.

namespace detail {

template <class Body>
CheckReport sweep_random_graphs(const std::string& id, const VerifyOptions& opt, int count,
                                int min_n, int max_n, std::uint64_t salt, Body&& body) {
  const auto start = Clock::now();
  auto parts = parallel_map(static_cast<std::size_t>(count), opt.workers, [&](std::size_t i) {
    CheckReport rep(id);
    const std::uint64_t seed = mix_seed(opt.seed, i, salt);
    const int n = min_n + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - min_n + 1));
    const Digraph g = random_reflexive_digraph(n, seed);
    body(g, "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")", rep);
    return rep;
  });
  CheckReport total(id);
  for (const auto& p : parts) total.merge(p);
  total.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return total;
}

inline std::string cayley_label(const CatalogEntry& e, Mask s) {
  return e.spec + " S=" + mask_json(s).dump();
}

}  // namespace detail

// kappa_k = kappa_-k with the fragment duality, on catalog Cayley graphs
// (k = 1, 2) and random digraphs on at most 7 vertices (k = 1).
inline CheckReport check_duality_sweep(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "duality", opt, 1, opt.max_order, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        for (int k = 1; k <= 2 && 2 * k - 1 <= g.n; ++k)
          duality_core(BothSides(g.cayley(s), g.cayley(g.inverse(s)), k, 0), k, cayley_label(e, s), r);
      });
  rep.merge(sweep_random_graphs("duality", opt, opt.random_graphs, 1, 7, 11,
                                [](const Digraph& g, const std::string& name, CheckReport& r) {
                                  duality_core(BothSides(g, 1), 1, name, r);
                                }));
  return rep;
}

// Fragment intersection and atom intersection on catalog Cayley graphs of
// order at most 12 and on random digraphs, k = 1, 2.
inline CheckReport check_fragment_intersection_sweep(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "fragment-intersection", opt, 1, 12, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        for (int k = 1; k <= 2 && 2 * k - 1 <= g.n; ++k)
          fragment_intersection_core(BothSides(g.cayley(s), g.cayley(g.inverse(s)), k, -1), k,
                                     cayley_label(e, s), r);
      });
  rep.merge(sweep_random_graphs(
      "fragment-intersection", opt, opt.random_graphs / 5, 3, 8, 12,
      [](const Digraph& g, const std::string& name, CheckReport& r) {
        for (int k = 1; k <= 2; ++k) fragment_intersection_core(BothSides(g, k), k, name, r);
      }));
  return rep;
}

// Distinct k-atoms meet in at most k-1 points when alpha_k <= alpha_-k.
inline CheckReport check_atom_intersection_sweep(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_generating("atom-intersection", opt, 1, opt.max_order, false,
                          [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
                            for (int k = 1; k <= 2 && 2 * k - 1 <= g.n; ++k)
                              atoms_meet_core(BothSides(g.cayley(s), g.cayley(g.inverse(s)), k, -1),
                                              k, cayley_label(e, s), r);
                          });
}

inline CheckReport check_submodularity_sweep(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_random_graphs(
      "submodularity", opt, std::max(1, opt.random_graphs / 10), 1, 6, 13,
      [](const Digraph& g, const std::string& name, CheckReport& r) {
        const MaskGraph mg(g, Sign::forward);
        for (Mask x = 0; x <= mg.full; ++x)
          for (Mask y = 0; y <= mg.full; ++y) submodularity_pair(mg, x, y, name, r);
      });
  rep.merge(sweep_groups("submodularity", opt, opt.max_order, [&](const CatalogEntry& e,
                                                                  std::size_t idx, CheckReport& r) {
    const MaskGroup g(e.group);
    std::mt19937_64 rng(mix_seed(opt.seed, idx, 5));
    for (Mask s : generating_sets(e.group)) {
      const MaskGraph mg = g.cayley(s);
      for (int i = 0; i < 20; ++i) {
        const Mask x = rng() & g.full;
        submodularity_pair(mg, x, rng() & g.full, cayley_label(e, s), r);
      }
    }
  }));
  return rep;
}

inline CheckReport check_dual_frag_order_sweep(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "dual-fragment-order", opt, 1, 12, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const MaskGraph mg = g.cayley(s);
        for (int k = 1; k <= 2 && 2 * k - 1 <= g.n; ++k)
          dual_frag_order_core(mg, scan(mg, k, -1, true), k, cayley_label(e, s), r);
      });
  rep.merge(sweep_random_graphs("dual-fragment-order", opt, opt.random_graphs / 5, 3, 8, 14,
                                [](const Digraph& g, const std::string& name, CheckReport& r) {
                                  const MaskGraph mg(g, Sign::forward);
                                  for (int k = 1; k <= 2; ++k)
                                    dual_frag_order_core(mg, scan(mg, k, -1, true), k, name, r);
                                }));
  return rep;
}

inline CheckReport check_fragment_boundary_bounds_sweep(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "fragment-boundary-bounds", opt, 3, 12, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const MaskGraph mg = g.cayley(s);
        const int k1 = scan(mg, 1, 0, false).kappa;
        boundary_bounds_core(mg, scan(mg, 2, -1, true), 2, k1, cayley_label(e, s), r);
      });
  rep.merge(sweep_random_graphs("fragment-boundary-bounds", opt, opt.random_graphs / 5, 3, 8, 15,
                                [](const Digraph& g, const std::string& name, CheckReport& r) {
                                  const MaskGraph mg(g, Sign::forward);
                                  const int k1 = scan(mg, 1, -1, false).kappa;
                                  boundary_bounds_core(mg, scan(mg, 2, -1, true), 2, k1, name, r);
                                }));
  return rep;
}

inline CheckReport check_isoperimetric_inequality_sweep(const VerifyOptions& opt) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "isoperimetric-inequality", opt, 1, 12, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const MaskGraph mg = g.cayley(s);
        for (int k = 1; k <= 2 && 2 * k - 1 <= g.n; ++k) {
          const auto sc = scan(mg, k, 0, false);
          isoperimetric_core(mg, k, sc.kappa, sc.separable, cayley_label(e, s), r);
        }
      });
  rep.merge(sweep_random_graphs("isoperimetric-inequality", opt, opt.random_graphs / 5, 3, 10, 16,
                                [](const Digraph& g, const std::string& name, CheckReport& r) {
                                  const MaskGraph mg(g, Sign::forward);
                                  for (int k = 1; k <= 2; ++k) {
                                    const auto sc = scan(mg, k, -1, false);
                                    isoperimetric_core(mg, k, sc.kappa, sc.separable, name, r);
                                  }
                                }));
  return rep;
}

// Least |d(A)| over A with x in A and y outside A u Gamma(A), by enumeration.
inline int brute_local_connectivity(const Digraph& g, int x, int y) {
  const detail::MaskGraph mg(g, Sign::forward);
  int best = INT_MAX;
  for (detail::Mask a = 0; a <= mg.full; ++a) {
    if (!((a >> x) & 1U)) continue;
    const detail::Mask img = mg.image(a) | a;
    if ((img >> y) & 1U) continue;
    best = std::min(best, detail::popcount(img & ~a));
  }
  return best;
}

// Flow connectivity equals the enumerated minimum cut, disjoint_paths
// returns that many verified paths, one more path is refused with a
// minimum-cut witness, min_k_part yields a k-part, fans are valid.
inline CheckReport check_menger(const VerifyOptions& opt, int graphs = 500) {
  using namespace detail;
  return sweep_random_graphs(
      "menger", opt, graphs, 2, 8, 17, [](const Digraph& g, const std::string& name, CheckReport& r) {
        for (int x = 0; x < g.order(); ++x) {
          for (int y = 0; y < g.order(); ++y) {
            if (x == y || g.has_arc(x, y)) continue;
            const int lam = local_connectivity(g, x, y);
            const int brute = brute_local_connectivity(g, x, y);
            const auto fam = disjoint_paths(g, x, y, lam);
            const std::string defect = path_family_defect(g, fam, lam);
            const KPart part = min_k_part(g, x, y);
            bool refused = false;
            try {
              disjoint_paths(g, x, y, lam + 1);
            } catch (const ConnectivityError& err) {
              refused = err.witness().boundary_size == lam;
            }
            r.expect(lam == brute && defect.empty() && part.boundary_size == lam && refused, [&] {
              return Counterexample{name, {{"x", x}, {"y", y}},
                                    {{"flow", lam}, {"brute", brute}, {"paths", defect},
                                     {"kpart", part.boundary_size}, {"refused", refused}}};
            });
          }
          // targets: the vertices not adjacent from x
          ElementSet targets = g.out(x).complement();
          if (targets.empty()) continue;
          const auto f = fan(g, x, targets);
          std::vector<char> ends(g.size(), 0);
          bool ok = verify_path_family(g, PathFamily{x, -1, f.paths}, static_cast<int>(f.paths.size()));
          for (const auto& p : f.paths) {
            if (!targets.contains(p.back()) || ends[p.back()]++) ok = false;
          }
          r.expect(ok, [&] {
            return Counterexample{name, {{"x", x}, {"targets", set_json(targets)}},
                                  {{"fan_paths", f.paths.size()}}};
          });
        }
      });
}

// kappa_1 by flow equals kappa_1 by enumeration.
inline CheckReport check_flow_oracle(const VerifyOptions& opt, int graphs = 500) {
  using namespace detail;
  CheckReport rep = sweep_generating(
      "flow-oracle", opt, 1, 12, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const Digraph d = cayley_graph(e.group, to_set(g.n, s));
        const int flow = kappa1_flow(d);
        const int exact = scan(g.cayley(s), 1, 0, false).kappa;
        r.expect(flow == exact, [&] {
          return Counterexample{e.spec, set_of("S", s), {{"flow", flow}, {"exhaustive", exact}}};
        });
      });
  rep.merge(sweep_random_graphs("flow-oracle", opt, graphs, 1, 10, 18,
                                [](const Digraph& g, const std::string& name, CheckReport& r) {
                                  const int flow = kappa1_flow(g);
                                  const int exact = scan(MaskGraph(g, Sign::forward), 1, -1, false).kappa;
                                  r.expect(flow == exact, [&] {
                                    return Counterexample{name, nlohmann::json::object(),
                                                          {{"flow", flow}, {"exhaustive", exact}}};
                                  });
                                }));
  return rep;
}

// For every X with min(|X|, |V \ X|) >= k and k <= kappa_1, a size-k matching
// from X into its complement. The matching for the largest admissible k is
// computed and verified; for smaller k, strong_iso_matching returns its
// prefix, which is verified as well.
inline CheckReport check_strong_iso_sweep(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_generating(
      "strong-iso", opt, 2, 12, false,
      [](const CatalogEntry& e, const MaskGroup& g, Mask s, CheckReport& r) {
        const Digraph d = cayley_graph(e.group, to_set(g.n, s));
        const int k1 = scan(g.cayley(s), 1, 0, false).kappa;
        for (Mask x = 1; x < g.full; ++x) {
          const int kmax = std::min({k1, popcount(x), g.n - popcount(x)});
          const ElementSet xs = to_set(g.n, x);
          const Matching m = strong_iso_matching(d, xs, kmax, k1);
          bool ok = true;
          for (int k = 1; k <= kmax && ok; ++k) {
            Matching prefix{{m.pairs.begin(), m.pairs.begin() + k}};
            ok = verify_matching(d, xs, prefix, k);
          }
          r.expect(ok, [&] {
            return Counterexample{cayley_label(e, s), set_of("X", x), {{"k", kmax}}};
          });
        }
      });
}

// Coset extension in the quotient by a subgroup 2-fragment, abelian groups.
inline CheckReport check_abelian_strong_iso_sweep(const VerifyOptions& opt) {
  using namespace detail;
  return sweep_groups("abelian-strong-iso", opt, std::min(opt.max_order, 12),
                      [&](const CatalogEntry& e, std::size_t idx, CheckReport& rep) {
    if (!e.group.is_abelian() || e.group.order() < 4) return;
    const MaskGroup g(e.group);
    std::mt19937_64 rng(mix_seed(opt.seed, idx, 6));
    std::vector<Mask> subgroups;
    for (Mask h = 1; h <= g.full; h += 2)
      if (h != 1 && h != g.full && g.is_subgroup(h)) subgroups.push_back(h);
    for (Mask s : generating_sets(e.group)) {
      const MaskGraph mg = g.cayley(s);
      const auto f2 = scan(mg, 2, 0, false);
      if (!f2.separable) continue;
      for (Mask h : subgroups) {
        if (!is_fragment(mg, 2, f2.kappa, h)) continue;
        for (int i = 0; i < 8; ++i) {
          const Mask x = random_subset(rng, g.full);
          try {
            const auto w = abelian_strong_iso(e.group, to_set(g.n, s), to_set(g.n, h), to_set(g.n, x));
            rep.expect(w.cosets_reached == w.t + 1 + w.u && w.kappa1_quotient >= w.u, [&] {
              return Counterexample{e.spec, {{"S", mask_json(s)}, {"H", mask_json(h)}, {"X", mask_json(x)}},
                                    {{"cosets", w.cosets_reached}}};
            });
          } catch (const PreconditionError&) {
            rep.skip();
          } catch (const Error& err) {
            rep.fail(Counterexample{e.spec, {{"S", mask_json(s)}, {"H", mask_json(h)}, {"X", mask_json(x)}},
                                    {{"error", err.what()}}});
          }
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// A generating set S = H u Hu, H non-normal of order 3 with uH != Hu, in the
// Frobenius group of order 21, whose negative 1-atom through 1 is not a
// subgroup.

struct FrobeniusWitness {
  bool found = false;
  std::string group;
  ElementSet h, s, negative_atom;
  int u = 0;
  int kappa1 = 0;
  bool h_is_atom = false;
};

inline FrobeniusWitness find_frobenius_witness(const std::string& spec = "semidirect:7,3,2") {
  using namespace detail;
  const FiniteGroup grp = make_group(spec);
  const MaskGroup g(grp);
  FrobeniusWitness w;
  w.group = spec;
  for (int x = 1; x < g.n; ++x) {
    if (grp.element_order(x) != 3) continue;
    const Mask h = g.generated(bit(x));
    bool normal = true;
    for (int y = 0; y < g.n && normal; ++y) normal = g.conjugate(y, h) == h;
    if (normal) continue;
    for (int u = 0; u < g.n; ++u) {
      if (g.left_translate(u, h) == g.right_translate(h, u)) continue;
      const Mask s = h | g.right_translate(h, u);
      if (g.generated(s) != g.full) continue;
      const MaskGraph fwd = g.cayley(s), rev = g.cayley(g.inverse(s));
      const auto f1 = scan(fwd, 1, 0, true);
      const auto r1 = scan(rev, 1, 0, true);
      for (Mask q : rooted_atoms(rev, r1, 1)) {
        if (g.is_subgroup(q)) continue;
        const auto atom_list = rooted_atoms(fwd, f1, 1);
        w.found = true;
        w.h = to_set(g.n, h);
        w.s = to_set(g.n, s);
        w.negative_atom = to_set(g.n, q);
        w.u = u;
        w.kappa1 = f1.kappa;
        w.h_is_atom = std::find(atom_list.begin(), atom_list.end(), h) != atom_list.end();
        return w;
      }
    }
  }
  return w;
}

inline CheckReport check_frobenius_witness(const VerifyOptions&) {
  const auto start = detail::Clock::now();
  CheckReport rep("frobenius-witness");
  const auto w = find_frobenius_witness();
  rep.expect(w.found && w.h_is_atom, [&] {
    return Counterexample{w.group, nlohmann::json::object(), {{"found", w.found}}};
  });
  if (w.found)
    rep.note("H=" + w.h.to_string() + " u=" + std::to_string(w.u) + " S=" + w.s.to_string() +
             " negative 1-atom " + w.negative_atom.to_string());
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(detail::Clock::now() - start);
  return rep;
}

// ---------------------------------------------------------------------------

struct TheoremEntry {
  std::string id;
  std::function<CheckReport(const VerifyOptions&)> run;
};

inline const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> entries = {
      {"cauchy-davenport", check_cauchy_davenport},
      {"duality", check_duality_sweep},
      {"submodularity", check_submodularity_sweep},
      {"isoperimetric-inequality", check_isoperimetric_inequality_sweep},
      {"fragment-intersection", check_fragment_intersection_sweep},
      {"atom-intersection", check_atom_intersection_sweep},
      {"dual-fragment-order", check_dual_frag_order_sweep},
      {"fragment-boundary-bounds", check_fragment_boundary_bounds_sweep},
      {"one-atom-structure", check_one_atom_structure},
      {"olson", check_olson},
      {"order-base", check_orderbase},
      {"diderrich-lemma", check_diderrich_lemma},
      {"small-sets", check_small_sets},
      {"abelian-two-atoms", check_abelian_two_atoms},
      {"superatoms", check_superatoms},
      {"classical", check_classical_inequalities},
      {"menger", [](const VerifyOptions& o) { return check_menger(o); }},
      {"flow-oracle", [](const VerifyOptions& o) { return check_flow_oracle(o); }},
      {"strong-iso", check_strong_iso_sweep},
      {"abelian-strong-iso", check_abelian_strong_iso_sweep},
      {"frobenius-witness", check_frobenius_witness},
  };
  return entries;
}

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& e : theorem_registry()) ids.push_back(e.id);
  return ids;
}

// Runs one checker by id, or every checker for "all".
inline std::vector<CheckReport> run_theorems(const std::string& id, const VerifyOptions& opt) {
  std::vector<CheckReport> out;
  for (const auto& e : theorem_registry())
    if (id == "all" || e.id == id) out.push_back(e.run(opt));
  if (out.empty()) throw PreconditionError("unknown theorem id '" + id + "'");
  return out;
}

}  // namespace isoperimetric

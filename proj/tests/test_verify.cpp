#include <gtest/gtest.h>

#include "isoperimetric/verify.hpp"

using namespace isoperimetric;

namespace {

VerifyOptions small(int max_order = 8) {
  VerifyOptions opt;
  opt.max_order = max_order;
  opt.random_graphs = 100;
  opt.pair_samples = 500;
  return opt;
}

}  // namespace

TEST(Verify, EveryCheckerIsRegistered) {
  const auto ids = theorem_ids();
  for (const char* id : {"duality", "fragment-intersection", "one-atom-structure", "olson", "order-base",
                         "diderrich-lemma", "small-sets", "abelian-two-atoms", "superatoms", "classical",
                         "menger", "flow-oracle", "strong-iso", "frobenius-witness", "cauchy-davenport"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_THROW(run_theorems("no-such-theorem", small()), PreconditionError);
}

// Every checker except order-base has zero counterexamples on small groups.
TEST(Verify, CheckersPassOnSmallCatalog) {
  for (const auto& r : run_theorems("all", small())) {
    if (r.theorem_id == "order-base") continue;
    EXPECT_TRUE(r.passed()) << r.theorem_id << ": " << to_json(r).dump();
    EXPECT_GT(r.instances_tested, 0) << r.theorem_id;
  }
}

// The stated exponent is too small once |S| > 2|G|/3: S^1 = S != G.
TEST(Verify, OrderBaseFailsOnlyWithExponentOne) {
  const auto r = check_orderbase(small(16));
  EXPECT_FALSE(r.passed());
  for (const auto& c : r.counterexamples) EXPECT_EQ(c.observed["j"], 1);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes[0].find("failures with exponent >= 2: 0"), std::string::npos) << r.notes[0];
}

TEST(Verify, OrderBaseSmallestCounterexample) {
  const auto z4 = make_group("cyclic:4");
  const auto s = z4.set({0, 1, 2});
  EXPECT_EQ(product_power(z4, s, 2 * 4 / 3 - 1), s);
  EXPECT_EQ(product_power(z4, s, 2), z4.all());
}

TEST(Verify, ReportsAreIdenticalAcrossWorkerCounts) {
  auto one = small(10), four = small(10);
  four.workers = 4;
  for (const char* id : {"olson", "classical", "menger", "small-sets", "duality"}) {
    const auto a = run_theorems(id, one), b = run_theorems(id, four);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump()) << id;
  }
}

TEST(Verify, SeedChangesSamplesButNotVerdicts) {
  auto a = small(10), b = small(10);
  b.seed = 7;
  const auto ra = check_classical_inequalities(a), rb = check_classical_inequalities(b);
  EXPECT_TRUE(ra.passed());
  EXPECT_TRUE(rb.passed());
  EXPECT_NE(to_json(ra).dump(), to_json(rb).dump());
}

TEST(Verify, TimingOnlyWhenRequested) {
  const auto r = check_frobenius_witness(small());
  EXPECT_FALSE(to_json(r).contains("elapsed_ms"));
  EXPECT_TRUE(to_json(r, true).contains("elapsed_ms"));
}

TEST(Verify, FrobeniusWitness) {
  const auto w = find_frobenius_witness();
  ASSERT_TRUE(w.found);
  const auto g = make_group(w.group);
  EXPECT_EQ(g.order(), 21);
  EXPECT_EQ(w.h.count(), 3u);
  EXPECT_TRUE(is_subgroup(g, w.h));
  EXPECT_FALSE(is_normal_subgroup(g, w.h));
  EXPECT_NE(left_translate(g, w.u, w.h), right_translate(g, w.h, w.u));
  EXPECT_EQ(w.s, w.h | right_translate(g, w.h, w.u));
  EXPECT_FALSE(is_subgroup(g, w.negative_atom));
  EXPECT_TRUE(w.negative_atom.contains(0));
  EXPECT_TRUE(w.h_is_atom);
  // the negative atom is a 1-atom of the reverse graph
  const Digraph cay = cayley_graph(g, w.s);
  const auto rev = rooted_profile(cay, 1, Sign::reverse);
  EXPECT_NE(std::find(rev.atoms.begin(), rev.atoms.end(), w.negative_atom), rev.atoms.end());
  // frozen from an independent enumeration
  const auto fwd = rooted_profile(cay, 1, Sign::forward);
  EXPECT_EQ(fwd.kappa, 3);
  EXPECT_EQ(rev.kappa, 3);
  EXPECT_EQ(fwd.alpha, 3);
  EXPECT_EQ(rev.alpha, 15);
  EXPECT_EQ(rev.atoms.size(), 5u);
  for (const auto& q : rev.atoms) EXPECT_FALSE(is_subgroup(g, q));
}

TEST(Verify, RandomDigraphsAreSeeded) {
  const auto a = random_reflexive_digraph(7, 42), b = random_reflexive_digraph(7, 42);
  EXPECT_EQ(a.arcs(), b.arcs());
  EXPECT_TRUE(a.reflexive());
  EXPECT_NE(a.arcs(), random_reflexive_digraph(7, 43).arcs());
}

TEST(Verify, ParallelMapKeepsIndexOrder) {
  const auto out = parallel_map(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map(10, 3, [](std::size_t i) -> int {
                 if (i == 5) throw Error("boom");
                 return 0;
               }),
               Error);
}

TEST(Verify, ClassicalHypothesisFilterSkipsPeriodicSums) {
  VerifyOptions opt = small(6);
  opt.manifest = {"cyclic:6"};
  const auto r = check_classical_inequalities(opt);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances_skipped, 0);
}

TEST(Verify, CustomManifestRestrictsSweep) {
  VerifyOptions opt = small(12);
  opt.manifest = {"cyclic:7"};
  const auto r = check_cauchy_davenport(opt);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_tested, 63);  // subsets of Z7 \ {0} except the empty one
}

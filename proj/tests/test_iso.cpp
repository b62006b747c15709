#include <gtest/gtest.h>

#include "isoperimetric/iso.hpp"
#include "isoperimetric/verify.hpp"
#include "oracles.hpp"

using namespace isoperimetric;

namespace {

Digraph cay(const char* spec, std::initializer_list<int> s) {
  const auto g = make_group(spec);
  return cayley_graph(g, g.set(s));
}

std::vector<oracle::Set> as_sets(const FragmentFamily& f) {
  std::vector<oracle::Set> out;
  f.for_each([&](const ElementSet& s) {
    out.push_back(s.indices());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Set> sorted(std::vector<oracle::Set> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Small reflexive digraphs: random ones and Cayley graphs.
std::vector<Digraph> corpus() {
  std::vector<Digraph> out;
  for (std::uint64_t seed = 0; seed < 60; ++seed)
    out.push_back(random_reflexive_digraph(3 + static_cast<int>(seed % 6), seed));
  for (const char* spec : {"cyclic:6", "symmetric:3", "dihedral:4", "quaternion:8", "cyclic:7"}) {
    const auto g = make_group(spec);
    const auto gens = generating_sets(g);
    for (std::size_t i = 0; i < gens.size(); i += 1 + gens.size() / 12)
      out.push_back(cayley_graph(g, detail::to_set(g.order(), gens[i])));
  }
  return out;
}

}  // namespace

TEST(Kappa, FrozenValues) {
  EXPECT_EQ(kappa(cay("cyclic:7", {0, 1, 3}), 1), 2);
  EXPECT_EQ(kappa(cay("cyclic:4", {0, 1, 2}), 2), 1);
  EXPECT_EQ(kappa(cay("cyclic:7", {0, 1, 2}), 2), 2);
  EXPECT_EQ(kappa(cay("cyclic:7", {0, 1, 2}), 1), 2);
  EXPECT_EQ(kappa(cay("cyclic:8", {0, 1, 4, 5}), 2), 2);
  EXPECT_EQ(kappa(cay("cyclic:6", {0, 1, 3, 4}), 1), 2);
}

TEST(Kappa, DomainAndReflexivityErrors) {
  EXPECT_THROW(kappa(cay("cyclic:4", {0, 1}), 3), PreconditionError);
  EXPECT_THROW(kappa(Digraph(3, {{0, 1}}), 1), PreconditionError);
}

TEST(Kappa, LargeGraphsUseFlowForKOne) {
  EXPECT_EQ(kappa(cay("cyclic:30", {0, 1, 2}), 1), 2);
  EXPECT_EQ(kappa(cay("cyclic:25", {0, 1}), 1), 1);
  EXPECT_THROW(kappa(cay("cyclic:30", {0, 1, 2}), 2), PreconditionError);
  EXPECT_THROW(profile(cay("cyclic:30", {0, 1, 2}), 1), PreconditionError);
}

TEST(Fragments, FrozenValues) {
  EXPECT_EQ(fragments(cay("cyclic:5", {0, 1}), 1).size(), 15u);
  const auto four = fragments(cay("cyclic:4", {0, 1, 2}), 2);
  EXPECT_TRUE(four.streamed());
  EXPECT_EQ(four.size(), 6u);
  EXPECT_EQ(as_sets(four).front(), (oracle::Set{0, 1}));
  const auto f = fragments(cay("cyclic:7", {0, 1, 3}), 1);
  EXPECT_NE(std::find(f.sets().begin(), f.sets().end(), ElementSet(7, {0})), f.sets().end());
}

TEST(Fragments, StreamedFamilyRefusesMaterialization) {
  const auto f = FragmentFamily::all_subsets(5, 2);
  EXPECT_THROW(f.sets(), PreconditionError);
  EXPECT_EQ(f.take(3).size(), 3u);
  EXPECT_EQ(f.count_containing(0), 4u);
  EXPECT_EQ(f.size(), 10u);
}

TEST(Atoms, FrozenValues) {
  auto a = atoms(cay("cyclic:7", {0, 1}), 1);
  EXPECT_EQ(a.alpha, 1);
  EXPECT_EQ(a.atoms.size(), 7u);
  a = atoms(cay("cyclic:6", {0, 1, 3, 4}), 1);
  EXPECT_EQ(a.alpha, 2);
  EXPECT_EQ(a.atoms.count_containing(0), 1u);
  EXPECT_EQ(a.atoms.sets().front(), ElementSet(6, {0, 3}));
  a = atoms(cay("cyclic:7", {0, 1, 2}), 2);
  EXPECT_EQ(a.alpha, 2);
  EXPECT_NE(std::find(a.atoms.sets().begin(), a.atoms.sets().end(), ElementSet(7, {0, 1})),
            a.atoms.sets().end());
  a = atoms(cay("cyclic:8", {0, 1, 4, 5}), 2);
  EXPECT_EQ(a.alpha, 2);
  EXPECT_EQ(a.atoms.sets().front(), ElementSet(8, {0, 4}));
}

TEST(Omega, FrozenValues) {
  EXPECT_EQ(omega(cay("cyclic:7", {0, 1}), 1), 1);
  EXPECT_EQ(omega(cay("cyclic:5", {0, 1}), 1), 1);
  // atoms {i, i+1}: every vertex in two
  EXPECT_EQ(omega(cay("cyclic:7", {0, 1, 2}), 2), 2);
}

TEST(RootedProfile, AgreesWithFullProfileOnCayleyGraphs) {
  const auto g = cay("dihedral:4", {0, 1, 4});
  for (int k = 1; k <= 2; ++k) {
    const auto full = profile(g, k);
    const auto rooted = rooted_profile(g, k);
    EXPECT_EQ(rooted.kappa, full.kappa);
    EXPECT_EQ(rooted.alpha, full.alpha);
    EXPECT_EQ(rooted.omega_at_root, full.omega);
    EXPECT_EQ(rooted.atoms.size(), full.atoms.count_containing(0));
  }
  const auto z7 = rooted_profile(cay("cyclic:7", {0, 1, 2}), 2);
  ASSERT_EQ(z7.atoms.size(), 2u);
  EXPECT_EQ(z7.atoms[0], ElementSet(7, {0, 1}));
  EXPECT_EQ(z7.atoms[1], ElementSet(7, {0, 6}));
  EXPECT_THROW(rooted_profile(reflexive_closure(Digraph(3, {{0, 1}})), 1), PreconditionError);
}

TEST(Classify, FrozenValues) {
  const auto z7 = make_group("cyclic:7");
  auto c = classify(z7, z7.set({0, 1, 3}));
  EXPECT_TRUE(c.cauchy);
  EXPECT_EQ(c.kappa1, 2);
  c = classify(z7, z7.set({0, 1, 2}));
  ASSERT_TRUE(c.mu);
  EXPECT_EQ(*c.mu, -1);
  const auto z6 = make_group("cyclic:6");
  c = classify(z6, z6.set({0, 1, 3, 4}));
  EXPECT_FALSE(c.cauchy);
  EXPECT_EQ(c.kappa1, 2);
  // computed inside <S> = {0,4,8}
  const auto z12 = make_group("cyclic:12");
  c = classify(z12, z12.set({0, 4}));
  EXPECT_EQ(c.subgroup_order, 3);
  EXPECT_FALSE(c.generating);
  EXPECT_EQ(c.kappa1, 1);
  EXPECT_THROW(classify(z7, z7.set({1, 2})), PreconditionError);
}

// Property: profile agrees with the enumeration oracle in both orientations.
TEST(OracleAgreement, ProfileMatchesEnumeration) {
  for (const auto& g : corpus()) {
    for (int k = 1; k <= 2 && 2 * k - 1 <= g.order(); ++k) {
      for (Sign sign : {Sign::forward, Sign::reverse}) {
        const auto o = oracle::connectivity(g, k, sign == Sign::reverse);
        const auto p = profile(g, k, sign);
        ASSERT_EQ(p.kappa, o.kappa);
        ASSERT_EQ(p.alpha, o.alpha);
        ASSERT_EQ(p.separable, o.separable);
        if (o.separable) {
          ASSERT_EQ(as_sets(p.fragments), sorted(o.fragments));
          ASSERT_EQ(as_sets(p.atoms), sorted(o.atoms));
          int least = INT_MAX;
          for (int v = 0; v < g.order(); ++v) {
            int c = 0;
            for (const auto& a : o.atoms) c += std::binary_search(a.begin(), a.end(), v);
            least = std::min(least, c);
          }
          ASSERT_EQ(p.omega, least);
        }
      }
    }
  }
}

// Property: kappa_k = kappa_-k on every graph.
TEST(Invariants, Duality) {
  for (const auto& g : corpus())
    for (int k = 1; k <= 2 && 2 * k - 1 <= g.order(); ++k)
      EXPECT_EQ(kappa(g, k, Sign::forward), kappa(g, k, Sign::reverse));
}

// Property: every graph-level check reports zero counterexamples.
TEST(Invariants, GraphChecksPass) {
  for (const auto& g : corpus()) {
    EXPECT_TRUE(check_submodularity(g, 500).passed());
    for (int k = 1; k <= 2 && 2 * k - 1 <= g.order(); ++k) {
      EXPECT_TRUE(check_duality(g, k).passed());
      EXPECT_TRUE(check_isoperimetric_inequality(g, k).passed());
      EXPECT_TRUE(check_fragment_intersection(g, k).passed());
      EXPECT_TRUE(check_dual_frag_order(g, k).passed());
      if (k >= 2) {
        EXPECT_TRUE(check_fragment_boundary_bounds(g, k).passed());
      }
    }
  }
}

TEST(Invariants, NamedExamplesPass) {
  EXPECT_TRUE(check_duality(cay("cyclic:7", {0, 1, 3}), 1).passed());
  EXPECT_TRUE(check_fragment_intersection(cay("cyclic:11", {0, 1}), 2).passed());
  EXPECT_TRUE(check_fragment_boundary_bounds(cay("cyclic:11", {0, 1}), 2).passed());
  EXPECT_TRUE(check_fragment_boundary_bounds(cay("cyclic:13", {0, 1, 2}), 2).passed());
  EXPECT_TRUE(check_dual_frag_order(cay("cyclic:8", {0, 1, 4}), 1).passed());
  const auto r = check_dual_frag_order(cay("cyclic:9", {0, 1}), 1);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances_tested, 0);
}

// Property: the isoperimetric inequality is tight: lowering kappa by one
// would make it fail on a fragment.
TEST(Invariants, IsoperimetricInequalityIsTight) {
  for (const auto& g : corpus()) {
    const detail::MaskGraph mg(g, Sign::forward);
    const auto r = detail::scan(mg, 1, -1, true);
    if (!r.separable) continue;
    CheckReport rep("tight");
    detail::isoperimetric_core(mg, 1, r.kappa + 1, true, "probe", rep);
    EXPECT_FALSE(rep.passed());
  }
}

TEST(Invariants, SubmodularityOnNestedAndDisjointSets) {
  const auto g = cay("cyclic:9", {0, 1, 3});
  const detail::MaskGraph mg(g, Sign::forward);
  CheckReport rep("submodularity");
  detail::submodularity_pair(mg, 0b11, 0b1111, "nested", rep);
  detail::submodularity_pair(mg, 0b1, 0b1000000, "disjoint", rep);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.instances_tested, 2);
}

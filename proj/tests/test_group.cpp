#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "isoperimetric/group.hpp"
#include "oracles.hpp"

using namespace isoperimetric;

namespace {

ElementSet set_in(const FiniteGroup& g, std::initializer_list<int> elems) { return g.set(elems); }

}  // namespace

TEST(MakeGroup, CyclicTable) {
  const auto g = make_group("cyclic:6");
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.mul(2, 5), 1);
  EXPECT_TRUE(g.is_abelian());
}

TEST(MakeGroup, SymmetricThreeIsNonAbelian) {
  const auto g = make_group("symmetric:3");
  EXPECT_EQ(g.order(), 6);
  EXPECT_FALSE(g.is_abelian());
}

TEST(MakeGroup, ExplicitTableOfOrderTwo) {
  const auto g = make_group("z2", {{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.mul(1, 1), 0);
}

TEST(MakeGroup, FamilyOrders) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"cyclic:1", 1},          {"dihedral:4", 8},          {"quaternion:8", 8},
      {"alternating:4", 12},    {"elementary:2^3", 8},      {"semidirect:7,3,2", 21},
      {"dicyclic:3", 12},       {"product:cyclic:2,cyclic:3", 6}, {"symmetric:4", 24}};
  for (const auto& [spec, order] : cases) EXPECT_EQ(make_group(spec).order(), order) << spec;
}

TEST(MakeGroup, NonAbelianFamilies) {
  for (const char* spec : {"dihedral:4", "quaternion:8", "alternating:4", "semidirect:7,3,2",
                           "dicyclic:3", "semidirect:4,4,3"})
    EXPECT_FALSE(make_group(spec).is_abelian()) << spec;
  EXPECT_TRUE(make_group("product:cyclic:4,cyclic:2").is_abelian());
}

TEST(MakeGroup, QuaternionHasOneInvolution) {
  const auto g = make_group("quaternion:8");
  int involutions = 0;
  for (int x = 1; x < g.order(); ++x) involutions += g.element_order(x) == 2;
  EXPECT_EQ(involutions, 1);
}

TEST(MakeGroup, TableAxiomsAreNamed) {
  try {
    make_group("bad", {{0, 1}, {0, 1}});
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("latin square"), std::string::npos) << e.what();
  }
  // Latin square with identity 0 and x*x = 0 throughout: a loop, not a group.
  EXPECT_THROW(make_group("bad", {{0, 1, 2, 3, 4},
                                  {1, 0, 3, 4, 2},
                                  {2, 4, 0, 1, 3},
                                  {3, 2, 4, 0, 1},
                                  {4, 3, 1, 2, 0}}),
               ConstructionError);
  EXPECT_THROW(make_group("bad", {{1, 0}, {0, 1, 1}}), ConstructionError);
}

TEST(MakeGroup, IdentityIsRelabelledToZero) {
  // identity sits at index 1 in the input
  const auto g = make_group("z2", {{1, 0}, {0, 1}});
  EXPECT_EQ(g.mul(0, 1), 1);
  EXPECT_EQ(g.mul(0, 0), 0);
}

TEST(MakeGroup, MalformedSpecsThrow) {
  for (const char* spec : {"", "cyclic", "cyclic:0", "bogus:3", "elementary:4^2", "product:cyclic:2",
                           "cyclic:3x", "semidirect:7,3,3"})
    EXPECT_THROW(make_group(spec), Error) << spec;
}

TEST(MakeGroup, TableFile) {
  const auto path = std::filesystem::temp_directory_path() / "isoperimetric_z3.json";
  std::ofstream(path) << R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})";
  const auto g = make_group("table:" + path.string());
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.mul(2, 2), 1);
}

TEST(Minkowski, Examples) {
  const auto z5 = make_group("cyclic:5");
  EXPECT_EQ(minkowski_product(z5, set_in(z5, {0, 1}), set_in(z5, {0, 1})).indices(),
            (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(minkowski_product(z5, z5.empty_set(), set_in(z5, {0, 1})).empty());
  const auto z6 = make_group("cyclic:6");
  EXPECT_EQ(minkowski_product(z6, set_in(z6, {0, 3}), set_in(z6, {0, 1})).indices(),
            (std::vector<int>{0, 1, 3, 4}));
  EXPECT_THROW(minkowski_product(z6, set_in(z6, {0}), z5.set({0})), Error);
}

TEST(Minkowski, MatchesOracleOnSymmetricGroup) {
  const auto g = make_group("symmetric:3");
  for (unsigned a = 1; a < 64; a += 5)
    for (unsigned b = 1; b < 64; b += 3) {
      const auto pa = oracle::members(a, 6), pb = oracle::members(b, 6);
      EXPECT_EQ(minkowski_product(g, ElementSet::from_mask(6, a), ElementSet::from_mask(6, b)).indices(),
                oracle::product(g, pa, pb));
    }
}

TEST(SubgroupGenerated, Examples) {
  const auto z6 = make_group("cyclic:6");
  EXPECT_EQ(subgroup_generated(z6, set_in(z6, {2, 3})), z6.all());
  EXPECT_EQ(subgroup_generated(z6, set_in(z6, {2})).indices(), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(subgroup_generated(z6, z6.empty_set()).indices(), std::vector<int>{0});
}

TEST(SubgroupGenerated, MatchesOracle) {
  const auto g = make_group("dihedral:4");
  for (unsigned s = 0; s < 256; s += 7)
    EXPECT_EQ(subgroup_generated(g, ElementSet::from_mask(8, s)).indices(),
              oracle::generated(g, oracle::members(s, 8)));
}

TEST(Stabilizers, Examples) {
  const auto z6 = make_group("cyclic:6");
  auto st = stabilizers(z6, set_in(z6, {0, 2, 4}));
  EXPECT_EQ(st.left.indices(), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(st.right, st.left);
  st = stabilizers(z6, set_in(z6, {0, 1}));
  EXPECT_EQ(st.left.indices(), std::vector<int>{0});
  EXPECT_THROW(stabilizers(z6, z6.empty_set()), PreconditionError);

  const auto s3 = make_group("symmetric:3");
  for (int x = 1; x < 6; ++x) {
    if (s3.element_order(x) != 2) continue;
    const auto h = set_in(s3, {0, x});
    EXPECT_FALSE(is_normal_subgroup(s3, h));
    EXPECT_EQ(stabilizers(s3, h).left, h);
    EXPECT_EQ(stabilizers(s3, h).right, h);
  }
}

TEST(Cosets, Decomposition) {
  const auto z6 = make_group("cyclic:6");
  const auto h = set_in(z6, {0, 3});
  const auto d = coset_decomposition(z6, set_in(z6, {0, 1, 3}), h, Side::left);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].indices(), (std::vector<int>{0, 3}));
  EXPECT_EQ(d.parts[1].indices(), std::vector<int>{1});
  EXPECT_EQ(coset_decomposition(z6, h, h, Side::left).parts.size(), 1u);
  EXPECT_EQ(coset_decomposition(z6, set_in(z6, {0, 1, 2}), h, Side::right).parts.size(), 3u);
  EXPECT_THROW(coset_decomposition(z6, h, set_in(z6, {0, 1}), Side::left), PreconditionError);
}

TEST(Quotient, Examples) {
  const auto z6 = make_group("cyclic:6");
  const auto q = quotient_group(z6, set_in(z6, {0, 3}));
  EXPECT_EQ(q.group.order(), 3);
  EXPECT_EQ(q.projection[0], 0);
  EXPECT_EQ(q.projection[3], 0);
  EXPECT_EQ(quotient_group(z6, set_in(z6, {0})).group.order(), 6);
  EXPECT_EQ(quotient_group(z6, z6.all()).group.order(), 1);
  const auto s3 = make_group("symmetric:3");
  int involution = 1;
  while (s3.element_order(involution) != 2) ++involution;
  try {
    quotient_group(s3, set_in(s3, {0, involution}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("witness"), std::string::npos);
  }
}

TEST(Quotient, ProjectionIsAHomomorphism) {
  const auto g = make_group("product:cyclic:4,cyclic:2");
  const auto h = subgroup_generated(g, set_in(g, {1}));
  const auto q = quotient_group(g, h);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      EXPECT_EQ(q.projection[g.mul(x, y)], q.group.mul(q.projection[x], q.projection[y]));
}

TEST(SubgroupEmbedding, PullPushRoundTrip) {
  const auto g = make_group("cyclic:12");
  const auto h = set_in(g, {0, 4, 8});
  const auto emb = subgroup_as_group(g, h);
  EXPECT_EQ(emb.group.order(), 3);
  EXPECT_EQ(emb.push(emb.pull(h)), h);
  EXPECT_EQ(emb.to_parent[1], 4);
}

TEST(MinSubgroupOrder, Examples) {
  EXPECT_EQ(min_subgroup_order(make_group("cyclic:6")), 2);
  EXPECT_EQ(min_subgroup_order(make_group("cyclic:7")), 7);
  EXPECT_EQ(min_subgroup_order(make_group("semidirect:7,3,2")), 3);
  EXPECT_FALSE(min_subgroup_order(make_group("cyclic:1")).has_value());
}

TEST(Progressions, Examples) {
  const auto z7 = make_group("cyclic:7");
  auto p = detect_progression(z7, set_in(z7, {0, 1, 2}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->ratio, 1);
  p = detect_progression(z7, set_in(z7, {2, 4, 6}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->ratio, 2);
  EXPECT_EQ(p->start, 1);
  EXPECT_FALSE(detect_progression(z7, set_in(z7, {0, 1, 3})));
  const auto z11 = make_group("cyclic:11");
  const auto all = progressions(z11, set_in(z11, {0, 2, 4}));
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [](const Progression& q) { return q.ratio == 2; }));
}

TEST(Progressions, TranslatedFormAllowsAnyOffset) {
  const auto z7 = make_group("cyclic:7");
  // {3,5} = 3 + {0, 2}
  const auto t = progressions(z7, set_in(z7, {3, 5}), ProgressionForm::translated);
  EXPECT_TRUE(std::any_of(t.begin(), t.end(), [](const Progression& q) { return q.ratio == 2 && q.start == 3; }));
}

TEST(Seminormality, Examples) {
  const auto z6 = make_group("cyclic:6");
  EXPECT_EQ(seminormality(z6, set_in(z6, {0, 1, 5})).kind, Normality::normal);
  const auto s3 = make_group("symmetric:3");
  ElementSet transpositions = s3.set({0});
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) transpositions.insert(x);
  EXPECT_EQ(seminormality(s3, transpositions).kind, Normality::normal);
  EXPECT_THROW(seminormality(s3, s3.set({1})), PreconditionError);
}

TEST(Seminormality, NormalTimesElementIsSemiNormal) {
  const auto g = make_group("dihedral:4");
  // X = {1} u (a conjugacy class); Xa for every a with 1 in Xa
  for (int c = 1; c < g.order(); ++c) {
    ElementSet x = g.set({0});
    for (int y = 0; y < g.order(); ++y) x.insert(g.mul(g.mul(y, c), g.inverse(y)));
    ASSERT_EQ(seminormality(g, x).kind, Normality::normal);
    x.for_each([&](int e) {
      const ElementSet xa = right_translate(g, x, g.inverse(e));
      EXPECT_TRUE(xa.contains(0));
      EXPECT_NE(seminormality(g, xa).kind, Normality::neither);
    });
  }
}

TEST(GroupLemma, LargeSetsCoverTheGroup) {
  const auto g = make_group("alternating:4");
  for (unsigned a = 1; a < 4096; a += 37)
    for (unsigned b = 1; b < 4096; b += 53) {
      const auto sa = ElementSet::from_mask(12, a), sb = ElementSet::from_mask(12, b);
      if (sa.count() + sb.count() > 12) {
        EXPECT_EQ(minkowski_product(g, sa, sb), g.all());
      }
    }
}

TEST(ParseElementSet, AcceptsListsAndRejectsJunk) {
  EXPECT_EQ(parse_element_set(7, "0,1,3").indices(), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(parse_element_set(7, " 2 , 4").indices(), (std::vector<int>{2, 4}));
  EXPECT_TRUE(parse_element_set(7, "").empty());
  EXPECT_THROW(parse_element_set(7, "0,7"), PreconditionError);
  EXPECT_THROW(parse_element_set(7, "a"), PreconditionError);
}

#include <gtest/gtest.h>

#include <set>

#include "isoperimetric/strong_isoperimetric.hpp"
#include "isoperimetric/verify.hpp"

using namespace isoperimetric;

namespace {

// Independent recount of the cosets of H met by X u X_(n_1) y_1 u ...
int recount(const FiniteGroup& g, const ElementSet& h, const ElementSet& x, const QuotientWitness& w) {
  std::set<std::vector<int>> cosets;
  auto add = [&](int e) { cosets.insert(left_translate(g, e, h).indices()); };
  x.for_each(add);
  for (std::size_t i = 0; i < w.indices.size(); ++i)
    w.x_parts.parts[static_cast<std::size_t>(w.indices[i])].for_each(
        [&](int e) { add(g.mul(e, w.elements[i])); });
  return static_cast<int>(cosets.size());
}

}  // namespace

TEST(AbelianStrongIso, FrozenInstance) {
  const auto g = make_group("cyclic:12");
  const auto s = g.set({0, 1, 6, 7});
  const auto h = g.set({0, 6});
  const auto x = g.set({0, 2, 8});
  const auto w = abelian_strong_iso(g, s, h, x);
  EXPECT_EQ(w.u, 1);
  EXPECT_EQ(w.t, 1);
  EXPECT_EQ(w.cosets_reached, 3);
  EXPECT_EQ(recount(g, h, x, w), 3);
  ASSERT_EQ(w.elements.size(), 1u);
  EXPECT_FALSE(h.contains(w.elements[0]));
  EXPECT_TRUE(s.contains(w.elements[0]));
}

TEST(AbelianStrongIso, PreconditionsAreSpecific) {
  const auto g = make_group("cyclic:12");
  const auto s = g.set({0, 1, 6, 7});
  const auto h = g.set({0, 6});
  auto message = [&](const ElementSet& ss, const ElementSet& hh, const ElementSet& xx) {
    try {
      abelian_strong_iso(g, ss, hh, xx);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(s, h, g.set({0, 1, 2, 3, 4, 5})).find("(t+1)|H|"), std::string::npos);
  EXPECT_NE(message(s, g.set({0, 5}), g.set({0})).find("not a subgroup"), std::string::npos);
  EXPECT_NE(message(s, g.set({0, 4, 8}), g.set({0})).find("2-fragment"), std::string::npos);
  EXPECT_NE(message(g.set({0, 6}), h, g.set({0})).find("generate"), std::string::npos);
  EXPECT_NE(message(s, h, g.empty_set()).find("nonempty"), std::string::npos);
  const auto s3 = make_group("symmetric:3");
  EXPECT_THROW(abelian_strong_iso(s3, s3.all(), s3.set({0}), s3.set({0})), PreconditionError);
}

// Property: over abelian catalog groups, every admissible (S, H, X) yields a
// witness whose independent recount is t+1+u.
TEST(AbelianStrongIso, RecountOnAdmissibleInstances) {
  int witnessed = 0;
  for (const auto& e : build_catalog(12)) {
    if (!e.group.is_abelian() || e.group.order() < 4) continue;
    const auto& g = e.group;
    const int n = g.order();
    std::vector<ElementSet> subgroups;
    for (detail::Mask m = 3; m < (detail::Mask{1} << n) - 1; m += 2)
      if (is_subgroup(g, detail::to_set(n, m))) subgroups.push_back(detail::to_set(n, m));
    const auto gens = generating_sets(g);
    for (std::size_t i = 0; i < gens.size(); i += 1 + gens.size() / 40) {
      const auto s = detail::to_set(n, gens[i]);
      for (const auto& h : subgroups)
        for (detail::Mask xm = 1; xm < (detail::Mask{1} << n); xm = xm * 3 + 1) {
          const auto x = detail::to_set(n, xm & detail::full_mask(n));
          if (x.empty()) continue;
          try {
            const auto w = abelian_strong_iso(g, s, h, x);
            ASSERT_EQ(recount(g, h, x, w), w.t + 1 + w.u) << e.spec;
            ++witnessed;
          } catch (const PreconditionError&) {
          }
        }
    }
  }
  EXPECT_GT(witnessed, 50);
}

TEST(AbelianStrongIso, SweepHasNoCounterexamples) {
  VerifyOptions opt;
  opt.max_order = 10;
  const auto r = check_abelian_strong_iso_sweep(opt);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances_tested, 0);
}

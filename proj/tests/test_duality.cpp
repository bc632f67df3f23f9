#include <sdcm/duality.hpp>
#include <sdcm/examples.hpp>
#include <sdcm/validate.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sdcm;

namespace {

void expect_dagger_invariants(const SdcModel& m, const DaggerMap& d) {
  const auto rb = m.effective_ring_bass().value_or(m.poincare(*m.dualizing()));
  EXPECT_EQ(d(m.top()), *m.dualizing());
  EXPECT_EQ(d(*m.dualizing()), m.top());
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(d(d(i)), i);
    EXPECT_TRUE(equal_up_to_shift(m.poincare(d(i)), *m.bass(i)));
    EXPECT_TRUE(equal_up_to_shift(m.poincare(d(i)) * m.poincare(i), rb));
    for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m.leq(i, j), m.leq(d(j), d(i)));
  }
}

}  // namespace

TEST(BuildDagger, Gorenstein) {
  const SdcModel m("g", {{"R", LaurentSeries::one(), {}}}, {}, "R", "R", LaurentSeries::one());
  const auto d = build_dagger(m);
  EXPECT_EQ(d(0), 0u);
  EXPECT_TRUE(check_isometry(m, d).pass);
  EXPECT_TRUE(check_fixed_points(m, d).pass);
}

TEST(BuildDagger, SquareZeroSwaps) {
  const auto m = square_zero_model(3);
  const auto d = build_dagger(m);
  EXPECT_EQ(d.by_id(m), (std::map<std::string, std::string>{{"R", "D"}, {"D", "R"}}));
  expect_dagger_invariants(m, d);
}

TEST(BuildDagger, IteratedSwaps) {
  const auto m = iterated_model(2, 3);
  const auto d = build_dagger(m);
  const std::map<std::string, std::string> expected{
      {"S", "cbcD"}, {"cbcD", "S"}, {"DtensorS", "cbcR"}, {"cbcR", "DtensorS"}};
  EXPECT_EQ(d.by_id(m), expected);
  expect_dagger_invariants(m, d);
  // The dual of S carries I_S up to shift: P_D * I_phi.
  EXPECT_TRUE(equal_up_to_shift(m.poincare(m.index_of("cbcD")),
                                square_zero_dualizing_series(2) * square_zero_dualizing_series(3)));
}

TEST(BuildDagger, Errors) {
  const auto sq = square_zero_model(2);
  const SdcModel no_dual("nd", sq.classes(), {{"D", "R"}}, "R");
  EXPECT_THROW(build_dagger(no_dual), NoDualizing);
  const auto g2 = LaurentSeries::geometric(2);
  const SdcModel orphan("o", {{"R", LaurentSeries::one(), {}}, {"K", g2, {}}, {"D", g2 * g2, {}}},
                        {{"D", "K"}, {"K", "R"}}, "R", "D", g2 * g2 * LaurentSeries::geometric(3));
  try {
    build_dagger(orphan);
    FAIL();
  } catch (const NotClosedUnderDuality& e) {
    EXPECT_EQ(e.orphan(), "R");
  }
}

TEST(Isometry, IteratedModel) {
  const auto m = iterated_model(2, 3);
  const MetricGraph g(m);
  EXPECT_EQ(g.distance("S", "DtensorS"), g.distance("cbcD", "cbcR"));
  EXPECT_EQ(g.distance("S", "DtensorS"), Curvature::exact(2));
  EXPECT_TRUE(check_isometry(m, build_dagger(m)).pass);
}

TEST(Isometry, DetectsBrokenPairing) {
  const auto m = iterated_model(2, 3);
  DaggerMap bogus = build_dagger(m);
  std::swap(bogus.pairing[1], bogus.pairing[2]);
  EXPECT_FALSE(check_isometry(m, bogus).pass);
}

TEST(Isometry, RandomDualityClosedModels) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto m = gen::random_duality_closed_model(rng);
    ASSERT_TRUE(validate(m).valid());
    const auto d = build_dagger(m);
    expect_dagger_invariants(m, d);
    EXPECT_TRUE(check_isometry(m, d).pass);
    EXPECT_TRUE(check_fixed_points(m, d).pass);
    EXPECT_TRUE(d.fixed_points().empty());
    EXPECT_EQ(m.size() % 2, 0u);
  }
}

TEST(FixedPoints, IteratedModelConsistent) {
  const auto m = iterated_model(2, 3);
  const auto d = build_dagger(m);
  EXPECT_TRUE(d.fixed_points().empty());
  EXPECT_EQ(m.size(), 4u);
  EXPECT_TRUE(check_fixed_points(m, d).pass);
}

TEST(FixedPoints, ThreeClassSelfDualModelFlagged) {
  // D = {2,2}, M = {2} with M self-dual, R = {}.
  const auto m = gen::build("three", {{}, {2}, {2, 2}}, {{2, 1}}, 2, gen::Multiset{2, 2});
  const auto d = build_dagger(m);
  EXPECT_EQ(d.fixed_points(), std::vector<std::size_t>{1});
  const auto report = check_fixed_points(m, d);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.witnesses.size(), 2u);
}

TEST(Dagger, SharedSeriesResolvedByOrder) {
  // With r = s the classes DtensorS and cbcR carry the same series.
  const SdcModel m = iterated_model(3, 3);
  const auto dagger = build_dagger(m);
  EXPECT_EQ(dagger.by_id(m), (std::map<std::string, std::string>{
                                 {"S", "cbcD"}, {"cbcD", "S"}, {"DtensorS", "cbcR"}, {"cbcR", "DtensorS"}}));
  EXPECT_TRUE(check_isometry(m, dagger).pass);
  EXPECT_TRUE(check_fixed_points(m, dagger).pass);
}

#include <sdcm/change_of_rings.hpp>
#include <sdcm/examples.hpp>
#include <sdcm/model_io.hpp>
#include <sdcm/validate.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sdcm;

namespace {

HomomorphismDescriptor phi_with(const LaurentSeries& bass, const std::string& name = "phi") {
  return {name, bass, "", "S"};
}

json without_name(const SdcModel& m) {
  json doc = model_to_json(m);
  doc.erase("name");
  return doc;
}

void expect_same_distances(const SdcModel& source, const SdcModel& image, const HomomorphismDescriptor& phi) {
  const MetricGraph a(source);
  const MetricGraph b(image);
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      EXPECT_EQ(a.distance(i, j), b.distance(tensor_id(source, i, phi), tensor_id(source, j, phi)));
    }
  }
}

}  // namespace

TEST(InjcurvPhi, Examples) {
  EXPECT_TRUE(injcurv_phi(phi_with(LaurentSeries::monomial(3))).is_zero());
  EXPECT_TRUE(injcurv_phi(phi_with(LaurentSeries::one())).is_zero());
  EXPECT_TRUE(injcurv_phi(phi_with(parse_series("1+3*t+t^2"))).is_zero());
  for (long s = 2; s <= 5; ++s) EXPECT_EQ(injcurv_phi(trivial_extension_phi(s)), Curvature::exact(s));
}

TEST(BaseChange, IdentityIsIsomorphic) {
  const auto m = square_zero_model(3);
  const auto phi = phi_with(LaurentSeries::one());
  const auto bc = base_change(m, phi);
  EXPECT_EQ(bc.size(), m.size());
  EXPECT_EQ(bc.id(bc.top()), "S");
  EXPECT_EQ(bc.id(*bc.dualizing()), "DtensorS");
  expect_same_distances(m, bc, phi);
  EXPECT_TRUE(validate(bc).valid());
}

TEST(BaseChange, SquareZeroAlongTrivialExtension) {
  const auto m = square_zero_model(2);
  const auto phi = trivial_extension_phi(3);
  const auto bc = base_change(m, phi);
  EXPECT_EQ(MetricGraph(bc).distance("S", "DtensorS"), Curvature::exact(2));
  EXPECT_FALSE(bc.dualizing().has_value());
  EXPECT_EQ(*bc.ring_bass(), *m.ring_bass() * phi.bass_phi);
}

TEST(BaseChange, PreservesDistancesOnRandomModels) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto m = gen::random_model(rng, 6);
    const auto phi = phi_with(gen::product_series(gen::random_multiset(rng, 0, 2, 5)));
    expect_same_distances(m, base_change(m, phi), phi);
  }
}

TEST(CobaseChange, GorensteinMapMergesFamilies) {
  const auto m = square_zero_model(2);
  const auto phi = phi_with(LaurentSeries::monomial(2));
  const auto cbc = cobase_change_model(m, phi);
  const auto bc = base_change(m, phi);
  EXPECT_EQ(cbc.size(), m.size());
  EXPECT_EQ(without_name(cbc), without_name(bc));
  EXPECT_TRUE(check_mixed_distance(m, cbc, phi).pass);
}

TEST(CobaseChange, ReproducesIteratedModel) {
  for (long r = 2; r <= 4; ++r) {
    for (long s = 2; s <= 4; ++s) {
      const auto m = cobase_change_model(square_zero_model(r), trivial_extension_phi(s));
      ASSERT_EQ(m.size(), 4u);
      const MetricGraph g(m);
      EXPECT_EQ(g.sigma("DtensorS", "S"), Curvature::exact(r));
      EXPECT_EQ(g.sigma("cbcR", "S"), Curvature::exact(s));
      EXPECT_EQ(g.sigma("cbcD", "DtensorS"), Curvature::exact(s));
      EXPECT_EQ(g.sigma("cbcD", "cbcR"), Curvature::exact(r));
      EXPECT_EQ(g.sigma("cbcD", "S"), Curvature::exact(std::max(r, s)));
      EXPECT_EQ(m.covering_pairs().size(), 4u);
      EXPECT_TRUE(validate(m).valid());
    }
  }
}

TEST(CobaseChange, DaggerFamilyAtDistanceInjcurv) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto m = gen::random_model(rng, 5);
    const long s = 2 + i % 3;
    const auto phi = trivial_extension_phi(s);
    const auto cbc = cobase_change_model(m, phi);
    const MetricGraph g(cbc);
    for (std::size_t k = 0; k < m.size(); ++k) {
      EXPECT_EQ(g.distance(cobase_id(m, k), tensor_id(m, k, phi)), Curvature::exact(s));
    }
    EXPECT_TRUE(check_mixed_distance(m, cbc, phi).pass);
  }
}

TEST(MixedDistance, IteratedExamples) {
  const auto source = square_zero_model(2);
  const auto phi = trivial_extension_phi(3);
  const auto m = cobase_change_model(source, phi);
  const MetricGraph g(m);
  EXPECT_EQ(g.distance("cbcD", "S"), Curvature::exact(3));
  EXPECT_EQ(g.distance("cbcR", "DtensorS"), Curvature::exact(5));
  const auto report = check_mixed_distance(source, m, phi, {{"D", "R"}, {"R", "D"}, {"R", "R"}});
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.notes.size(), 1u);
  EXPECT_NE(report.notes.front().find("dist(cbcR, DtensorS) = 5"), std::string::npos);
}

TEST(MixedDistance, DetectsWrongModel) {
  const auto source = square_zero_model(2);
  const auto phi = trivial_extension_phi(3);
  // Pretend the fiber has embedding dimension 4.
  const auto wrong = cobase_change_model(source, trivial_extension_phi(4));
  EXPECT_FALSE(check_mixed_distance(source, wrong, phi).pass);
}

TEST(Specialization, Examples) {
  const auto strict = decreasing_example_strict();
  const auto r1 = check_specialization(strict.big, strict.small, strict.class_map);
  EXPECT_TRUE(r1.pass);
  ASSERT_EQ(r1.notes.size(), 1u);
  EXPECT_EQ(r1.notes.front().rfind("strict: dist(Rp, Rp) = 0 vs dist(R, D) = 2", 0), 0u);

  const auto equal = decreasing_example_equal();
  const auto r2 = check_specialization(equal.big, equal.small, equal.class_map);
  EXPECT_TRUE(r2.pass);
  ASSERT_EQ(r2.notes.size(), 1u);
  EXPECT_EQ(r2.notes.front().rfind("equal: dist(Sq, Eq) = 2 vs dist(S, E) = 2", 0), 0u);

  const auto m = iterated_model(2, 3);
  std::map<std::string, std::string> identity;
  for (const auto& c : m.classes()) identity[c.id] = c.id;
  const auto r3 = check_specialization(m, m, identity);
  EXPECT_TRUE(r3.pass);
  for (const auto& n : r3.notes) EXPECT_EQ(n.rfind("equal", 0), 0u);
}

TEST(Specialization, MapErrors) {
  const auto sq = square_zero_model(2);
  EXPECT_THROW(check_specialization(sq, sq, {{"R", "D"}, {"D", "R"}}), MapNotOrderPreserving);
  EXPECT_THROW(check_specialization(sq, sq, {{"R", "R"}}), MapNotOrderPreserving);
  EXPECT_THROW(check_specialization(sq, sq, {{"R", "R"}, {"D", "X"}}), MapNotOrderPreserving);
}

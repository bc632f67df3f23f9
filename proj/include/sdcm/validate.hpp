#pragma once

// Necessary conditions a model must satisfy to describe a real ring. The
// validator never throws on a bad model; each condition becomes a report
// entry with witnesses.

#include <sdcm/curvature.hpp>
#include <sdcm/laurent_series.hpp>
#include <sdcm/model.hpp>
#include <sdcm/report.hpp>
#include <sdcm/series_parse.hpp>

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace sdcm {

namespace detail {

inline std::string nonneg_witness(const LaurentSeries& s, const NonnegCheck& check) {
  const auto& [deg, value] = *check.witness;
  return "coefficient " + to_string(value) + " at t^" + std::to_string(static_cast<long>(deg) + s.shift());
}

inline std::optional<Curvature> try_curvature(const LaurentSeries& s, const CurvatureConfig& config,
                                              std::string& error) {
  try {
    return curvature(s, config);
  } catch (const std::exception& e) {
    error = e.what();
    return std::nullopt;
  }
}

}  // namespace detail

inline ValidationReport validate(const SdcModel& model, const CurvatureConfig& config = {}) {
  ValidationReport report;
  const std::size_t n = model.size();
  const auto ring_bass = model.effective_ring_bass();

  CheckReport poincare_nonneg("poincare_nonneg");
  std::vector<std::optional<Curvature>> curv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = model.poincare(i);
    const auto check = check_nonneg(p, config.n_check);
    if (!check.ok) {
      poincare_nonneg.fail(model.id(i) + ": " + detail::nonneg_witness(p, check));
      continue;
    }
    std::string err;
    curv[i] = detail::try_curvature(p, config, err);
    if (!curv[i]) poincare_nonneg.fail(model.id(i) + ": " + err);
  }
  report.entries.push_back(std::move(poincare_nonneg));

  CheckReport bass_nonneg("bass_nonneg");
  CheckReport bass_identity("bass_identity");
  for (std::size_t i = 0; i < n; ++i) {
    const auto bass = model.bass(i);
    if (!bass) continue;
    const auto check = check_nonneg(*bass, config.n_check);
    if (!check.ok) bass_nonneg.fail(model.id(i) + ": " + detail::nonneg_witness(*bass, check));
    if (ring_bass && model.at(i).bass && !equal_up_to_shift(model.poincare(i) * *bass, *ring_bass)) {
      bass_identity.fail(model.id(i) + ": poincare*bass = " + render(model.poincare(i) * *bass) +
                         " differs from ring bass " + render(*ring_bass));
    }
  }
  report.entries.push_back(std::move(bass_nonneg));
  report.entries.push_back(std::move(bass_identity));

  CheckReport antisymmetric("order_antisymmetric");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (model.leq(i, j) && model.leq(j, i)) antisymmetric.fail(model.id(i) + " and " + model.id(j) + " below each other");
    }
  }
  report.entries.push_back(std::move(antisymmetric));

  CheckReport top_max("top_is_maximum");
  for (std::size_t i = 0; i < n; ++i) {
    if (!model.leq(i, model.top())) top_max.fail(model.id(i) + " is not below the top class");
  }
  report.entries.push_back(std::move(top_max));

  CheckReport top_one("top_poincare_one");
  if (!equal_up_to_shift(model.poincare(model.top()), LaurentSeries::one())) {
    top_one.fail(model.id(model.top()) + " has poincare " + render(model.poincare(model.top())));
  }
  report.entries.push_back(std::move(top_one));

  CheckReport dual_min("dualizing_is_minimum");
  CheckReport dual_bass("dualizing_bass_monomial");
  if (auto d = model.dualizing()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!model.leq(*d, i)) dual_min.fail(model.id(*d) + " is not below " + model.id(i));
    }
    if (auto b = model.bass(*d); b && !b->is_monomial()) {
      dual_bass.fail(model.id(*d) + " has bass series " + render(*b));
    }
  }
  report.entries.push_back(std::move(dual_min));
  report.entries.push_back(std::move(dual_bass));

  CheckReport hom_nonneg("hom_series_nonneg");
  CheckReport hom_positive("distinct_comparable_positive_sigma");
  for (const auto& [small, large] : model.order_pairs()) {
    const LaurentSeries quotient = model.poincare(small) / model.poincare(large);
    const auto check = check_nonneg(quotient, config.n_check);
    const std::string pair = model.id(small) + " <= " + model.id(large);
    if (!check.ok) {
      hom_nonneg.fail(pair + ": " + detail::nonneg_witness(quotient, check));
      continue;
    }
    if (small != large && quotient.is_polynomial()) {
      hom_positive.fail(pair + ": hom series " + render(quotient) + " has curvature 0");
    }
  }
  report.entries.push_back(std::move(hom_nonneg));
  report.entries.push_back(std::move(hom_positive));

  CheckReport bounded("curvature_bounded_by_injcurv");
  if (ring_bass) {
    std::string err;
    const auto injcurv = detail::try_curvature(*ring_bass, config, err);
    if (!injcurv) {
      bounded.fail("ring bass: " + err);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (curv[i] && compare(*curv[i], *injcurv) == Ordering::greater) {
          bounded.fail(model.id(i) + ": curvature " + curv[i]->str() + " exceeds injcurv " + injcurv->str());
        }
      }
    }
  }
  report.entries.push_back(std::move(bounded));

  CheckReport zero_iff_top("curvature_zero_iff_top");
  for (std::size_t i = 0; i < n; ++i) {
    if (!curv[i]) continue;
    const bool zero = curv[i]->is_zero();
    if (zero && i != model.top()) zero_iff_top.fail(model.id(i) + " has curvature 0 but is not the top class");
    if (!zero && i == model.top()) zero_iff_top.fail(model.id(i) + " is the top class with curvature " + curv[i]->str());
  }
  report.entries.push_back(std::move(zero_iff_top));

  return report;
}

}  // namespace sdcm

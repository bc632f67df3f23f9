#pragma once

// The dagger involution K -> RHom(K, D) seen through series: the dual of K is
// the class whose Poincare series is I_R / P_K up to shift.

#include <sdcm/curvature.hpp>
#include <sdcm/error.hpp>
#include <sdcm/metric_graph.hpp>
#include <sdcm/model.hpp>
#include <sdcm/report.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace sdcm {

struct DaggerMap {
  std::vector<std::size_t> pairing;  // by class index

  std::size_t operator()(std::size_t i) const { return pairing.at(i); }

  std::map<std::string, std::string> by_id(const SdcModel& m) const {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < pairing.size(); ++i) out[m.id(i)] = m.id(pairing[i]);
    return out;
  }

  std::vector<std::size_t> fixed_points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pairing.size(); ++i) {
      if (pairing[i] == i) out.push_back(i);
    }
    return out;
  }
};

namespace detail {

// Completes `pairing` from position i on with order-reversing involutions,
// keeping the one with the fewest fixed points (first found on ties).
inline void search_dagger(const SdcModel& m, const std::vector<std::vector<std::size_t>>& candidates, std::size_t i,
                          std::vector<std::size_t>& pairing, std::vector<std::size_t>& best, std::size_t& best_fixed) {
  const std::size_t n = m.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  while (i < n && pairing[i] != unset) ++i;
  if (i == n) {
    std::size_t fixed = 0;
    for (std::size_t k = 0; k < n; ++k) fixed += pairing[k] == k;
    if (best.empty() || fixed < best_fixed) {
      best = pairing;
      best_fixed = fixed;
    }
    return;
  }
  for (auto c : candidates[i]) {
    if (pairing[c] != unset) continue;
    if (std::find(candidates[c].begin(), candidates[c].end(), i) == candidates[c].end()) continue;
    pairing[i] = c;
    pairing[c] = i;
    bool reverses = true;
    for (std::size_t a = 0; a < n && reverses; ++a) {
      for (std::size_t b = 0; b < n && reverses; ++b) {
        if (pairing[a] != unset && pairing[b] != unset && m.leq(a, b) != m.leq(pairing[b], pairing[a])) {
          reverses = false;
        }
      }
    }
    if (reverses) search_dagger(m, candidates, i + 1, pairing, best, best_fixed);
    pairing[i] = unset;
    pairing[c] = unset;
  }
}

}  // namespace detail

/// Without an explicit ring Bass series, P_D stands in for it (R dagger = D).
/// Classes sharing a series leave the choice open; the order must then decide.
inline DaggerMap build_dagger(const SdcModel& model) {
  const auto d = model.dualizing();
  if (!d) throw NoDualizing("model " + model.name() + " has no dualizing class");
  const LaurentSeries ring_bass = model.effective_ring_bass().value_or(model.poincare(*d));
  std::vector<std::vector<std::size_t>> candidates;
  bool unique = true;
  for (std::size_t i = 0; i < model.size(); ++i) {
    candidates.push_back(classes_with_series(model, ring_bass / model.poincare(i)));
    if (candidates.back().empty()) throw NotClosedUnderDuality(model.id(i));
    unique = unique && candidates.back().size() == 1;
  }
  DaggerMap dagger;
  if (unique) {
    for (const auto& c : candidates) dagger.pairing.push_back(c.front());
    return dagger;
  }
  std::vector<std::size_t> pairing(model.size(), static_cast<std::size_t>(-1));
  std::size_t best_fixed = 0;
  detail::search_dagger(model, candidates, 0, pairing, dagger.pairing, best_fixed);
  if (dagger.pairing.empty()) {
    throw ModelError("no order-reversing involution matches the series of model " + model.name());
  }
  return dagger;
}

inline CheckReport check_isometry(const SdcModel& model, const DaggerMap& dagger, const CurvatureConfig& config = {}) {
  CheckReport report("duality");
  const std::size_t n = model.size();
  if (dagger.pairing.size() != n) {
    report.fail("pairing has " + std::to_string(dagger.pairing.size()) + " entries for " + std::to_string(n) +
                " classes");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dagger(dagger(i)) != i) report.fail("not an involution at " + model.id(i));
  }
  if (model.dualizing() && dagger(model.top()) != *model.dualizing()) {
    report.fail("top class " + model.id(model.top()) + " pairs with " + model.id(dagger(model.top())));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (model.leq(a, b) != model.leq(dagger(b), dagger(a))) {
        report.fail("order not reversed at " + model.id(a) + " <= " + model.id(b));
      }
    }
  }
  if (!report.pass) return report;

  try {
    const MetricGraph g(model, config);
    for (const auto& [k, l] : model.order_pairs()) {
      if (!(g.sigma(k, l) == g.sigma(dagger(l), dagger(k)))) {
        report.fail("sigma(" + model.id(k) + ", " + model.id(l) + ") = " + g.sigma(k, l).str() + " but sigma(" +
                    model.id(dagger(l)) + ", " + model.id(dagger(k)) + ") = " + g.sigma(dagger(l), dagger(k)).str());
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const Length& d = g.distance(a, b);
        const Length& e = g.distance(dagger(a), dagger(b));
        if (!(d == e)) {
          report.fail("dist(" + model.id(a) + ", " + model.id(b) + ") = " + d.str() + " but dist(" +
                      model.id(dagger(a)) + ", " + model.id(dagger(b)) + ") = " + e.str());
        }
      }
    }
  } catch (const Error& e) {
    report.fail(e.what());
  }
  return report;
}

/// A fixed point of the pairing, or an odd number of classes, forces the
/// dualizing class to be the top class.
inline CheckReport check_fixed_points(const SdcModel& model, const DaggerMap& dagger) {
  CheckReport report("fixed_points");
  const bool gorenstein = model.dualizing() && *model.dualizing() == model.top();
  if (gorenstein) return report;
  for (auto i : dagger.fixed_points()) {
    report.fail("unrealizable: " + model.id(i) + " is self-dual in a non-Gorenstein model");
  }
  if (model.size() % 2 == 1) {
    report.fail("unrealizable: non-Gorenstein model with odd cardinality " + std::to_string(model.size()));
  }
  return report;
}

}  // namespace sdcm

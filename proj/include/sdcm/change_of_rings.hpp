#pragma once

// Base change K -> K (x) S and cobase change K -> K dagger-phi along a local
// map R -> S of finite flat dimension, given only by its Bass series I_phi.

#include <sdcm/curvature.hpp>
#include <sdcm/error.hpp>
#include <sdcm/homomorphism.hpp>
#include <sdcm/metric_graph.hpp>
#include <sdcm/model.hpp>
#include <sdcm/report.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

/// Id of K (x) S: the top class becomes the target ring, others get "tensor<S>".
inline std::string tensor_id(const SdcModel& source, std::size_t i, const HomomorphismDescriptor& phi) {
  return i == source.top() ? phi.target_name : source.id(i) + "tensor" + phi.target_name;
}

inline std::string cobase_id(const SdcModel& source, std::size_t i) { return "cbc" + source.id(i); }

namespace detail {

inline std::optional<LaurentSeries> times_phi(const std::optional<LaurentSeries>& s,
                                              const HomomorphismDescriptor& phi) {
  if (!s) return std::nullopt;
  return *s * phi.bass_phi;
}

}  // namespace detail

/// Same series and order; the ring Bass series picks up the factor I_phi.
/// D (x) S stays dualizing only when phi is Gorenstein.
inline SdcModel base_change(const SdcModel& model, const HomomorphismDescriptor& phi,
                            const CurvatureConfig& config = {}) {
  std::vector<SdcClass> classes;
  for (std::size_t i = 0; i < model.size(); ++i) {
    classes.push_back({tensor_id(model, i, phi), model.poincare(i), detail::times_phi(model.at(i).bass, phi)});
  }
  std::vector<OrderPair> order;
  for (const auto& [s, l] : model.order_pairs()) {
    if (s != l) order.emplace_back(tensor_id(model, s, phi), tensor_id(model, l, phi));
  }
  std::optional<std::string> dualizing;
  if (model.dualizing() && injcurv_phi(phi, config).is_zero()) dualizing = tensor_id(model, *model.dualizing(), phi);
  return SdcModel(model.name() + "_bc_" + phi.name, std::move(classes), order, phi.target_name, dualizing,
                  detail::times_phi(model.effective_ring_bass(), phi));
}

/// Both images of the source in one model over S. A Gorenstein phi makes the
/// two families coincide, and the result is the base change.
inline SdcModel cobase_change_model(const SdcModel& model, const HomomorphismDescriptor& phi,
                                    const CurvatureConfig& config = {}) {
  if (injcurv_phi(phi, config).is_zero()) {
    return renamed(base_change(model, phi, config), model.name() + "_cbc_" + phi.name);
  }
  const std::size_t n = model.size();
  std::vector<SdcClass> classes;
  for (std::size_t i = 0; i < n; ++i) classes.push_back({tensor_id(model, i, phi), model.poincare(i), std::nullopt});
  for (std::size_t i = 0; i < n; ++i) {
    classes.push_back({cobase_id(model, i), model.poincare(i) * phi.bass_phi, std::nullopt});
  }
  std::vector<OrderPair> order;
  for (const auto& [k, l] : model.order_pairs()) {
    if (k != l) {
      order.emplace_back(tensor_id(model, k, phi), tensor_id(model, l, phi));
      order.emplace_back(cobase_id(model, k), cobase_id(model, l));
    }
    order.emplace_back(cobase_id(model, k), tensor_id(model, l, phi));
  }
  std::optional<std::string> dualizing;
  if (model.dualizing()) dualizing = cobase_id(model, *model.dualizing());
  return SdcModel(model.name() + "_cbc_" + phi.name, std::move(classes), order, phi.target_name, dualizing,
                  detail::times_phi(model.effective_ring_bass(), phi));
}

namespace detail {

// Image of K under cobase change; merged into K (x) S for Gorenstein phi.
inline std::string cobase_image(const SdcModel& source, const SdcModel& model_s, std::size_t i,
                                const HomomorphismDescriptor& phi) {
  const std::string id = cobase_id(source, i);
  return model_s.contains(id) ? id : tensor_id(source, i, phi);
}

}  // namespace detail

/// On the requested source pairs (all pairs when empty):
/// dist(K dagger, L (x) S) = max(dist(K, L), injcurv phi) when K <= L, and
/// dist(K dagger, L (x) S) <= injcurv phi + dist(K, L) always. Also checks
/// that K (x) S and R dagger are noncomparable when phi is not Gorenstein.
inline CheckReport check_mixed_distance(const SdcModel& source, const SdcModel& model_s,
                                        const HomomorphismDescriptor& phi, std::vector<OrderPair> pairs = {},
                                        const CurvatureConfig& config = {}) {
  CheckReport report("mixed_distance");
  if (pairs.empty()) {
    for (std::size_t a = 0; a < source.size(); ++a) {
      for (std::size_t b = 0; b < source.size(); ++b) pairs.emplace_back(source.id(a), source.id(b));
    }
  }
  try {
    const MetricGraph gr(source, config);
    const MetricGraph gs(model_s, config);
    const Curvature inj = injcurv_phi(phi, config);
    for (const auto& [kid, lid] : pairs) {
      const std::size_t k = source.index_of(kid);
      const std::size_t l = source.index_of(lid);
      const std::string dag = detail::cobase_image(source, model_s, k, phi);
      const std::string ten = tensor_id(source, l, phi);
      const Length& d = gs.distance(dag, ten);
      const Length& base = gr.distance(k, l);
      const std::string label = "dist(" + dag + ", " + ten + ") = " + d.str();
      if (source.leq(k, l)) {
        const Length expected = max(base, inj);
        const Ordering ord = compare(d, expected);
        const bool ok = ord == Ordering::equal || (ord == Ordering::ambiguous && !(d.is_exact() && expected.is_exact()));
        if (!ok) report.fail(label + " but max(dist, injcurv) = " + expected.str());
      }
      const Length bound = inj + base;
      const Ordering ord = compare(d, bound);
      if (ord == Ordering::greater) {
        report.fail(label + " exceeds injcurv + dist = " + bound.str());
      } else if (ord == Ordering::equal && !source.leq(k, l)) {
        report.note(label + " attains injcurv + dist");
      }
    }
    if (!inj.is_zero()) {
      const std::string r_dag = cobase_id(source, source.top());
      for (std::size_t i = 0; i < source.size(); ++i) {
        if (i == source.top()) continue;
        const std::string ten = tensor_id(source, i, phi);
        if (model_s.leq(ten, r_dag) || model_s.leq(r_dag, ten)) {
          report.fail(ten + " and " + r_dag + " are comparable although phi is not Gorenstein");
        }
      }
    }
  } catch (const Error& e) {
    report.fail(e.what());
  }
  return report;
}

/// dist_small(map K, map L) <= dist_big(K, L) for every pair. Strict
/// instances are reported as notes.
inline CheckReport check_specialization(const SdcModel& big, const SdcModel& small,
                                        const std::map<std::string, std::string>& class_map,
                                        const CurvatureConfig& config = {}) {
  CheckReport report("specialization");
  std::vector<std::size_t> image(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) {
    const auto it = class_map.find(big.id(i));
    if (it == class_map.end()) throw MapNotOrderPreserving("class map is undefined on " + big.id(i));
    if (!small.contains(it->second)) throw MapNotOrderPreserving("class map sends " + big.id(i) + " to unknown " + it->second);
    image[i] = small.index_of(it->second);
  }
  for (const auto& [k, l] : big.order_pairs()) {
    if (!small.leq(image[k], image[l])) {
      throw MapNotOrderPreserving("class map breaks " + big.id(k) + " <= " + big.id(l));
    }
  }
  const MetricGraph gb(big, config);
  const MetricGraph gs(small, config);
  for (std::size_t a = 0; a < big.size(); ++a) {
    for (std::size_t b = a + 1; b < big.size(); ++b) {
      const Length& db = gb.distance(a, b);
      const Length& ds = gs.distance(image[a], image[b]);
      const std::string label = "dist(" + small.id(image[a]) + ", " + small.id(image[b]) + ") = " + ds.str() +
                                " vs dist(" + big.id(a) + ", " + big.id(b) + ") = " + db.str();
      switch (compare(ds, db)) {
        case Ordering::greater:
          report.fail(label);
          break;
        case Ordering::less:
          report.note("strict: " + label);
          break;
        case Ordering::equal:
          report.note("equal: " + label);
          break;
        case Ordering::ambiguous:
          report.note("undecided: " + label);
          break;
      }
    }
  }
  return report;
}

}  // namespace sdcm

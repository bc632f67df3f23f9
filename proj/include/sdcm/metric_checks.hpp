#pragma once

// Checkers for the metric-level theorems. Each returns a CheckReport; a
// failing report on a model that passed `validate` means the model cannot
// come from an actual ring.

#include <sdcm/curvature.hpp>
#include <sdcm/metric_graph.hpp>
#include <sdcm/model.hpp>
#include <sdcm/report.hpp>
#include <sdcm/series_parse.hpp>

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace sdcm {

namespace detail {

inline std::string pair_name(const SdcModel& m, std::size_t a, std::size_t b) {
  return "(" + m.id(a) + ", " + m.id(b) + ")";
}

}  // namespace detail

/// Nonnegativity, identity of indiscernibles, symmetry, triangle inequality
/// and the gap dist in {0} u [1, inf). Interval distances are compared up to
/// containment.
inline CheckReport check_metric_axioms(const MetricGraph& g) {
  CheckReport report("metric");
  const auto& m = g.model();
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Length& d = g.distance(a, b);
      const std::string pair = detail::pair_name(m, a, b);
      if (d.lo() < 0) report.fail("negative distance " + d.str() + " at " + pair);
      if (a == b && !d.is_zero()) report.fail("nonzero self-distance " + d.str() + " at " + pair);
      if (a != b && d.is_zero()) report.fail("identity of indiscernibles: distance 0 between distinct " + pair);
      if (a != b && !d.is_zero() && d.hi() < 1) report.fail("gap: distance " + d.str() + " in (0,1) at " + pair);
      if (!(d == g.distance(b, a))) report.fail("asymmetric distance at " + pair);
      for (std::size_t c = 0; c < n; ++c) {
        const Length via = g.distance(a, c) + g.distance(c, b);
        if (d.lo() > via.hi()) {
          report.fail("triangle: dist" + pair + " = " + d.str() + " > " + via.str() + " via " + m.id(c));
        }
      }
    }
  }
  return report;
}

/// dist = sigma on every comparable pair.
inline CheckReport check_direct_edge(const MetricGraph& g) {
  CheckReport report("edge");
  const auto& m = g.model();
  for (const auto& [small, large] : m.order_pairs()) {
    const Length& d = g.distance(small, large);
    const Curvature& s = g.sigma(small, large);
    const bool ok = (d.is_exact() && s.is_exact()) ? d == s : compare(d, s) != Ordering::less;
    if (!ok) report.fail("dist" + detail::pair_name(m, small, large) + " = " + d.str() + " but sigma = " + s.str());
  }
  return report;
}

/// dist(K,L) <= curv K + curv L <= 2 injcurv R, and with a dualizing class
/// dist(K,L) <= injcurv K + injcurv L.
inline CheckReport check_bounds(const MetricGraph& g) {
  CheckReport report("bounds");
  const auto& m = g.model();
  const auto& cfg = g.config();
  const std::size_t n = g.size();
  std::vector<Curvature> curv(n);
  for (std::size_t i = 0; i < n; ++i) curv[i] = curvature(m.poincare(i), cfg);
  std::optional<Curvature> ring_injcurv;
  if (auto rb = m.effective_ring_bass()) ring_injcurv = curvature(*rb, cfg);
  std::vector<std::optional<Curvature>> injcurv(n);
  if (m.dualizing()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto b = m.bass(i)) injcurv[i] = curvature(*b, cfg);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Length& d = g.distance(a, b);
      const std::string pair = detail::pair_name(m, a, b);
      const Length via_top = curv[a] + curv[b];
      if (compare(d, via_top) == Ordering::greater) {
        report.fail("dist" + pair + " = " + d.str() + " exceeds curv sum " + via_top.str());
      }
      if (ring_injcurv) {
        const Length cap = *ring_injcurv + *ring_injcurv;
        if (compare(via_top, cap) == Ordering::greater) {
          report.fail("curv sum " + via_top.str() + " at " + pair + " exceeds 2*injcurv(R) = " + cap.str());
        }
        if (compare(d, cap) == Ordering::greater) {
          report.fail("dist" + pair + " = " + d.str() + " exceeds 2*injcurv(R) = " + cap.str());
        }
      }
      if (injcurv[a] && injcurv[b]) {
        const Length via_dual = *injcurv[a] + *injcurv[b];
        if (compare(d, via_dual) == Ordering::greater) {
          report.fail("dist" + pair + " = " + d.str() + " exceeds injcurv sum " + via_dual.str());
        }
      }
    }
  }
  return report;
}

struct Trichotomy {
  bool noncomparable_pair = false;
  bool at_least_three = false;
  bool nontrivial_ball = false;
  std::optional<std::size_t> ball_center;
  std::optional<Rational> ball_radius;
  std::vector<std::size_t> ball_members;
};

/// Evaluates the three conditions. Ball radii are searched over midpoints of
/// consecutive distinct distances from each center; balls only change at
/// attained distances, so nothing is missed.
inline Trichotomy evaluate_trichotomy(const MetricGraph& g) {
  Trichotomy t;
  const auto& m = g.model();
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n && !t.noncomparable_pair; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!m.comparable(a, b)) {
        t.noncomparable_pair = true;
        break;
      }
    }
  }
  t.at_least_three = n >= 3;
  for (std::size_t k = 0; k < n && !t.nontrivial_ball; ++k) {
    std::vector<Length> values;
    for (std::size_t j = 0; j < n; ++j) values.push_back(g.distance(k, j));
    std::sort(values.begin(), values.end(), [](const Length& x, const Length& y) { return x.lo() < y.lo(); });
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      // Only separated neighbours yield a radius that is strictly between them.
      if (!(values[i].hi() < values[i + 1].lo())) continue;
      const Rational delta = (values[i].hi() + values[i + 1].lo()) / 2;
      const auto members = g.ball(k, delta);
      if (members.size() > 1 && members.size() < n) {
        t.nontrivial_ball = true;
        t.ball_center = k;
        t.ball_radius = delta;
        t.ball_members = members;
        break;
      }
    }
  }
  return t;
}

inline CheckReport check_trichotomy(const MetricGraph& g) {
  CheckReport report("trichotomy");
  const auto t = evaluate_trichotomy(g);
  auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
  report.note("noncomparable_pair=" + flag(t.noncomparable_pair) + " at_least_three=" + flag(t.at_least_three) +
              " nontrivial_ball=" + flag(t.nontrivial_ball));
  if (t.nontrivial_ball) {
    std::string members;
    for (auto j : t.ball_members) members += (members.empty() ? "" : ", ") + g.model().id(j);
    report.note("B(" + g.model().id(*t.ball_center) + ", " + to_string(*t.ball_radius) + ") = {" + members + "}");
  }
  if (t.noncomparable_pair != t.at_least_three || t.at_least_three != t.nontrivial_ball) {
    report.fail("conditions disagree: " + report.notes.front());
  }
  return report;
}

/// Poset consequences of the fixed-point theorem. For K <= L with H a class
/// carrying the series of RHom(L, K): L <= H forces L = K, H <= L forces
/// L = top. A comparable pair whose hom class is missing from the model is
/// also flagged, since RHom(L, K) is itself semidualizing.
inline CheckReport check_corollary_fixed(const SdcModel& m, const CurvatureConfig& config = {}) {
  CheckReport report("fixed");
  for (const auto& [k, l] : m.order_pairs()) {
    const std::string pair = m.id(k) + " <= " + m.id(l);
    LaurentSeries hom;
    try {
      hom = hom_series(m, l, k, config.n_check);
    } catch (const std::exception& e) {
      report.fail(pair + ": " + e.what());
      continue;
    }
    const auto hs = classes_with_series(m, hom);
    if (hs.empty()) {
      report.fail(pair + ": no class carries the hom series " + render(hom));
      continue;
    }
    // Series only pin H down up to classes sharing it; one consistent candidate suffices.
    std::vector<std::string> witnesses;
    std::size_t consistent = 0;
    for (auto h : hs) {
      const std::size_t before = witnesses.size();
      if (m.leq(l, h) && l != k) {
        witnesses.push_back(pair + ": " + m.id(l) + " <= hom class " + m.id(h) + " but " + m.id(l) + " != " + m.id(k));
      }
      if (m.leq(h, l) && l != m.top()) {
        witnesses.push_back(pair + ": hom class " + m.id(h) + " <= " + m.id(l) + " but " + m.id(l) +
                            " is not the top class");
      }
      if (witnesses.size() == before) ++consistent;
    }
    if (consistent == 0) {
      for (auto& w : witnesses) report.fail(std::move(w));
    } else if (hs.size() > 1) {
      report.note(pair + ": hom series shared by " + std::to_string(hs.size()) + " classes");
    }
  }
  return report;
}

/// Graphviz digraph of the covering relations, edges small -> large labeled by sigma.
inline std::string emit_dot(const MetricGraph& g) {
  const auto& m = g.model();
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph " + quote(m.name()) + " {\n";
  for (std::size_t i = 0; i < m.size(); ++i) out += "  " + quote(m.id(i)) + ";\n";
  for (const auto& [s, l] : m.covering_pairs()) {
    out += "  " + quote(m.id(s)) + " -> " + quote(m.id(l)) + " [label=" + quote(g.sigma(s, l).str()) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sdcm

#pragma once

// The comparability graph of a model with sigma edge weights, routes, the
// induced distance and the ball / diameter queries built on it.
//
// Distances are shortest paths on the undirected comparability graph. Any
// path is a route of the same length once trivial edges [M] -> [M] are
// inserted, and a finite graph attains its infimum, so this is exactly the
// route-infimum distance. Interval-valued weights are handled by running
// Dijkstra separately on the lower and upper endpoints: the true distance
// lies in [min over paths of lo, min over paths of hi].

#include <sdcm/curvature.hpp>
#include <sdcm/error.hpp>
#include <sdcm/model.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

/// Alternating walk K0 -> L0 <- K1 -> L1 <- ... <- Kn, stored as
/// [K0, L0, K1, L1, ..., Kn] (odd length, n >= 0).
struct Route {
  std::vector<std::string> vertices;

  std::size_t edges() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  /// The same walk read backwards.
  Route reversed() const { return Route{{vertices.rbegin(), vertices.rend()}}; }

  /// gamma gamma' (the last vertex of *this must be the first of `next`).
  Route concat(const Route& next) const {
    if (vertices.empty()) return next;
    if (next.vertices.empty()) return *this;
    if (vertices.back() != next.vertices.front()) throw InvalidRoute("concatenated routes do not meet");
    Route out = *this;
    out.vertices.insert(out.vertices.end(), next.vertices.begin() + 1, next.vertices.end());
    return out;
  }
};

class MetricGraph {
 public:
  explicit MetricGraph(SdcModel model, CurvatureConfig config = {})
      : model_(std::move(model)), config_(std::move(config)) {
    const std::size_t n = model_.size();
    sigma_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          sigma_[i * n + j] = Curvature::exact(0);
        } else if (model_.leq(i, j)) {
          sigma_[i * n + j] = curvature(hom_series(model_, j, i, config_.n_check), config_);
        }
      }
    }
    compute_distances();
  }

  const SdcModel& model() const noexcept { return model_; }
  const CurvatureConfig& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return model_.size(); }

  /// The same graph with curvature intervals refined by a factor of 10^6.
  MetricGraph refined() const {
    CurvatureConfig finer = config_;
    finer.epsilon /= 1000000;
    return MetricGraph(model_, finer);
  }

  /// sigma([small], [large]) = curv(RHom(large, small)).
  const Curvature& sigma(std::size_t small, std::size_t large) const {
    const auto& w = sigma_[small * size() + large];
    if (!w) throw NotComparable(model_.id(small), model_.id(large));
    return *w;
  }
  const Curvature& sigma(const std::string& small, const std::string& large) const {
    return sigma(model_.index_of(small), model_.index_of(large));
  }

  /// Undirected edge weight, if the classes are comparable.
  const std::optional<Curvature>& edge(std::size_t a, std::size_t b) const {
    const auto& w = sigma_[a * size() + b];
    return w ? w : sigma_[b * size() + a];
  }

  Length route_length(const Route& route) const {
    if (route.vertices.empty() || route.vertices.size() % 2 == 0) {
      throw InvalidRoute("a route has the form K0, L0, K1, ..., Kn");
    }
    Length total = Curvature::exact(0);
    for (std::size_t j = 1; j < route.vertices.size(); j += 2) {
      const auto& up_from = route.vertices[j - 1];
      const auto& peak = route.vertices[j];
      const auto& down_to = route.vertices[j + 1];
      for (const auto* small : {&up_from, &down_to}) {
        if (!model_.contains(*small) || !model_.contains(peak) || !model_.leq(*small, peak)) {
          throw InvalidRoute("invalid route edge: " + *small + " is not below " + peak);
        }
      }
      total += sigma(up_from, peak);
      total += sigma(down_to, peak);
    }
    return total;
  }

  const Length& distance(std::size_t a, std::size_t b) const {
    return dist_[a * size() + b];
  }
  const Length& distance(const std::string& a, const std::string& b) const {
    return distance(model_.index_of(a), model_.index_of(b));
  }

  /// A route realizing the lower endpoint of distance(a, b).
  Route shortest_route(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> path{b};
    while (path.back() != a) path.push_back(pred_[a * size() + path.back()]);
    std::reverse(path.begin(), path.end());
    // An up step followed by a down step shares one peak.
    Route route{{model_.id(a)}};
    for (std::size_t k = 0; k + 1 < path.size();) {
      std::size_t peak = path[k];
      std::size_t land = path[k + 1];
      if (model_.leq(path[k], path[k + 1])) {
        peak = path[k + 1];
        ++k;
        if (k + 1 < path.size() && model_.leq(path[k + 1], peak)) land = path[++k];
      } else {
        ++k;
      }
      route.vertices.push_back(model_.id(peak));
      route.vertices.push_back(model_.id(land));
    }
    if (route.vertices.size() == 1) {
      route.vertices.push_back(model_.id(a));
      route.vertices.push_back(model_.id(a));
    }
    return route;
  }

  /// { L : dist(center, L) < delta }. Undecidable comparisons trigger one
  /// refinement pass before AmbiguousComparison is raised.
  std::vector<std::size_t> ball(std::size_t center, const Rational& delta) const {
    if (delta <= 0) throw std::invalid_argument("ball radius must be positive");
    std::vector<std::size_t> out;
    std::optional<MetricGraph> finer;
    for (std::size_t j = 0; j < size(); ++j) {
      Ordering ord = compare(distance(center, j), delta);
      if (ord == Ordering::ambiguous) {
        if (!finer) finer.emplace(refined());
        ord = compare(finer->distance(center, j), delta);
        if (ord == Ordering::ambiguous) {
          throw AmbiguousComparison("cannot decide dist(" + model_.id(center) + ", " + model_.id(j) + ") < " +
                                    to_string(delta));
        }
      }
      if (ord == Ordering::less) out.push_back(j);
    }
    return out;
  }

  std::set<std::string> ball(const std::string& center, const Rational& delta) const {
    std::set<std::string> ids;
    for (auto j : ball(model_.index_of(center), delta)) ids.insert(model_.id(j));
    return ids;
  }

  Length diameter() const {
    Length best = Curvature::exact(0);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) best = max(best, distance(i, j));
    }
    return best;
  }

 private:
  // Dijkstra over exact rational weights; ties settle by lexicographic id.
  std::pair<std::vector<Rational>, std::vector<std::size_t>> dijkstra(std::size_t source, bool upper) const {
    const std::size_t n = size();
    std::vector<std::optional<Rational>> best(n);
    std::vector<std::size_t> pred(n, source);
    std::vector<char> done(n, 0);
    best[source] = Rational(0);
    for (std::size_t round = 0; round < n; ++round) {
      std::optional<std::size_t> u;
      for (std::size_t v = 0; v < n; ++v) {
        if (done[v] || !best[v]) continue;
        if (!u || *best[v] < *best[*u] || (*best[v] == *best[*u] && model_.id(v) < model_.id(*u))) u = v;
      }
      if (!u) break;
      done[*u] = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (done[v]) continue;
        const auto& w = edge(*u, v);
        if (!w) continue;
        Rational candidate = *best[*u] + (upper ? w->hi() : w->lo());
        if (!best[v] || candidate < *best[v]) {
          best[v] = std::move(candidate);
          pred[v] = *u;
        } else if (candidate == *best[v] && model_.id(*u) < model_.id(pred[v])) {
          pred[v] = *u;
        }
      }
    }
    std::vector<Rational> out(n);
    for (std::size_t v = 0; v < n; ++v) {
      // Every class sits below the top class, so a valid model is connected;
      // an invalid one may not be.
      if (!best[v]) throw ModelError("comparability graph is disconnected at " + model_.id(v));
      out[v] = *best[v];
    }
    return {std::move(out), std::move(pred)};
  }

  void compute_distances() {
    const std::size_t n = size();
    std::vector<Length> dist(n * n);
    std::vector<std::size_t> pred(n * n);
    for (std::size_t s = 0; s < n; ++s) {
      auto [lo, lo_pred] = dijkstra(s, false);
      auto [hi, hi_pred] = dijkstra(s, true);
      for (std::size_t v = 0; v < n; ++v) {
        dist[s * n + v] = Curvature::interval(lo[v], hi[v]);
        pred[s * n + v] = lo_pred[v];
      }
    }
    dist_ = std::move(dist);
    pred_ = std::move(pred);
  }

  SdcModel model_;
  CurvatureConfig config_;
  std::vector<std::optional<Curvature>> sigma_;
  std::vector<Length> dist_;
  std::vector<std::size_t> pred_;
};

}  // namespace sdcm

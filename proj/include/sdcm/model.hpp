#pragma once

// Finite model of the set of semidualizing classes of a local ring: each
// class carries its Poincare series (and optionally its Bass series); the
// reflexivity order is stored as its reflexive-transitive closure.

#include <sdcm/curvature.hpp>
#include <sdcm/error.hpp>
#include <sdcm/laurent_series.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

struct SdcClass {
  std::string id;
  LaurentSeries poincare;
  std::optional<LaurentSeries> bass;
};

using OrderPair = std::pair<std::string, std::string>;  // (small, large)

class SdcModel {
 public:
  SdcModel() = default;

  /// Resolves ids and closes `order` reflexively and transitively. Throws
  /// ModelError for duplicate or unknown ids. Antisymmetry and the algebraic
  /// conditions are left to `validate`.
  SdcModel(std::string name, std::vector<SdcClass> classes, const std::vector<OrderPair>& order,
           const std::string& top, std::optional<std::string> dualizing = std::nullopt,
           std::optional<LaurentSeries> ring_bass = std::nullopt)
      : name_(std::move(name)), classes_(std::move(classes)), ring_bass_(std::move(ring_bass)) {
    if (classes_.empty()) throw ModelError("model has no classes");
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (!index_.emplace(classes_[i].id, i).second) throw ModelError("duplicate class id: " + classes_[i].id);
    }
    top_ = index_of(top);
    if (dualizing) dualizing_ = index_of(*dualizing);
    const std::size_t n = classes_.size();
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (const auto& [small, large] : order) leq_[index_of(small) * n + index_of(large)] = 1;
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
        }
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<SdcClass>& classes() const noexcept { return classes_; }
  const SdcClass& at(std::size_t i) const { return classes_.at(i); }
  const std::string& id(std::size_t i) const { return classes_.at(i).id; }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ModelError("unknown class id: " + id);
    return it->second;
  }

  std::size_t top() const noexcept { return top_; }
  std::optional<std::size_t> dualizing() const noexcept { return dualizing_; }
  const std::optional<LaurentSeries>& ring_bass() const noexcept { return ring_bass_; }

  /// Ring Bass series: the explicit one, else the Bass series given for the top class.
  std::optional<LaurentSeries> effective_ring_bass() const {
    if (ring_bass_) return ring_bass_;
    return classes_[top_].bass;
  }

  /// [small] below [large] in the reflexivity order.
  bool leq(std::size_t small, std::size_t large) const { return leq_[small * size() + large] != 0; }
  bool leq(const std::string& small, const std::string& large) const {
    return leq(index_of(small), index_of(large));
  }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  const LaurentSeries& poincare(std::size_t i) const { return classes_.at(i).poincare; }

  /// Bass series of a class: explicit, else ring_bass / poincare.
  std::optional<LaurentSeries> bass(std::size_t i) const {
    if (classes_.at(i).bass) return classes_[i].bass;
    if (auto rb = effective_ring_bass()) return *rb / classes_[i].poincare;
    return std::nullopt;
  }

  /// Every (small, large) pair of the closed order, including reflexive ones,
  /// in class order.
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (leq(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  /// Covering relations (transitive reduction of the strict order).
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (i == j || !leq(i, j) || leq(j, i)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < size() && covered; ++k) {
          if (k == i || k == j) continue;
          if (leq(i, k) && leq(k, j) && !leq(k, i) && !leq(j, k)) covered = false;
        }
        if (covered) out.emplace_back(i, j);
      }
    }
    return out;
  }

 private:
  std::string name_;
  std::vector<SdcClass> classes_;
  std::map<std::string, std::size_t> index_;
  std::vector<char> leq_;
  std::size_t top_ = 0;
  std::optional<std::size_t> dualizing_;
  std::optional<LaurentSeries> ring_bass_;
};

/// Copy of `model` under another name.
inline SdcModel renamed(const SdcModel& model, std::string name) {
  std::vector<OrderPair> order;
  for (const auto& [s, l] : model.order_pairs()) order.emplace_back(model.id(s), model.id(l));
  std::optional<std::string> dualizing;
  if (model.dualizing()) dualizing = model.id(*model.dualizing());
  return SdcModel(std::move(name), model.classes(), order, model.id(model.top()), dualizing, model.ring_bass());
}

/// Poincare series of RHom(large, small) = P_small / P_large, certified nonnegative.
inline LaurentSeries hom_series(const SdcModel& model, std::size_t large, std::size_t small,
                                std::size_t n_check = kDefaultNCheck) {
  if (!model.leq(small, large)) throw NotComparable(model.id(small), model.id(large));
  return certify_nonneg(model.poincare(small) / model.poincare(large), n_check);
}

inline LaurentSeries hom_series(const SdcModel& model, const std::string& large, const std::string& small,
                                std::size_t n_check = kDefaultNCheck) {
  return hom_series(model, model.index_of(large), model.index_of(small), n_check);
}

/// Indices of classes whose Poincare series equals `series` up to a power of t.
inline std::vector<std::size_t> classes_with_series(const SdcModel& model, const LaurentSeries& series) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (equal_up_to_shift(model.poincare(i), series)) out.push_back(i);
  }
  return out;
}

/// Dualizing class equal to the top class; without a dualizing class,
/// zero injective curvature of the ring; a lone top class counts as Gorenstein.
inline bool is_gorenstein(const SdcModel& model, const CurvatureConfig& config = {}) {
  if (model.dualizing()) return *model.dualizing() == model.top();
  if (auto rb = model.effective_ring_bass()) return curvature(*rb, config).is_zero();
  return model.size() == 1;
}

}  // namespace sdcm

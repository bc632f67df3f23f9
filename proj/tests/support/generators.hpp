#pragma once

// Random and enumerated models whose classes are products of 1/(1 - c t).
// A class is a multiset of factors c; K <= L is only ever asserted when the
// factors of L are contained in those of K, so P_K / P_L is again such a
// product and every model produced here is realizable at the series level.

#include <sdcm/sdcm.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gen {

using Multiset = std::vector<long>;  // sorted factors

inline sdcm::LaurentSeries product_series(const Multiset& m) {
  sdcm::LaurentSeries out = sdcm::LaurentSeries::one();
  for (long c : m) out = out * sdcm::LaurentSeries::geometric(c);
  return out;
}

inline bool contains(const Multiset& big, const Multiset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Multiset difference(const Multiset& big, const Multiset& small) {
  Multiset out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
  return out;
}

inline Multiset max_union(const std::vector<Multiset>& sets) {
  Multiset out;
  for (const auto& s : sets) {
    Multiset merged;
    std::set_union(out.begin(), out.end(), s.begin(), s.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

inline std::string name_of(const Multiset& m) {
  if (m.empty()) return "R";
  std::string id = "K";
  for (long c : m) id += std::to_string(c);
  return id;
}

/// Builds a model from multisets (index 0 must be the empty top class) and
/// (small, large) index pairs.
inline sdcm::SdcModel build(const std::string& name, const std::vector<Multiset>& sets,
                            const std::vector<std::pair<std::size_t, std::size_t>>& order,
                            std::optional<std::size_t> dualizing, std::optional<Multiset> ring_bass) {
  std::vector<sdcm::SdcClass> classes;
  for (const auto& m : sets) classes.push_back({name_of(m), product_series(m), std::nullopt});
  std::vector<sdcm::OrderPair> pairs;
  for (std::size_t i = 1; i < sets.size(); ++i) pairs.emplace_back(name_of(sets[i]), name_of(sets[0]));
  for (const auto& [s, l] : order) pairs.emplace_back(name_of(sets[s]), name_of(sets[l]));
  std::optional<std::string> d;
  if (dualizing) d = name_of(sets[*dualizing]);
  std::optional<sdcm::LaurentSeries> rb;
  if (ring_bass) rb = product_series(*ring_bass);
  return sdcm::SdcModel(name, std::move(classes), pairs, name_of(sets[0]), d, rb);
}

inline Multiset random_multiset(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size, long max_factor) {
  std::uniform_int_distribution<std::size_t> size(min_size, max_size);
  std::uniform_int_distribution<long> factor(1, max_factor);
  Multiset m(size(rng));
  for (auto& c : m) c = factor(rng);
  std::sort(m.begin(), m.end());
  return m;
}

/// Up to `max_classes` classes, factors c <= 5, a random sub-order of containment.
inline sdcm::SdcModel random_model(std::mt19937_64& rng, std::size_t max_classes = 8) {
  std::uniform_int_distribution<std::size_t> count(1, max_classes);
  const std::size_t n = count(rng);
  std::vector<Multiset> sets{{}};
  std::set<Multiset> seen{{}};
  for (int attempts = 0; sets.size() < n && attempts < 1000; ++attempts) {
    Multiset m = random_multiset(rng, 1, 3, 5);
    if (seen.insert(m).second) sets.push_back(std::move(m));
  }
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::size_t j = 1; j < sets.size(); ++j) {
      if (i != j && contains(sets[i], sets[j]) && coin(rng)) order.emplace_back(i, j);
    }
  }
  std::optional<Multiset> rb;
  if (coin(rng)) rb = max_union(sets);
  return build("random", sets, order, std::nullopt, rb);
}

/// Models closed under K -> B \ K for a ring Bass multiset B: the top class
/// is empty, the dualizing class is B, and the order is symmetric under the
/// duality. Self-dual classes are avoided, so the model is not Gorenstein
/// unless B is empty.
inline sdcm::SdcModel random_duality_closed_model(std::mt19937_64& rng, std::size_t max_pairs = 3) {
  Multiset b;
  do b = random_multiset(rng, 1, 4, 5);
  while (b.empty());
  std::vector<Multiset> sets{{}, b};
  std::set<Multiset> seen{{}, b};
  std::uniform_int_distribution<std::size_t> pairs(0, max_pairs - 1);
  const std::size_t extra = pairs(rng);
  std::bernoulli_distribution coin(0.5);
  for (int attempts = 0; sets.size() < 2 + 2 * extra && attempts < 200; ++attempts) {
    Multiset k;
    for (long c : b) {
      if (coin(rng)) k.push_back(c);
    }
    const Multiset dual = difference(b, k);
    if (k == dual || seen.count(k) || seen.count(dual)) continue;
    seen.insert(k);
    seen.insert(dual);
    sets.push_back(k);
    sets.push_back(dual);
  }
  std::map<Multiset, std::size_t> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < sets.size(); ++i) order.emplace_back(1, i);
  for (std::size_t i = 2; i < sets.size(); ++i) {
    for (std::size_t j = 2; j < sets.size(); ++j) {
      if (i != j && contains(sets[i], sets[j]) && coin(rng)) {
        order.emplace_back(i, j);
        order.emplace_back(index.at(difference(b, sets[j])), index.at(difference(b, sets[i])));
      }
    }
  }
  return build("duality_closed", sets, order, 1, b);
}

/// Every model with at most four classes drawn from a fixed pool of factor
/// multisets and every order on them generated by containment pairs.
inline std::vector<sdcm::SdcModel> trichotomy_grid() {
  const std::vector<Multiset> pool{{2}, {3}, {2, 2}, {2, 3}, {3, 3}};
  std::vector<sdcm::SdcModel> out;
  std::set<std::pair<std::vector<Multiset>, std::vector<char>>> seen;
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<Multiset> sets{{}};
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) sets.push_back(pool[i]);
    }
    if (sets.size() > 4) continue;
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 1; i < sets.size(); ++i) {
      for (std::size_t j = 1; j < sets.size(); ++j) {
        if (i != j && contains(sets[i], sets[j])) candidates.emplace_back(i, j);
      }
    }
    for (unsigned pick = 0; pick < (1u << candidates.size()); ++pick) {
      std::vector<std::pair<std::size_t, std::size_t>> order;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (pick & (1u << c)) order.push_back(candidates[c]);
      }
      auto model = build("grid", sets, order, std::nullopt, max_union(sets));
      std::vector<char> closure;
      for (std::size_t i = 0; i < model.size(); ++i) {
        for (std::size_t j = 0; j < model.size(); ++j) closure.push_back(model.leq(i, j));
      }
      if (seen.insert({sets, closure}).second) out.push_back(std::move(model));
    }
  }
  return out;
}

}  // namespace gen

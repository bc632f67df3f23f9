#include <sdcm/examples.hpp>
#include <sdcm/metric_checks.hpp>
#include <sdcm/validate.hpp>

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

using namespace sdcm;

namespace {

// Minimal free resolutions over R = k x| k^r with k = GF(p). A module is a
// k-vector space with r operators X_i (multiplication by the generators of
// the maximal ideal, X_i X_j = 0); vectors are columns.
constexpr std::int64_t kPrime = 101;

using Matrix = std::vector<std::vector<std::int64_t>>;  // rows x cols

std::int64_t mod(std::int64_t a) { return ((a % kPrime) + kPrime) % kPrime; }

std::int64_t inverse(std::int64_t a) {
  std::int64_t result = 1, base = mod(a), e = kPrime - 2;
  while (e) {
    if (e & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return result;
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<std::int64_t>(cols, 0)); }

std::size_t cols(const Matrix& m, std::size_t fallback = 0) { return m.empty() ? fallback : m[0].size(); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols(m) && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const std::int64_t inv = inverse(m[row][c]);
    for (auto& x : m[row]) x = x * inv % kPrime;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (std::size_t k = 0; k < cols(m); ++k) m[r][k] = mod(m[r][k] - f * m[row][k]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Basis of the null space of m (n columns), as columns of the result.
Matrix kernel(Matrix m, std::size_t n) {
  const auto pivots = rref(m);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-m[r][free]);
    basis.push_back(std::move(v));
  }
  Matrix out = zeros(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) out[i][j] = basis[j][i];
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner) {
  Matrix out = zeros(a.size(), cols(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols(b); ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % kPrime;
    }
  }
  return out;
}

struct Module {
  std::size_t dim;
  std::vector<Matrix> x;  // dim x dim each
};

// Incremental echelon basis: rows with a unit pivot, each reduced against
// the earlier ones.
struct Echelon {
  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> rows;

  bool insert(std::vector<std::int64_t> v) {
    for (const auto& [p, row] : rows) {
      if (v[p] == 0) continue;
      const std::int64_t f = v[p];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = mod(v[k] - f * row[k]);
    }
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (v[p] == 0) continue;
      const std::int64_t inv = inverse(v[p]);
      for (auto& x : v) x = x * inv % kPrime;
      rows.emplace_back(p, std::move(v));
      return true;
    }
    return false;
  }
};

// Columns spanning a complement of the maximal ideal times M: minimal generators.
Matrix minimal_generators(const Module& m) {
  Echelon span;
  for (const auto& xi : m.x) {
    for (std::size_t c = 0; c < m.dim; ++c) {
      std::vector<std::int64_t> v(m.dim);
      for (std::size_t r = 0; r < m.dim; ++r) v[r] = xi[r][c];
      span.insert(std::move(v));
    }
  }
  Matrix gens = zeros(m.dim, 0);
  for (std::size_t e = 0; e < m.dim; ++e) {
    std::vector<std::int64_t> v(m.dim, 0);
    v[e] = 1;
    if (span.insert(v)) {
      for (std::size_t r = 0; r < m.dim; ++r) gens[r].push_back(v[r]);
    }
  }
  return gens;
}

// Kernel of the free cover R^b -> M as a module. R^b has basis e_j, x_i e_j.
Module syzygy(const Module& m, const Matrix& gens) {
  const std::size_t r = m.x.size();
  const std::size_t b = cols(gens);
  const std::size_t free_dim = b * (1 + r);
  Matrix cover = zeros(m.dim, free_dim);
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t row = 0; row < m.dim; ++row) cover[row][j] = gens[row][j];
    for (std::size_t i = 0; i < r; ++i) {
      const Matrix image = multiply(m.x[i], [&] {
        Matrix g = zeros(m.dim, 1);
        for (std::size_t row = 0; row < m.dim; ++row) g[row][0] = gens[row][j];
        return g;
      }(), m.dim);
      for (std::size_t row = 0; row < m.dim; ++row) cover[row][b + i * b + j] = image[row][0];
    }
  }
  const Matrix k = kernel(cover, free_dim);
  const std::size_t kdim = cols(k);
  Module out{kdim, {}};
  for (std::size_t i = 0; i < r; ++i) {
    // x_i on R^b: e_j -> x_i e_j, x_l e_j -> 0.
    Matrix xi_free = zeros(free_dim, free_dim);
    for (std::size_t j = 0; j < b; ++j) xi_free[b + i * b + j][j] = 1;
    const Matrix image = multiply(xi_free, k, free_dim);
    // Express image columns in the kernel basis: solve k * c = image.
    Matrix aug = zeros(free_dim, kdim + kdim);
    for (std::size_t row = 0; row < free_dim; ++row) {
      for (std::size_t c = 0; c < kdim; ++c) {
        aug[row][c] = k[row][c];
        aug[row][kdim + c] = image[row][c];
      }
    }
    rref(aug);
    Matrix coords = zeros(kdim, kdim);
    for (std::size_t row = 0; row < kdim; ++row) {
      for (std::size_t c = 0; c < kdim; ++c) coords[row][c] = aug[row][kdim + c];
    }
    out.x.push_back(std::move(coords));
  }
  return out;
}

// Hom_k(R, k) with dual basis 1*, x_1*, ..., x_r*: x_i x_j* = delta_ij 1*.
Module dualizing_module(std::size_t r) {
  Module d{r + 1, {}};
  for (std::size_t i = 0; i < r; ++i) {
    Matrix xi = zeros(r + 1, r + 1);
    xi[0][1 + i] = 1;
    d.x.push_back(std::move(xi));
  }
  return d;
}

std::vector<std::size_t> betti_numbers(Module m, std::size_t steps) {
  std::vector<std::size_t> betti;
  for (std::size_t i = 0; i < steps; ++i) {
    const Matrix gens = minimal_generators(m);
    betti.push_back(cols(gens));
    if (i + 1 < steps) m = syzygy(m, gens);
  }
  return betti;
}

}  // namespace

TEST(ResolutionOracle, ResidueFieldIsGeometric) {
  for (std::size_t r = 2; r <= 3; ++r) {
    Module k{1, std::vector<Matrix>(r, zeros(1, 1))};
    const auto betti = betti_numbers(k, 5);
    for (std::size_t i = 0; i < betti.size(); ++i) EXPECT_EQ(Integer(betti[i]), pow(Integer(r), unsigned(i)));
  }
}

TEST(ResolutionOracle, DualizingModuleMatchesFrozenSeries) {
  for (long r : {2, 3}) {
    const std::size_t steps = r == 2 ? 6 : 5;
    const auto betti = betti_numbers(dualizing_module(r), steps);
    const auto series = expansion(square_zero_dualizing_series(r), steps);
    for (std::size_t i = 0; i < steps; ++i) EXPECT_EQ(Rational(betti[i]), series[i]) << "r=" << r << " i=" << i;
    EXPECT_EQ(betti[0], std::size_t(r));
    EXPECT_EQ(betti[1], std::size_t(r * r - 1));
  }
}

TEST(SquareZero, Invariants) {
  for (long r = 2; r <= 6; ++r) {
    const auto m = square_zero_model(r);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(curvature(m.poincare(m.index_of("D"))), Curvature::exact(r));
    EXPECT_TRUE(validate(m).valid());
    const MetricGraph g(m);
    EXPECT_TRUE(check_metric_axioms(g).pass);
    EXPECT_TRUE(check_direct_edge(g).pass);
    EXPECT_TRUE(check_bounds(g).pass);
    EXPECT_EQ(g.diameter(), Curvature::exact(r));
  }
  EXPECT_EQ(MetricGraph(square_zero_model(3)).distance("R", "D"), Curvature::exact(3));
  EXPECT_THROW(square_zero_model(1), ModelError);
}

TEST(Iterated, DistanceTable) {
  const auto m = iterated_model(2, 3);
  const MetricGraph g(m);
  EXPECT_EQ(g.distance("S", "DtensorS"), Curvature::exact(2));
  EXPECT_EQ(g.distance("S", "cbcR"), Curvature::exact(3));
  EXPECT_EQ(g.distance("S", "cbcD"), Curvature::exact(3));
  EXPECT_EQ(g.distance("DtensorS", "cbcD"), Curvature::exact(3));
  EXPECT_EQ(g.distance("cbcR", "cbcD"), Curvature::exact(2));
  EXPECT_EQ(g.distance("cbcR", "DtensorS"), Curvature::exact(5));
  EXPECT_EQ(m.id(*m.dualizing()), "cbcD");
  const auto t = evaluate_trichotomy(g);
  EXPECT_TRUE(t.noncomparable_pair && t.at_least_three && t.nontrivial_ball);
}

TEST(Iterated, GraphSketchAcrossParameters) {
  for (long r = 2; r <= 4; ++r) {
    for (long s = 2; s <= 4; ++s) {
      const auto m = iterated_model(r, s);
      const MetricGraph g(m);
      std::map<std::pair<std::string, std::string>, Curvature> covers;
      for (const auto& [a, b] : m.covering_pairs()) covers.emplace(std::pair(m.id(a), m.id(b)), g.sigma(a, b));
      const std::map<std::pair<std::string, std::string>, Curvature> expected{
          {{"DtensorS", "S"}, Curvature::exact(r)},
          {{"cbcR", "S"}, Curvature::exact(s)},
          {{"cbcD", "DtensorS"}, Curvature::exact(s)},
          {{"cbcD", "cbcR"}, Curvature::exact(r)}};
      EXPECT_EQ(covers, expected);
      EXPECT_EQ(g.sigma("cbcD", "S"), Curvature::exact(std::max(r, s)));
      EXPECT_EQ(g.distance("cbcR", "DtensorS"), Curvature::exact(r + s));
    }
  }
}

TEST(Decreasing, EncodedPairs) {
  const auto strict = decreasing_example_strict();
  EXPECT_TRUE(validate(strict.big).valid());
  EXPECT_TRUE(validate(strict.small).valid());
  EXPECT_TRUE(is_gorenstein(strict.small));
  const auto equal = decreasing_example_equal();
  EXPECT_TRUE(validate(equal.big).valid());
  EXPECT_TRUE(validate(equal.small).valid());
}

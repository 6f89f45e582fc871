#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "superder/fixtures.hpp"
#include "superder/generator.hpp"
#include "superder/analysis.hpp"

namespace testing_support {

using namespace superder;

inline oracle::Algebra to_oracle(const LieSuperalgebra& g) {
  oracle::Algebra a;
  a.m = g.dims().even;
  a.n = g.dims().odd;
  a.c.assign(g.dim() * g.dim() * g.dim(), 0);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) a.at(i, j, k) = g.tensor()(i, j, k);
  return a;
}

inline oracle::Dims to_oracle(GradedDims d) { return {d.even, d.odd}; }

inline oracle::Mat to_rows(const Matrix& m) {
  oracle::Mat out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

inline Vector e(const LieSuperalgebra& g, const std::string& label) {
  return unit_vector(g.dim(), *g.basis().index_of(label));
}

/// Seeded corpus shared by the property and acceptance tests.
inline const std::vector<LieSuperalgebra>& corpus() {
  static const std::vector<LieSuperalgebra> c = nilindex_two_corpus(200, 20240601);
  return c;
}

/// Small random rational matrices for linear-algebra properties.
class MatrixSource {
 public:
  explicit MatrixSource(std::uint64_t seed) : rng_(seed) {}

  Matrix next(std::size_t max_rows = 6, std::size_t max_cols = 6) {
    const std::size_t rows = 1 + rng_() % max_rows, cols = 1 + rng_() % max_cols;
    Matrix m(rows, cols);
    // Sparse entries so that rank deficiency is common.
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (rng_() % 3 == 0) m(r, c) = Rational(static_cast<long>(rng_() % 7) - 3) / (1 + static_cast<long>(rng_() % 3));
    return m;
  }

  Subspace subspace(std::size_t ambient) {
    std::vector<Vector> vs;
    const std::size_t count = rng_() % (ambient + 1);
    for (std::size_t i = 0; i < count; ++i) {
      Vector v(ambient);
      for (auto& x : v)
        if (rng_() % 2) x = static_cast<long>(rng_() % 5) - 2;
      vs.push_back(std::move(v));
    }
    return Subspace::span(ambient, vs);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support

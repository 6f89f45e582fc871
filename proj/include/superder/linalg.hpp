#pragma once

// Dense exact linear algebra over Q: matrices, reduced row-echelon form,
// kernels and the subspace lattice operations every algebraic computation
// in this library reduces to.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superder/rational.hpp"

namespace superder {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  /// Integer literal convenience for tests and fixtures.
  static Matrix of(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw DimensionError("ragged matrix literal");
      std::size_t c = 0;
      for (long x : row) m(r, c++) = x;
      ++r;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const { return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)}; }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Row-major flattening.
  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const { return superder::is_zero(data_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const auto& a = (*this)(r, c);
        if (!superder::is_zero(a) && !superder::is_zero(v[c])) out[r] += a * v[c];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (superder::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& bkj = b(k, j);
          if (!superder::is_zero(bkj)) p(i, j) += aik * bkj;
        }
      }
    }
    return p;
  }

  friend Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Incrementally maintained reduced row-echelon basis of a row space.
/// Rows are kept sorted by pivot column and fully reduced against each other,
/// so the stored basis is the canonical rref representative at all times.
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces `v` modulo the current row space, in place.
  void reduce(Vector& v) const {
    if (v.size() != cols_) throw DimensionError("echelon row length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational factor = v[pivots_[i]];
      if (is_zero(factor)) continue;
      const Vector& r = rows_[i];
      for (std::size_t c = pivots_[i]; c < cols_; ++c) {
        if (!is_zero(r[c])) v[c] -= factor * r[c];
      }
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    return is_zero(v);
  }

  /// Adds `v` to the row space. Returns true iff the rank grew.
  bool insert(Vector v) {
    reduce(v);
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
    if (lead == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - v.begin());
    const Rational inv = 1 / v[p];
    for (std::size_t c = p; c < cols_; ++c) {
      if (!is_zero(v[c])) v[c] *= inv;
    }
    for (auto& r : rows_) {
      const Rational factor = r[p];
      if (is_zero(factor)) continue;
      for (std::size_t c = p; c < cols_; ++c) {
        if (!is_zero(v[c])) r[c] -= factor * v[c];
      }
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

inline RrefResult rref(const Matrix& m) {
  EchelonForm form(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (form.rank() == m.cols()) break;
    form.insert(m.row_vector(r));
  }
  RrefResult out{Matrix(m.rows(), m.cols()), form.pivots()};
  for (std::size_t r = 0; r < form.rank(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.reduced(r, c) = form.rows()[r][c];
  }
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// A linear subspace of Q^n, stored by its canonical rref basis so that two
/// subspaces are equal exactly when their basis matrices are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(EchelonForm(ambient)); }

  static Subspace full(std::size_t ambient) {
    EchelonForm form(ambient);
    for (std::size_t i = 0; i < ambient; ++i) form.insert(unit_vector(ambient, i));
    return Subspace(std::move(form));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    EchelonForm form(ambient);
    for (const auto& v : vectors) {
      if (form.rank() == ambient) break;
      form.insert(v);
    }
    return Subspace(std::move(form));
  }

  static Subspace row_space(const Matrix& m) {
    EchelonForm form(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (form.rank() == m.cols()) break;
      form.insert(m.row_vector(r));
    }
    return Subspace(std::move(form));
  }

  std::size_t ambient_dim() const { return form_.cols(); }
  std::size_t dim() const { return form_.rank(); }
  bool is_zero() const { return dim() == 0; }

  const std::vector<Vector>& basis() const { return form_.rows(); }
  const std::vector<std::size_t>& pivots() const { return form_.pivots(); }
  Matrix basis_matrix() const { return Matrix::from_rows(ambient_dim(), basis()); }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw DimensionError("vector not in ambient space");
    return form_.contains(v);
  }

  bool contains(const Subspace& other) const {
    require_same_ambient(other);
    return std::all_of(other.basis().begin(), other.basis().end(),
                       [&](const Vector& v) { return form_.contains(v); });
  }

  /// Coordinates of `v` in the rref basis; for an rref basis these are
  /// simply the entries of `v` at the pivot columns.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots()[i]];
    return coords;
  }

  Vector combine(const Vector& coords) const {
    if (coords.size() != dim()) throw DimensionError("coordinate vector length mismatch");
    Vector v(ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (superder::is_zero(coords[i])) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (!superder::is_zero(basis()[i][c])) v[c] += coords[i] * basis()[i][c];
      }
    }
    return v;
  }

  void require_same_ambient(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim()) {
      throw DimensionError("ambient dimension mismatch: " + std::to_string(ambient_dim()) + " vs " +
                           std::to_string(other.ambient_dim()));
    }
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
  }

 private:
  explicit Subspace(EchelonForm form) : form_(std::move(form)) {}

  EchelonForm form_{0};
};

/// {v : M v = 0}, canonical rref basis.
inline Subspace kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

/// Kernel of the system whose equations are the given rows. Equivalent to
/// kernel_basis(Matrix::from_rows(...)) but never materializes zero rows.
inline Subspace kernel_of_equations(std::size_t unknowns, const std::vector<Vector>& equations) {
  EchelonForm form(unknowns);
  for (const auto& eq : equations) {
    if (form.rank() == unknowns) break;
    if (!is_zero(eq)) form.insert(eq);
  }
  return kernel_basis(Matrix::from_rows(unknowns, form.rows()));
}

/// Vectors orthogonal (under the standard pairing) to every vector of `s`.
inline Subspace annihilator(const Subspace& s) {
  return kernel_basis(s.basis_matrix());
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

/// A ∩ B computed as the common kernel of both annihilators.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  const Subspace ann_a = annihilator(a);
  const Subspace ann_b = annihilator(b);
  std::vector<Vector> constraints = ann_a.basis();
  constraints.insert(constraints.end(), ann_b.basis().begin(), ann_b.basis().end());
  return kernel_of_equations(a.ambient_dim(), constraints);
}

/// Vectors of W's rref basis chosen first-fit to extend S to W.
inline std::vector<Vector> complement_vectors(const Subspace& s, const Subspace& w) {
  s.require_same_ambient(w);
  if (!w.contains(s)) throw std::invalid_argument("complement_basis: S is not contained in W");
  EchelonForm form(s.ambient_dim());
  for (const auto& v : s.basis()) form.insert(v);
  std::vector<Vector> kept;
  for (const auto& v : w.basis()) {
    if (form.rank() == w.dim()) break;
    if (form.insert(v)) kept.push_back(v);
  }
  return kept;
}

/// K with S ⊕ K = W, first-fit over W's rref basis.
inline Subspace complement_basis(const Subspace& s, const Subspace& w) {
  return Subspace::span(s.ambient_dim(), complement_vectors(s, w));
}

/// Inverse of a square matrix; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const auto [reduced, pivots] = rref(augmented);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  return inv;
}

/// Coefficients x with Σ x_i basis[i] = v, for linearly independent `basis`.
/// Returns nullopt when v is outside the span.
inline std::optional<Vector> solve_in_basis(const std::vector<Vector>& basis, const Vector& v) {
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  // Columns: basis vectors, then the right-hand side.
  Matrix augmented(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw DimensionError("basis vector length mismatch");
    for (std::size_t r = 0; r < n; ++r) augmented(r, j) = basis[j][r];
  }
  for (std::size_t r = 0; r < n; ++r) augmented(r, k) = v[r];

  const auto [reduced, pivots] = rref(augmented);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw std::invalid_argument("solve_in_basis: basis is linearly dependent");
  Vector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = reduced(i, k);
  return x;
}

}  // namespace superder

#pragma once

// Finite-dimensional Lie superalgebras presented by structure constants over
// a parity-homogeneous basis ordered even block first, odd block second.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "superder/linalg.hpp"

namespace superder {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) % 2);
}

inline unsigned bit(Parity p) { return static_cast<unsigned>(p); }

/// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Superdimension (m|n).
struct GradedDims {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const { return even + odd; }
  std::size_t operator[](Parity p) const { return p == Parity::Even ? even : odd; }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

inline std::string to_string(const GradedDims& d) {
  return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

inline GradedDims operator-(const GradedDims& a, const GradedDims& b) {
  if (b.even > a.even || b.odd > a.odd) throw DimensionError("graded dimension underflow");
  return {a.even - b.even, a.odd - b.odd};
}

class InvalidAlgebraError;

class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(std::vector<std::string> even, std::vector<std::string> odd)
      : even_(std::move(even)), odd_(std::move(odd)) {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels()) {
      if (label.empty()) throw std::invalid_argument("empty basis label");
      if (!seen.insert(label).second) throw std::invalid_argument("duplicate basis label '" + label + "'");
    }
  }

  GradedDims dims() const { return {even_.size(), odd_.size()}; }
  std::size_t size() const { return even_.size() + odd_.size(); }

  Parity parity(std::size_t i) const { return i < even_.size() ? Parity::Even : Parity::Odd; }
  const std::string& label(std::size_t i) const {
    return i < even_.size() ? even_[i] : odd_.at(i - even_.size());
  }
  const std::vector<std::string>& even_labels() const { return even_; }
  const std::vector<std::string>& odd_labels() const { return odd_; }

  std::vector<std::string> labels() const {
    std::vector<std::string> all = even_;
    all.insert(all.end(), odd_.begin(), odd_.end());
    return all;
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (this->label(i) == label) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<std::string> even_;
  std::vector<std::string> odd_;
};

/// c(i, j, k) = coefficient of e_k in [e_i, e_j].
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  bool is_zero() const { return superder::is_zero(c_); }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

struct Violation {
  enum class Kind { Grading, Antisymmetry, Jacobi };

  Kind kind;
  // Grading/Antisymmetry: tensor index (i, j, k).
  // Jacobi: basis triple (i, j, k) with the defect's first nonzero component in `component`.
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t component = 0;
  Rational defect;
};

inline const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Grading: return "grading";
    case Violation::Kind::Antisymmetry: return "antisymmetry";
    case Violation::Kind::Jacobi: return "jacobi";
  }
  return "?";
}

inline std::string describe(const Violation& v, const GradedBasis& basis) {
  std::ostringstream out;
  out << to_string(v.kind) << " at (" << basis.label(v.i) << ", " << basis.label(v.j) << ", " << basis.label(v.k)
      << ")";
  if (v.kind == Violation::Kind::Jacobi) {
    out << ": component " << basis.label(v.component) << " off by " << to_string(v.defect);
  } else {
    out << ": " << to_string(v.defect);
  }
  return out.str();
}

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(Violation::Kind kind) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
  }
};

/// Checks grading, super antisymmetry and the super Jacobi identity on every
/// basis index triple.
inline ValidationReport validate(const GradedBasis& basis, const StructureTensor& c) {
  const std::size_t n = basis.size();
  if (c.dim() != n) throw DimensionError("structure tensor dimension does not match basis");
  ValidationReport report;
  auto deg = [&](std::size_t i) { return basis.parity(i); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& value = c(i, j, k);
        if (!is_zero(value) && deg(k) != deg(i) + deg(j)) {
          report.violations.push_back({Violation::Kind::Grading, i, j, k, k, value});
        }
        // c_ij^k + (-1)^{|i||j|} c_ji^k = 0; each unordered pair reported once.
        if (i <= j) {
          const Rational defect = value + koszul_sign(deg(i), deg(j)) * c(j, i, k);
          if (!is_zero(defect)) report.violations.push_back({Violation::Kind::Antisymmetry, i, j, k, k, defect});
        }
      }
    }
  }

  // [a,[b,d]] - [[a,b],d] - (-1)^{|a||b|} [b,[a,d]] = 0
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int sign = koszul_sign(deg(a), deg(b));
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t out = 0; out < n; ++out) {
          Rational defect;
          for (std::size_t l = 0; l < n; ++l) {
            if (!is_zero(c(b, d, l))) defect += c(b, d, l) * c(a, l, out);
            if (!is_zero(c(a, b, l))) defect -= c(a, b, l) * c(l, d, out);
            if (!is_zero(c(a, d, l))) defect -= sign * c(a, d, l) * c(b, l, out);
          }
          if (!is_zero(defect)) {
            report.violations.push_back({Violation::Kind::Jacobi, a, b, d, out, defect});
            break;
          }
        }
      }
    }
  }
  return report;
}

class InvalidAlgebraError : public std::runtime_error {
 public:
  InvalidAlgebraError(std::string what, ValidationReport report)
      : std::runtime_error(std::move(what)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;

  /// Validating constructor; throws InvalidAlgebraError listing every violation.
  LieSuperalgebra(std::string name, GradedBasis basis, StructureTensor tensor)
      : name_(std::move(name)), basis_(std::move(basis)), tensor_(std::move(tensor)) {
    auto report = validate(basis_, tensor_);
    if (!report.ok()) {
      std::string msg = "'" + name_ + "' is not a Lie superalgebra: " + describe(report.violations.front(), basis_);
      if (report.violations.size() > 1) msg += " (+" + std::to_string(report.violations.size() - 1) + " more)";
      throw InvalidAlgebraError(msg, std::move(report));
    }
  }

  static LieSuperalgebra abelian(std::string name, GradedBasis basis) {
    const std::size_t n = basis.size();
    return LieSuperalgebra(std::move(name), std::move(basis), StructureTensor(n));
  }

  const std::string& name() const { return name_; }
  const GradedBasis& basis() const { return basis_; }
  const StructureTensor& tensor() const { return tensor_; }
  std::size_t dim() const { return basis_.size(); }
  GradedDims dims() const { return basis_.dims(); }
  Parity parity(std::size_t i) const { return basis_.parity(i); }

  LieSuperalgebra renamed(std::string name) const {
    LieSuperalgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// [e_i, e_j] as a coordinate vector.
  Vector bracket_basis(std::size_t i, std::size_t j) const {
    Vector v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = tensor_(i, j, k);
    return v;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("bracket: coordinate vector size mismatch");
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) {
          if (!is_zero(tensor_(i, j, k))) out[k] += xy * tensor_(i, j, k);
        }
      }
    }
    return out;
  }

  /// Matrix of x ↦ [g, x].
  Matrix adjoint(const Vector& g) const {
    Matrix ad(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) ad.set_column(j, bracket(g, unit_vector(dim(), j)));
    return ad;
  }

  /// Parity of a homogeneous vector; nullopt for inhomogeneous vectors.
  /// The zero vector is reported as even.
  std::optional<Parity> parity_of(const Vector& v) const {
    if (v.size() != dim()) throw DimensionError("vector not in algebra");
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(v[i])) continue;
      (parity(i) == Parity::Even ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? Parity::Odd : Parity::Even;
  }

  /// Structural equality (labels and constants); names are ignored.
  bool same_structure(const LieSuperalgebra& other) const {
    return basis_ == other.basis_ && tensor_ == other.tensor_;
  }

 private:
  std::string name_;
  GradedBasis basis_;
  StructureTensor tensor_;
};

/// Z2-graded subspace F = F_0 ⊕ F_1 of a graded space of superdimension `ambient`.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(GradedDims ambient, Subspace even, Subspace odd)
      : ambient_(ambient), even_(std::move(even)), odd_(std::move(odd)) {
    if (even_.ambient_dim() != ambient_.even || odd_.ambient_dim() != ambient_.odd) {
      throw DimensionError("graded subspace blocks do not match ambient dims");
    }
  }

  static GradedSubspace zero(GradedDims ambient) {
    return {ambient, Subspace::zero(ambient.even), Subspace::zero(ambient.odd)};
  }
  static GradedSubspace full(GradedDims ambient) {
    return {ambient, Subspace::full(ambient.even), Subspace::full(ambient.odd)};
  }

  /// Splits a subspace of the total space; throws if it is not graded.
  static GradedSubspace from_total(GradedDims ambient, const Subspace& s) {
    if (s.ambient_dim() != ambient.total()) throw DimensionError("subspace not in ambient space");
    std::vector<Vector> even, odd;
    for (const auto& v : s.basis()) {
      even.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ambient.even));
      odd.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(ambient.even), v.end());
    }
    GradedSubspace g(ambient, Subspace::span(ambient.even, even), Subspace::span(ambient.odd, odd));
    if (g.dim() != s.dim()) throw std::invalid_argument("subspace is not Z2-graded");
    return g;
  }

  /// Span of homogeneous vectors in total coordinates.
  static GradedSubspace span_homogeneous(GradedDims ambient, const std::vector<Vector>& vectors) {
    return from_total(ambient, Subspace::span(ambient.total(), vectors));
  }

  GradedDims ambient() const { return ambient_; }
  const Subspace& even() const { return even_; }
  const Subspace& odd() const { return odd_; }
  const Subspace& part(Parity p) const { return p == Parity::Even ? even_ : odd_; }
  GradedDims dims() const { return {even_.dim(), odd_.dim()}; }
  std::size_t dim() const { return even_.dim() + odd_.dim(); }
  bool is_zero() const { return dim() == 0; }

  Vector embed(Parity p, const Vector& block) const {
    Vector v(ambient_.total());
    const std::size_t offset = p == Parity::Even ? 0 : ambient_.even;
    std::copy(block.begin(), block.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    return v;
  }

  /// Basis in total coordinates: even part's rref basis, then odd part's.
  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (const auto& v : even_.basis()) out.push_back(embed(Parity::Even, v));
    for (const auto& v : odd_.basis()) out.push_back(embed(Parity::Odd, v));
    return out;
  }

  Parity basis_parity(std::size_t i) const { return i < even_.dim() ? Parity::Even : Parity::Odd; }

  Subspace total() const { return Subspace::span(ambient_.total(), basis()); }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_.total()) throw DimensionError("vector not in ambient space");
    const auto split = static_cast<std::ptrdiff_t>(ambient_.even);
    return even_.contains(Vector(v.begin(), v.begin() + split)) && odd_.contains(Vector(v.begin() + split, v.end()));
  }

  bool contains(const GradedSubspace& other) const {
    require_same_ambient(other);
    return even_.contains(other.even_) && odd_.contains(other.odd_);
  }

  /// Coordinates with respect to basis().
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    const auto split = static_cast<std::ptrdiff_t>(ambient_.even);
    Vector coords = *even_.coordinates(Vector(v.begin(), v.begin() + split));
    const Vector odd = *odd_.coordinates(Vector(v.begin() + split, v.end()));
    coords.insert(coords.end(), odd.begin(), odd.end());
    return coords;
  }

  void require_same_ambient(const GradedSubspace& other) const {
    if (!(ambient_ == other.ambient_)) throw DimensionError("graded subspaces live in different spaces");
  }

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.ambient_ == b.ambient_ && a.even_ == b.even_ && a.odd_ == b.odd_;
  }

 private:
  GradedDims ambient_;
  Subspace even_;
  Subspace odd_;
};

inline GradedSubspace graded_intersection(const GradedSubspace& a, const GradedSubspace& b) {
  a.require_same_ambient(b);
  return {a.ambient(), subspace_intersection(a.even(), b.even()), subspace_intersection(a.odd(), b.odd())};
}

inline GradedSubspace graded_sum(const GradedSubspace& a, const GradedSubspace& b) {
  a.require_same_ambient(b);
  return {a.ambient(), subspace_sum(a.even(), b.even()), subspace_sum(a.odd(), b.odd())};
}

/// Per-block first-fit complement of S inside W.
inline GradedSubspace graded_complement(const GradedSubspace& s, const GradedSubspace& w) {
  s.require_same_ambient(w);
  return {s.ambient(), complement_basis(s.even(), w.even()), complement_basis(s.odd(), w.odd())};
}

/// Homogeneous linear map between graded spaces. Degree 0 preserves parity,
/// degree 1 swaps it; the matrix is (target.total × source.total) in the
/// even-then-odd block convention, column j = image of basis vector j.
class GradedLinearMap {
 public:
  GradedLinearMap() = default;
  GradedLinearMap(GradedDims source, GradedDims target, Parity degree, Matrix matrix)
      : source_(source), target_(target), degree_(degree), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.total() || matrix_.cols() != source_.total()) {
      throw DimensionError("graded map matrix has wrong shape");
    }
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        if (!superder::is_zero(matrix_(r, c)) && target_parity(r) != source_parity(c) + degree_) {
          throw std::invalid_argument("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                      ") violates the block pattern of a degree-" + std::to_string(bit(degree_)) +
                                      " map");
        }
      }
    }
  }

  static GradedLinearMap zero(GradedDims source, GradedDims target, Parity degree) {
    return {source, target, degree, Matrix(target.total(), source.total())};
  }

  static GradedLinearMap identity(GradedDims space) {
    return {space, space, Parity::Even, Matrix::identity(space.total())};
  }

  /// Whether entry (r, c) may be nonzero for a map of the given degree.
  static bool allowed(GradedDims source, GradedDims target, Parity degree, std::size_t r, std::size_t c) {
    const Parity pr = r < target.even ? Parity::Even : Parity::Odd;
    const Parity pc = c < source.even ? Parity::Even : Parity::Odd;
    return pr == pc + degree;
  }

  GradedDims source() const { return source_; }
  GradedDims target() const { return target_; }
  Parity degree() const { return degree_; }
  const Matrix& matrix() const { return matrix_; }

  bool is_endomorphism() const { return source_ == target_; }
  bool is_zero() const { return matrix_.is_zero(); }

  Vector operator()(const Vector& v) const { return matrix_.apply(v); }

  friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.degree_ == b.degree_ && a.matrix_ == b.matrix_;
  }

 private:
  Parity source_parity(std::size_t c) const { return c < source_.even ? Parity::Even : Parity::Odd; }
  Parity target_parity(std::size_t r) const { return r < target_.even ? Parity::Even : Parity::Odd; }

  GradedDims source_;
  GradedDims target_;
  Parity degree_ = Parity::Even;
  Matrix matrix_;
};

/// g ∘ f
inline GradedLinearMap compose(const GradedLinearMap& g, const GradedLinearMap& f) {
  if (!(f.target() == g.source())) throw DimensionError("compose: incompatible graded spaces");
  return {f.source(), g.target(), f.degree() + g.degree(), g.matrix() * f.matrix()};
}

inline bool is_subalgebra(const LieSuperalgebra& g, const GradedSubspace& s) {
  const auto basis = s.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      if (!s.contains(g.bracket(basis[a], basis[b]))) return false;
    }
  }
  return true;
}

inline bool is_ideal(const LieSuperalgebra& g, const GradedSubspace& s) {
  for (const auto& v : s.basis()) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!s.contains(g.bracket(v, unit_vector(g.dim(), j)))) return false;
    }
  }
  return true;
}

class NotAnIdealError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Quotient {
  LieSuperalgebra algebra;
  GradedLinearMap projection;
  /// Coset representatives in the source algebra: representative a maps to
  /// basis vector a of the quotient.
  std::vector<Vector> representatives;
};

/// G/I with quotient basis = per-block first-fit complement of I; labels are
/// those of each representative's pivot coordinate.
inline Quotient quotient(const LieSuperalgebra& g, const GradedSubspace& ideal, std::string name = {}) {
  if (!(ideal.ambient() == g.dims())) throw DimensionError("quotient: subspace not in algebra");
  if (!is_ideal(g, ideal)) throw NotAnIdealError("quotient: subspace is not a graded ideal of '" + g.name() + "'");

  const GradedDims dims = g.dims();
  const GradedSubspace everything = GradedSubspace::full(dims);
  std::vector<Vector> reps;
  std::vector<std::string> even_labels, odd_labels;
  GradedDims qdims;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto kept = complement_vectors(ideal.part(p), everything.part(p));
    const std::size_t offset = p == Parity::Even ? 0 : dims.even;
    for (const auto& v : kept) {
      const auto lead = static_cast<std::size_t>(
          std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); }) - v.begin());
      (p == Parity::Even ? even_labels : odd_labels).push_back(g.basis().label(offset + lead));
      reps.push_back(everything.embed(p, v));
    }
    (p == Parity::Even ? qdims.even : qdims.odd) = kept.size();
  }

  // Decompose every vector as (ideal part) + Σ λ_a reps[a]; λ are the
  // quotient coordinates.
  std::vector<Vector> decomposition_basis = reps;
  const auto ideal_basis = ideal.basis();
  decomposition_basis.insert(decomposition_basis.end(), ideal_basis.begin(), ideal_basis.end());
  auto project = [&](const Vector& v) {
    const auto coeffs = solve_in_basis(decomposition_basis, v);
    if (!coeffs) throw std::logic_error("quotient: decomposition basis does not span");
    return Vector(coeffs->begin(), coeffs->begin() + static_cast<std::ptrdiff_t>(reps.size()));
  };

  Matrix proj(qdims.total(), dims.total());
  for (std::size_t i = 0; i < dims.total(); ++i) proj.set_column(i, project(unit_vector(dims.total(), i)));

  StructureTensor qt(qdims.total());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const Vector image = proj.apply(g.bracket(reps[a], reps[b]));
      for (std::size_t k = 0; k < image.size(); ++k) qt(a, b, k) = image[k];
    }
  }

  LieSuperalgebra q(name.empty() ? g.name() + "_quotient" : std::move(name),
                    GradedBasis(std::move(even_labels), std::move(odd_labels)), std::move(qt));
  return {std::move(q), GradedLinearMap(dims, qdims, Parity::Even, std::move(proj)), std::move(reps)};
}

/// G ⊕ H with zero cross brackets; colliding labels from H get a numeric suffix.
inline LieSuperalgebra direct_sum(const LieSuperalgebra& g, const LieSuperalgebra& h, std::string name = {}) {
  std::unordered_set<std::string> used;
  for (const auto& l : g.basis().labels()) used.insert(l);
  auto fresh = [&](const std::string& label) {
    std::string candidate = label;
    for (int suffix = 2; used.count(candidate); ++suffix) candidate = label + "_" + std::to_string(suffix);
    used.insert(candidate);
    return candidate;
  };

  std::vector<std::string> even = g.basis().even_labels();
  for (const auto& l : h.basis().even_labels()) even.push_back(fresh(l));
  std::vector<std::string> odd = g.basis().odd_labels();
  for (const auto& l : h.basis().odd_labels()) odd.push_back(fresh(l));

  const GradedDims gd = g.dims(), hd = h.dims();
  // Position of each summand's basis vector in the combined even/odd ordering.
  auto g_index = [&](std::size_t i) { return i < gd.even ? i : hd.even + i; };
  auto h_index = [&](std::size_t i) { return i < hd.even ? gd.even + i : gd.total() + i; };

  StructureTensor t(gd.total() + hd.total());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) t(g_index(i), g_index(j), g_index(k)) = g.tensor()(i, j, k);
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (std::size_t k = 0; k < h.dim(); ++k) t(h_index(i), h_index(j), h_index(k)) = h.tensor()(i, j, k);

  return LieSuperalgebra(name.empty() ? g.name() + "+" + h.name() : std::move(name),
                         GradedBasis(std::move(even), std::move(odd)), std::move(t));
}

}  // namespace superder

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "superder/superalgebra.hpp"

namespace superder {

/// Z(G) = {x : [e_i, x] = 0 for every basis vector e_i}, as the kernel of the
/// stacked adjoint matrices.
inline GradedSubspace center(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> equations;
  equations.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    // Row k of ad_{e_i}: x ↦ Σ_j x_j c(i, j, k).
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = g.tensor()(i, j, k);
      equations.push_back(std::move(row));
    }
  }
  return GradedSubspace::from_total(g.dims(), kernel_of_equations(n, equations));
}

/// G¹ = [G, G].
inline GradedSubspace derived_subalgebra(const LieSuperalgebra& g) {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) images.push_back(g.bracket_basis(i, j));
  return GradedSubspace::span_homogeneous(g.dims(), images);
}

/// [A, G] for a graded subspace A.
inline GradedSubspace bracket_with_algebra(const LieSuperalgebra& g, const GradedSubspace& a) {
  std::vector<Vector> images;
  for (const auto& v : a.basis())
    for (std::size_t j = 0; j < g.dim(); ++j) images.push_back(g.bracket(v, unit_vector(g.dim(), j)));
  return GradedSubspace::span_homogeneous(g.dims(), images);
}

struct LowerCentralSeries {
  /// G⁰ ⊇ G¹ ⊇ ... ending with the zero term, or with the last term before
  /// the series stabilizes at a nonzero subspace.
  std::vector<GradedSubspace> terms;
  /// Least n with Gⁿ = 0; empty when G is not nilpotent.
  std::optional<std::size_t> nilindex;
};

inline LowerCentralSeries lower_central_series(const LieSuperalgebra& g) {
  LowerCentralSeries series;
  series.terms.push_back(GradedSubspace::full(g.dims()));
  while (true) {
    const GradedSubspace& last = series.terms.back();
    if (last.is_zero()) {
      series.nilindex = series.terms.size() - 1;
      return series;
    }
    GradedSubspace next = bracket_with_algebra(g, last);
    if (next.dim() == last.dim()) return series;
    series.terms.push_back(std::move(next));
  }
}

inline std::optional<std::size_t> nilindex(const LieSuperalgebra& g) { return lower_central_series(g).nilindex; }

inline bool is_nilpotent(const LieSuperalgebra& g) { return nilindex(g).has_value(); }

inline bool is_abelian(const LieSuperalgebra& g) { return g.tensor().is_zero(); }

/// Z(G) ⊆ G¹.
inline bool is_stem(const LieSuperalgebra& g) { return derived_subalgebra(g).contains(center(g)); }

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The homogeneous linear maps H → H¹ that vanish on H¹, one per pair
/// (complement basis vector, H¹ basis vector). For nilindex ≤ 2 these span
/// the homomorphisms H → H¹ entering κ(H); both degrees are admitted.
inline std::vector<GradedLinearMap> kappa_family(const LieSuperalgebra& h) {
  const GradedSubspace derived = derived_subalgebra(h);
  const GradedSubspace complement = graded_complement(derived, GradedSubspace::full(h.dims()));
  const auto derived_basis = derived.basis();
  const auto complement_basis_vectors = complement.basis();

  // Dual functionals of the complement vectors relative to the adapted basis
  // (complement vectors, then H¹ basis).
  std::vector<Vector> adapted = complement_basis_vectors;
  adapted.insert(adapted.end(), derived_basis.begin(), derived_basis.end());
  const Matrix change = Matrix::from_columns(h.dim(), adapted);
  // Row a of the inverse gives the a-th coordinate functional.
  std::vector<Vector> functionals;
  {
    Matrix augmented(h.dim(), 2 * h.dim());
    for (std::size_t r = 0; r < h.dim(); ++r) {
      for (std::size_t c = 0; c < h.dim(); ++c) augmented(r, c) = change(r, c);
      augmented(r, h.dim() + r) = 1;
    }
    const auto reduced = rref(augmented).reduced;
    for (std::size_t a = 0; a < complement_basis_vectors.size(); ++a) {
      Vector f(h.dim());
      for (std::size_t c = 0; c < h.dim(); ++c) f[c] = reduced(a, h.dim() + c);
      functionals.push_back(std::move(f));
    }
  }

  std::vector<GradedLinearMap> family;
  for (std::size_t a = 0; a < complement_basis_vectors.size(); ++a) {
    const Parity pa = complement.basis_parity(a);
    for (std::size_t b = 0; b < derived_basis.size(); ++b) {
      const Parity pb = derived.basis_parity(b);
      Matrix m(h.dim(), h.dim());
      for (std::size_t r = 0; r < h.dim(); ++r)
        for (std::size_t c = 0; c < h.dim(); ++c) m(r, c) = derived_basis[b][r] * functionals[a][c];
      family.emplace_back(h.dims(), h.dims(), pa + pb, std::move(m));
    }
  }
  return family;
}

/// κ(H): common kernel of the homomorphisms H → H¹. Only defined here for
/// nilindex ≤ 2, where those homomorphisms are exactly the linear maps
/// vanishing on H¹.
inline GradedSubspace kappa(const LieSuperalgebra& h) {
  const auto n = nilindex(h);
  if (!n || *n > 2) throw PreconditionError("kappa: requires nilindex <= 2");
  std::vector<Vector> equations;
  for (const auto& f : kappa_family(h))
    for (std::size_t r = 0; r < h.dim(); ++r) equations.push_back(f.matrix().row_vector(r));
  return GradedSubspace::from_total(h.dims(), kernel_of_equations(h.dim(), equations));
}

}  // namespace superder

#pragma once

// Graded derivations: SDer(G), the inner derivations SIDer(G), the central
// derivations SDer_z(G), and the Lie superalgebra structure the
// super-commutator induces on each of them.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superder/invariants.hpp"

namespace superder {

/// Row-major flattening of an endomorphism matrix into End(G) ≅ Q^{N²}.
inline Vector vectorize(const Matrix& m) { return m.entries(); }

inline Matrix unvectorize(std::size_t n, const Vector& v) {
  if (v.size() != n * n) throw DimensionError("unvectorize: wrong length");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

enum class DerivationKind { SDer, SIDer, SDerZ };

inline const char* to_string(DerivationKind kind) {
  switch (kind) {
    case DerivationKind::SDer: return "SDer";
    case DerivationKind::SIDer: return "SIDer";
    case DerivationKind::SDerZ: return "SDer_z";
  }
  return "?";
}

/// A graded subspace of End(G), stored per degree as subspaces of the
/// vectorized endomorphisms. Bases are canonical (rref of vectorizations).
struct DerivationSpace {
  DerivationKind kind = DerivationKind::SDer;
  GradedDims algebra_dims;
  Subspace even;
  Subspace odd;

  const Subspace& part(Parity p) const { return p == Parity::Even ? even : odd; }
  GradedDims dims() const { return {even.dim(), odd.dim()}; }

  std::vector<GradedLinearMap> maps(Parity p) const {
    std::vector<GradedLinearMap> out;
    for (const auto& v : part(p).basis())
      out.emplace_back(algebra_dims, algebra_dims, p, unvectorize(algebra_dims.total(), v));
    return out;
  }

  /// Degree-0 basis maps followed by degree-1 basis maps.
  std::vector<GradedLinearMap> basis() const {
    auto out = maps(Parity::Even);
    auto odd_maps = maps(Parity::Odd);
    out.insert(out.end(), odd_maps.begin(), odd_maps.end());
    return out;
  }

  bool contains(const GradedLinearMap& t) const {
    if (!(t.source() == algebra_dims) || !(t.target() == algebra_dims)) return false;
    return part(t.degree()).contains(vectorize(t.matrix()));
  }

  bool contains(const DerivationSpace& other) const {
    return even.contains(other.even) && odd.contains(other.odd);
  }
};

/// All degree-α derivations of G, as a subspace of vectorized End(G).
inline Subspace derivation_subspace(const LieSuperalgebra& g, Parity alpha) {
  const std::size_t n = g.dim();
  const GradedDims dims = g.dims();
  const auto& c = g.tensor();

  // Unknowns: the matrix cells a degree-α map may occupy, row-major.
  std::vector<std::ptrdiff_t> unknown(n * n, -1);
  std::vector<std::size_t> cells;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      if (GradedLinearMap::allowed(dims, dims, alpha, r, col)) {
        unknown[r * n + col] = static_cast<std::ptrdiff_t>(cells.size());
        cells.push_back(r * n + col);
      }
  const std::size_t m = cells.size();
  auto var = [&](std::size_t r, std::size_t col) { return unknown[r * n + col]; };

  // Component k of  T[e_i,e_j] - [T e_i, e_j] - (-1)^{α|i|} [e_i, T e_j].
  std::vector<Vector> equations;
  for (std::size_t i = 0; i < n; ++i) {
    const int sign = koszul_sign(alpha, g.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector eq(m);
        bool nonzero = false;
        for (std::size_t l = 0; l < n; ++l) {
          if (!is_zero(c(i, j, l)) && var(k, l) >= 0) {
            eq[static_cast<std::size_t>(var(k, l))] += c(i, j, l);
            nonzero = true;
          }
          if (!is_zero(c(l, j, k)) && var(l, i) >= 0) {
            eq[static_cast<std::size_t>(var(l, i))] -= c(l, j, k);
            nonzero = true;
          }
          if (!is_zero(c(i, l, k)) && var(l, j) >= 0) {
            eq[static_cast<std::size_t>(var(l, j))] -= sign * c(i, l, k);
            nonzero = true;
          }
        }
        if (nonzero) equations.push_back(std::move(eq));
      }
    }
  }

  const Subspace solutions = kernel_of_equations(m, equations);
  std::vector<Vector> embedded;
  for (const auto& s : solutions.basis()) {
    Vector v(n * n);
    for (std::size_t u = 0; u < m; ++u) v[cells[u]] = s[u];
    embedded.push_back(std::move(v));
  }
  return Subspace::span(n * n, embedded);
}

/// Canonical basis of SDer_α(G).
inline std::vector<GradedLinearMap> derivation_space(const LieSuperalgebra& g, Parity alpha) {
  DerivationSpace space{DerivationKind::SDer, g.dims(), Subspace::zero(g.dim() * g.dim()),
                        Subspace::zero(g.dim() * g.dim())};
  (alpha == Parity::Even ? space.even : space.odd) = derivation_subspace(g, alpha);
  return space.maps(alpha);
}

inline DerivationSpace derivations(const LieSuperalgebra& g) {
  return {DerivationKind::SDer, g.dims(), derivation_subspace(g, Parity::Even),
          derivation_subspace(g, Parity::Odd)};
}

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// ad_g : x ↦ [g, x], of degree |g|.
inline GradedLinearMap inner_derivation(const LieSuperalgebra& g, const Vector& element) {
  const auto parity = g.parity_of(element);
  if (!parity) throw NonHomogeneousError("inner_derivation: element is not homogeneous");
  return {g.dims(), g.dims(), *parity, g.adjoint(element)};
}

inline DerivationSpace inner_derivation_space(const LieSuperalgebra& g) {
  std::vector<Vector> even, odd;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    (g.parity(i) == Parity::Even ? even : odd).push_back(vectorize(g.adjoint(unit_vector(g.dim(), i))));
  }
  const std::size_t n2 = g.dim() * g.dim();
  return {DerivationKind::SIDer, g.dims(), Subspace::span(n2, even), Subspace::span(n2, odd)};
}

/// Hom_α(G, S) for a graded subspace S, as vectorized endomorphisms.
inline Subspace maps_into(const LieSuperalgebra& g, const GradedSubspace& s, Parity alpha) {
  const std::size_t n = g.dim();
  const auto targets = s.basis();
  std::vector<Vector> spanning;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t b = 0; b < targets.size(); ++b) {
      if (s.basis_parity(b) != g.parity(col) + alpha) continue;
      Vector v(n * n);
      for (std::size_t r = 0; r < n; ++r) v[r * n + col] = targets[b][r];
      spanning.push_back(std::move(v));
    }
  }
  return Subspace::span(n * n, spanning);
}

/// SDer_z(G) = SDer(G) ∩ Hom(G, Z(G)), computed per degree.
inline DerivationSpace central_derivations(const LieSuperalgebra& g, const DerivationSpace& sder) {
  const GradedSubspace z = center(g);
  return {DerivationKind::SDerZ, g.dims(), subspace_intersection(sder.even, maps_into(g, z, Parity::Even)),
          subspace_intersection(sder.odd, maps_into(g, z, Parity::Odd))};
}

inline DerivationSpace central_derivations(const LieSuperalgebra& g) {
  return central_derivations(g, derivations(g));
}

/// [T1, T2] = T1∘T2 - (-1)^{|T1||T2|} T2∘T1.
inline GradedLinearMap endo_super_bracket(const GradedLinearMap& t1, const GradedLinearMap& t2) {
  if (!t1.is_endomorphism() || !t2.is_endomorphism() || !(t1.source() == t2.source())) {
    throw DimensionError("endo_super_bracket: maps are not endomorphisms of the same space");
  }
  const int sign = koszul_sign(t1.degree(), t2.degree());
  const Matrix forward = t1.matrix() * t2.matrix();
  const Matrix backward = t2.matrix() * t1.matrix();
  return {t1.source(), t1.source(), t1.degree() + t2.degree(),
          sign > 0 ? forward - backward : forward + backward};
}

struct EndoSuperalgebra {
  /// Abstract superalgebra on the basis below: basis vector a ↔ basis[a].
  LieSuperalgebra algebra;
  std::vector<GradedLinearMap> basis;
};

class NotClosedError : public std::runtime_error {
 public:
  NotClosedError(std::string what, std::size_t first, std::size_t second)
      : std::runtime_error(std::move(what)), first_(first), second_(second) {}
  std::pair<std::size_t, std::size_t> witness() const { return {first_, second_}; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Structure constants of a space of endomorphisms under the super-commutator,
/// in the space's canonical basis (degree 0 first).
inline EndoSuperalgebra derivation_superalgebra_structure(const DerivationSpace& space, std::string name = {}) {
  auto basis = space.basis();
  const GradedDims dims = space.dims();
  const std::size_t d = basis.size();

  StructureTensor t(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const GradedLinearMap bracket = endo_super_bracket(basis[a], basis[b]);
      const auto coords = space.part(bracket.degree()).coordinates(vectorize(bracket.matrix()));
      if (!coords) {
        throw NotClosedError("space is not closed under the super-commutator: [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "]",
                             a, b);
      }
      const std::size_t offset = bracket.degree() == Parity::Even ? 0 : dims.even;
      for (std::size_t k = 0; k < coords->size(); ++k) t(a, b, offset + k) = (*coords)[k];
    }
  }

  std::vector<std::string> even_labels, odd_labels;
  for (std::size_t a = 0; a < dims.even; ++a) even_labels.push_back("T0_" + std::to_string(a + 1));
  for (std::size_t a = 0; a < dims.odd; ++a) odd_labels.push_back("T1_" + std::to_string(a + 1));
  LieSuperalgebra algebra(name.empty() ? std::string(to_string(space.kind)) : std::move(name),
                          GradedBasis(std::move(even_labels), std::move(odd_labels)), std::move(t));
  return {std::move(algebra), std::move(basis)};
}

/// Superdimension of Hom(A, B): even = a0·b0 + a1·b1, odd = a0·b1 + a1·b0.
inline GradedDims hom_dims(GradedDims a, GradedDims b) {
  return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

struct SubalgebraCenter {
  GradedDims dims;
  /// Center in the coordinates of the endomorphism superalgebra's basis.
  GradedSubspace coordinates;
  /// The same center realized as endomorphisms.
  std::vector<GradedLinearMap> maps;
};

inline SubalgebraCenter center_of_subalgebra(const EndoSuperalgebra& e) {
  const GradedSubspace z = center(e.algebra);
  std::vector<GradedLinearMap> maps;
  for (std::size_t a = 0; a < z.dim(); ++a) {
    const Vector coords = z.basis()[a];
    const Parity p = z.basis_parity(a);
    GradedDims space = e.basis.empty() ? GradedDims{} : e.basis.front().source();
    Matrix m(space.total(), space.total());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!is_zero(coords[i])) m = m + coords[i] * e.basis[i].matrix();
    }
    maps.emplace_back(space, space, p, std::move(m));
  }
  return {z.dims(), z, std::move(maps)};
}

/// The same maps as a DerivationSpace-style pair of subspaces of End(G).
inline DerivationSpace as_space(DerivationKind kind, GradedDims algebra_dims,
                                const std::vector<GradedLinearMap>& maps) {
  const std::size_t n2 = algebra_dims.total() * algebra_dims.total();
  std::vector<Vector> even, odd;
  for (const auto& t : maps) (t.degree() == Parity::Even ? even : odd).push_back(vectorize(t.matrix()));
  return {kind, algebra_dims, Subspace::span(n2, even), Subspace::span(n2, odd)};
}

struct NoncommutingPair {
  GradedLinearMap first;   // y ↦ y
  GradedLinearMap second;  // y ↦ x
  Vector y;                // central, outside G¹
  Vector x;                // nonzero in G¹ ∩ Z(G)
};

/// For a nilpotent non-abelian G that is not stem, two central derivations
/// with nonzero super-commutator: pick homogeneous y ∈ Z(G) \ G¹ and
/// 0 ≠ x ∈ G¹ ∩ Z(G), extend y to a basis adapted to G¹ + ⟨y⟩, and send y to
/// y resp. x while killing every other adapted basis vector.
/// Returns nullopt for stem G.
inline std::optional<NoncommutingPair> construct_noncommuting_central_derivations(const LieSuperalgebra& g) {
  if (!is_nilpotent(g)) throw PreconditionError("construction requires a nilpotent algebra");
  if (is_abelian(g)) throw PreconditionError("construction requires a non-abelian algebra");
  const GradedSubspace z = center(g);
  const GradedSubspace derived = derived_subalgebra(g);
  if (derived.contains(z)) return std::nullopt;

  const GradedSubspace meet = graded_intersection(derived, z);
  if (meet.is_zero()) throw std::logic_error("nilpotent non-abelian algebra with G^1 ∩ Z(G) = 0");
  const Vector x = meet.basis().front();
  const GradedSubspace outside = graded_complement(meet, z);
  const Vector y = outside.basis().front();

  // Adapted basis: y, G¹ basis, then a first-fit completion.
  std::vector<Vector> adapted{y};
  for (const auto& v : derived.basis()) adapted.push_back(v);
  const Subspace partial = Subspace::span(g.dim(), adapted);
  for (const auto& v : complement_vectors(partial, Subspace::full(g.dim()))) adapted.push_back(v);

  // y* = first row of the inverse change of basis.
  Vector y_dual(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto coords = solve_in_basis(adapted, unit_vector(g.dim(), i));
    y_dual[i] = (*coords)[0];
  }

  auto rank_one = [&](const Vector& image) {
    Matrix m(g.dim(), g.dim());
    for (std::size_t r = 0; r < g.dim(); ++r)
      for (std::size_t c = 0; c < g.dim(); ++c) m(r, c) = image[r] * y_dual[c];
    return m;
  };
  const Parity py = *g.parity_of(y);
  const Parity px = *g.parity_of(x);
  GradedLinearMap t1(g.dims(), g.dims(), Parity::Even, rank_one(y));
  GradedLinearMap t2(g.dims(), g.dims(), px + py, rank_one(x));
  return NoncommutingPair{std::move(t1), std::move(t2), y, x};
}

}  // namespace superder

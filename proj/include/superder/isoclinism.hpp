#pragma once

// Isoclinism pairs (φ: G/Z(G) → H/Z(H), θ: G¹ → H¹), single-step stem
// reduction, and transport of central derivations along a pair.
//
// Coordinates: φ acts on the quotient bases produced by quotient(G, Z(G));
// θ acts on the rref bases of the derived subalgebras (even part first).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superder/derivations.hpp"

namespace superder {

struct IsoclinismPair {
  LieSuperalgebra source;
  LieSuperalgebra target;
  GradedLinearMap phi;
  GradedLinearMap theta;
};

/// Everything about one side of a pair that the checks below need.
struct PairSide {
  explicit PairSide(const LieSuperalgebra& g)
      : center(superder::center(g)),
        derived(derived_subalgebra(g)),
        central_quotient(quotient(g, center, g.name() + "/Z")),
        derived_basis(derived.basis()) {}

  /// Class of x in G/Z(G), in quotient coordinates.
  Vector class_of(const Vector& x) const { return central_quotient.projection(x); }

  /// Σ coords_a · representative_a
  Vector lift(const Vector& coords) const {
    Vector v(center.ambient().total());
    for (std::size_t a = 0; a < coords.size(); ++a) {
      if (is_zero(coords[a])) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords[a] * central_quotient.representatives[a][i];
    }
    return v;
  }

  Vector derived_coordinates(const Vector& x) const {
    auto coords = derived.coordinates(x);
    if (!coords) throw std::logic_error("vector expected in the derived subalgebra");
    return *coords;
  }

  Vector from_derived(const Vector& coords) const {
    Vector v(center.ambient().total());
    for (std::size_t b = 0; b < coords.size(); ++b) {
      if (is_zero(coords[b])) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords[b] * derived_basis[b][i];
    }
    return v;
  }

  GradedSubspace center;
  GradedSubspace derived;
  Quotient central_quotient;
  std::vector<Vector> derived_basis;
};

struct IsoclinismReport {
  bool holds = false;
  std::string failure;
  /// Quotient basis indices (a, b) where θ([x_a, x_b]) ≠ [φx_a, φx_b].
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::vector<std::string> witness_labels;
};

inline void require_pair_shapes(const IsoclinismPair& pair, const PairSide& g, const PairSide& h) {
  auto expect = [](const char* what, GradedDims actual, GradedDims wanted) {
    if (!(actual == wanted)) {
      throw DimensionError(std::string(what) + " has dims " + to_string(actual) + ", expected " +
                           to_string(wanted));
    }
  };
  expect("phi source", pair.phi.source(), g.central_quotient.algebra.dims());
  expect("phi target", pair.phi.target(), h.central_quotient.algebra.dims());
  expect("theta source", pair.theta.source(), g.derived.dims());
  expect("theta target", pair.theta.target(), h.derived.dims());
}

/// Checks that φ and θ are degree-0 isomorphisms and that the square
/// θ([x, y]) = [φx, φy] commutes on every basis pair of G/Z(G).
inline IsoclinismReport verify_isoclinism(const IsoclinismPair& pair) {
  const PairSide g(pair.source), h(pair.target);
  require_pair_shapes(pair, g, h);

  IsoclinismReport report;
  if (pair.phi.degree() != Parity::Even || pair.theta.degree() != Parity::Even) {
    report.failure = "phi and theta must have degree 0";
    return report;
  }
  if (!inverse(pair.phi.matrix())) {
    report.failure = "phi is not invertible";
    return report;
  }
  if (!inverse(pair.theta.matrix())) {
    report.failure = "theta is not invertible";
    return report;
  }

  const auto& reps = g.central_quotient.representatives;
  const std::size_t q = reps.size();
  std::vector<Vector> images(q);
  for (std::size_t a = 0; a < q; ++a) images[a] = h.lift(pair.phi(unit_vector(q, a)));

  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const Vector lhs = pair.theta(g.derived_coordinates(pair.source.bracket(reps[a], reps[b])));
      const Vector rhs = h.derived_coordinates(pair.target.bracket(images[a], images[b]));
      if (lhs != rhs) {
        const auto& labels = g.central_quotient.algebra.basis();
        report.failure = "square does not commute on (" + labels.label(a) + ", " + labels.label(b) + ")";
        report.witness = {a, b};
        report.witness_labels = {labels.label(a), labels.label(b)};
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

inline IsoclinismPair identity_pair(const LieSuperalgebra& g) {
  const PairSide side(g);
  return {g, g, GradedLinearMap::identity(side.central_quotient.algebra.dims()),
          GradedLinearMap::identity(side.derived.dims())};
}

/// (φ⁻¹, θ⁻¹) from H to G.
inline IsoclinismPair inverse(const IsoclinismPair& pair) {
  const auto phi_inv = inverse(pair.phi.matrix());
  const auto theta_inv = inverse(pair.theta.matrix());
  if (!phi_inv || !theta_inv) throw std::invalid_argument("inverse: pair maps are not invertible");
  return {pair.target, pair.source,
          GradedLinearMap(pair.phi.target(), pair.phi.source(), Parity::Even, *phi_inv),
          GradedLinearMap(pair.theta.target(), pair.theta.source(), Parity::Even, *theta_inv)};
}

struct StemReduction {
  LieSuperalgebra stem;
  /// K: graded complement of G¹ ∩ Z(G) inside Z(G).
  GradedSubspace complement;
  Quotient projection;
  /// G → stem, induced by the projection.
  IsoclinismPair pair;
};

/// Quotient by a graded complement K of G¹ ∩ Z(G) in Z(G). Because
/// K ∩ G¹ = 0, Z(G/K) = Z(G)/K, so the projection induces an isoclinism onto
/// a stem algebra in one step.
inline StemReduction stem_reduce(const LieSuperalgebra& g) {
  const GradedSubspace z = center(g);
  const GradedSubspace derived = derived_subalgebra(g);
  const GradedSubspace k = graded_complement(graded_intersection(derived, z), z);
  Quotient q = quotient(g, k, k.is_zero() ? g.name() : g.name() + "_stem");

  const PairSide source(g), target(q.algebra);
  const std::size_t qg = source.central_quotient.representatives.size();
  Matrix phi(target.central_quotient.algebra.dim(), qg);
  for (std::size_t a = 0; a < qg; ++a) {
    phi.set_column(a, target.class_of(q.projection(source.central_quotient.representatives[a])));
  }
  Matrix theta(target.derived.dim(), source.derived.dim());
  for (std::size_t b = 0; b < source.derived_basis.size(); ++b) {
    theta.set_column(b, target.derived_coordinates(q.projection(source.derived_basis[b])));
  }

  IsoclinismPair pair{g, q.algebra,
                      GradedLinearMap(source.central_quotient.algebra.dims(),
                                      target.central_quotient.algebra.dims(), Parity::Even, std::move(phi)),
                      GradedLinearMap(source.derived.dims(), target.derived.dims(), Parity::Even, std::move(theta))};
  LieSuperalgebra stem = q.algebra;
  return {std::move(stem), k, std::move(q), std::move(pair)};
}

struct CheckReport {
  bool applicable = false;
  bool holds = false;
  std::string detail;
};

/// θ(Z(G)) = H¹ ∩ Z(H) for a pair whose source is stem.
inline CheckReport check_theta_center_image(const IsoclinismPair& pair) {
  const PairSide g(pair.source), h(pair.target);
  require_pair_shapes(pair, g, h);
  if (!g.derived.contains(g.center)) return {false, false, "source is not stem"};

  std::vector<Vector> images;
  for (const auto& z : g.center.basis()) images.push_back(h.from_derived(pair.theta(g.derived_coordinates(z))));
  const GradedSubspace image = GradedSubspace::span_homogeneous(pair.target.dims(), images);
  const GradedSubspace expected = graded_intersection(h.derived, h.center);
  const bool ok = image == expected;
  return {true, ok,
          "theta(Z(G)) " + to_string(image.dims()) + (ok ? " = " : " != ") + "H^1 ∩ Z(H) " +
              to_string(expected.dims())};
}

/// T ↦ T* with T*(h) = θ(T(g)) for any g with φ(g + Z(G)) = h + Z(H).
/// Requires a stem source; checks that T is central and that T* does not
/// depend on the chosen preimage.
class CentralTransport {
 public:
  explicit CentralTransport(IsoclinismPair pair)
      : pair_(std::move(pair)), g_(pair_.source), h_(pair_.target) {
    require_pair_shapes(pair_, g_, h_);
    if (!g_.derived.contains(g_.center)) throw PreconditionError("transport requires a stem source algebra");
    const auto phi_inv = inverse(pair_.phi.matrix());
    if (!phi_inv) throw PreconditionError("transport requires an invertible phi");
    phi_inverse_ = *phi_inv;
    source_central_ = central_derivations(pair_.source);
  }

  const IsoclinismPair& pair() const { return pair_; }
  const DerivationSpace& source_central() const { return source_central_; }

  GradedLinearMap operator()(const GradedLinearMap& t) const {
    if (!source_central_.contains(t)) throw PreconditionError("transport: map is not a central derivation");
    const std::size_t n = pair_.target.dim();
    Matrix image(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector g = g_.lift(phi_inverse_.apply(h_.class_of(unit_vector(n, j))));
      const Vector value = apply_at(t, g);
      for (const auto& z : g_.center.basis()) {
        Vector shifted = g;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += z[i];
        if (apply_at(t, shifted) != value) throw std::logic_error("transport: T* depends on the preimage choice");
      }
      image.set_column(j, value);
    }
    return {pair_.target.dims(), pair_.target.dims(), t.degree(), std::move(image)};
  }

  /// Span of the images of a basis of SDer_z(source).
  DerivationSpace image_space() const {
    std::vector<GradedLinearMap> images;
    for (const auto& t : source_central_.basis()) images.push_back((*this)(t));
    return as_space(DerivationKind::SDerZ, pair_.target.dims(), images);
  }

 private:
  Vector apply_at(const GradedLinearMap& t, const Vector& g) const {
    return h_.from_derived(pair_.theta(g_.derived_coordinates(t(g))));
  }

  IsoclinismPair pair_;
  PairSide g_;
  PairSide h_;
  Matrix phi_inverse_;
  DerivationSpace source_central_;
};

inline GradedLinearMap induced_central_derivation(const IsoclinismPair& pair, const GradedLinearMap& t) {
  return CentralTransport(pair)(t);
}

struct TransportReport {
  GradedDims source_dims;
  GradedDims image_dims;
  std::size_t rank = 0;
  bool injective = false;
  bool lands_in_central = false;
};

inline TransportReport check_transport(const IsoclinismPair& pair) {
  const CentralTransport transport(pair);
  const DerivationSpace image = transport.image_space();
  const DerivationSpace target_central = central_derivations(pair.target);
  TransportReport r;
  r.source_dims = transport.source_central().dims();
  r.image_dims = image.dims();
  r.rank = image.dims().total();
  r.injective = r.rank == r.source_dims.total();
  r.lands_in_central = target_central.contains(image);
  return r;
}

struct NilindexReport {
  std::optional<std::size_t> source;
  std::optional<std::size_t> target;
  bool holds = false;
};

inline NilindexReport check_nilindex_invariance(const IsoclinismPair& pair) {
  const auto verified = verify_isoclinism(pair);
  if (!verified.holds) throw PreconditionError("nilindex check requires a verified pair: " + verified.failure);
  NilindexReport r{nilindex(pair.source), nilindex(pair.target), false};
  // The zero algebra (nilindex 0) is isoclinic to every abelian algebra
  // (nilindex 1); the invariant statement concerns Gⁿ for n ≥ 1.
  auto clamp = [](std::optional<std::size_t> n) {
    return n ? std::optional<std::size_t>(std::max<std::size_t>(*n, 1)) : n;
  };
  r.holds = clamp(r.source) == clamp(r.target);
  return r;
}

struct CentralSubalgebraReport {
  GradedDims n_dims;
  /// hom_dims(S/S¹, Z(S)) for the stem reduction S of H.
  GradedDims predicted;
  bool central = false;
  bool dims_match = false;
  /// Clauses below only evaluated for nilindex 2.
  bool nilindex_two = false;
  GradedDims inner_dims;
  GradedDims hom_quotient_derived;
  bool inner_contained = false;
  bool inner_dims_match = false;
  bool holds = false;
};

/// N = {T* : T ∈ SDer_z(S)} for the stem reduction S of H: N must be
/// central in SDer_z(H) with the superdimension of Hom(S/S¹, Z(S)); at
/// nilindex 2 it must also contain SIDer(H) and match Hom(H/Z(H), H¹).
inline CentralSubalgebraReport check_central_subalgebra(const LieSuperalgebra& h) {
  const StemReduction reduction = stem_reduce(h);
  const CentralTransport transport(inverse(reduction.pair));
  const DerivationSpace n = transport.image_space();
  const DerivationSpace target_central = central_derivations(h);

  CentralSubalgebraReport r;
  r.n_dims = n.dims();
  const LieSuperalgebra& s = reduction.stem;
  r.predicted = hom_dims(s.dims() - derived_subalgebra(s).dims(), center(s).dims());
  r.dims_match = r.n_dims == r.predicted;

  r.central = target_central.contains(n);
  const auto n_basis = n.basis();
  const auto z_basis = target_central.basis();
  for (const auto& a : n_basis) {
    for (const auto& b : z_basis) {
      if (!endo_super_bracket(a, b).is_zero()) r.central = false;
    }
  }

  r.holds = r.central && r.dims_match;
  const auto ni = nilindex(h);
  r.nilindex_two = ni && *ni == 2;
  if (r.nilindex_two) {
    const DerivationSpace inner = inner_derivation_space(h);
    r.inner_dims = inner.dims();
    r.hom_quotient_derived = hom_dims(h.dims() - center(h).dims(), derived_subalgebra(h).dims());
    r.inner_contained = n.contains(inner);
    r.inner_dims_match = r.hom_quotient_derived == r.n_dims;
    r.holds = r.holds && r.inner_contained && r.inner_dims_match;
  }
  return r;
}

}  // namespace superder

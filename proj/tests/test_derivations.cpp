#include <gtest/gtest.h>

#include "support.hpp"

using namespace superder;
using testing_support::corpus;
using testing_support::e;
using testing_support::to_oracle;

namespace {

Subspace oracle_space(const LieSuperalgebra& g, int alpha, bool central) {
  return Subspace::span(g.dim() * g.dim(), oracle::derivations(to_oracle(g), alpha, central));
}

/// Maps of degree alpha killing G¹ with image in Z(G), set up directly as
/// linear conditions on the matrix entries.
Subspace characterized_central(const LieSuperalgebra& g, Parity alpha) {
  const std::size_t n = g.dim(), u = n * n;
  const GradedSubspace z = center(g), derived = derived_subalgebra(g);
  std::vector<Vector> eqs;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!GradedLinearMap::allowed(g.dims(), g.dims(), alpha, r, c)) eqs.push_back(unit_vector(u, r * n + c));
  for (const auto& d : derived.basis())
    for (std::size_t r = 0; r < n; ++r) {
      Vector eq(u);
      for (std::size_t c = 0; c < n; ++c) eq[r * n + c] = d[c];
      eqs.push_back(std::move(eq));
    }
  const Subspace ann = annihilator(z.total());
  for (const auto& f : ann.basis())
    for (std::size_t c = 0; c < n; ++c) {
      Vector eq(u);
      for (std::size_t r = 0; r < n; ++r) eq[r * n + c] = f[r];
      eqs.push_back(std::move(eq));
    }
  return kernel_of_equations(u, eqs);
}

}  // namespace

TEST(Derivations, FrozenDimensions) {
  // Brute-force values: SDer_0(H3) has six free parameters (see README).
  EXPECT_EQ(derivation_subspace(fixtures::h3(), Parity::Even).dim(), 6u);
  EXPECT_EQ(derivation_subspace(fixtures::sh12(), Parity::Odd).dim(), 2u);
  EXPECT_EQ(derivations(fixtures::abelian(2, 3)).dims(), (GradedDims{13, 12}));
  EXPECT_EQ(derivations(fixtures::h3w()).dims().even, 10u);
}

TEST(Derivations, FixturesMatchBruteForce) {
  for (const auto& f : fixtures::all()) {
    const auto sder = derivations(f.algebra);
    EXPECT_EQ(sder.even, oracle_space(f.algebra, 0, false)) << f.file;
    EXPECT_EQ(sder.odd, oracle_space(f.algebra, 1, false)) << f.file;
    const auto sderz = central_derivations(f.algebra, sder);
    EXPECT_EQ(sderz.even, oracle_space(f.algebra, 0, true)) << f.file;
    EXPECT_EQ(sderz.odd, oracle_space(f.algebra, 1, true)) << f.file;
  }
}

TEST(Derivations, BasisMapsSatisfyLeibniz) {
  for (const auto& f : fixtures::all()) {
    const auto& g = f.algebra;
    for (const auto& t : derivations(g).basis()) {
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
          const Vector x = unit_vector(g.dim(), i), y = unit_vector(g.dim(), j);
          const int s = koszul_sign(t.degree(), g.parity(i));
          Vector rhs = g.bracket(t(x), y);
          const Vector second = g.bracket(x, t(y));
          for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += s * second[k];
          EXPECT_EQ(t(g.bracket(x, y)), rhs);
        }
    }
  }
}

TEST(Inner, SpecExamples) {
  const auto h3 = fixtures::h3();
  EXPECT_TRUE(inner_derivation(h3, e(h3, "z")).is_zero());
  const auto ad_e1 = inner_derivation(h3, e(h3, "e1"));
  EXPECT_EQ(ad_e1(e(h3, "e2")), e(h3, "z"));
  EXPECT_TRUE(is_zero(ad_e1(e(h3, "e1"))));
  EXPECT_TRUE(is_zero(ad_e1(e(h3, "z"))));

  const auto sh12 = fixtures::sh12();
  const auto ad_f1 = inner_derivation(sh12, e(sh12, "f1"));
  EXPECT_EQ(ad_f1.degree(), Parity::Odd);
  EXPECT_EQ(ad_f1(e(sh12, "f1")), e(sh12, "z"));
  EXPECT_THROW(inner_derivation(sh12, Vector{1, 1, 0}), NonHomogeneousError);
}

TEST(Inner, SpaceDims) {
  EXPECT_EQ(inner_derivation_space(fixtures::h3()).dims(), (GradedDims{2, 0}));
  EXPECT_EQ(inner_derivation_space(fixtures::abelian(2, 3)).dims(), (GradedDims{0, 0}));
  EXPECT_EQ(inner_derivation_space(fixtures::sh12()).dims(), (GradedDims{0, 2}));
  for (const auto& f : fixtures::all()) {
    EXPECT_TRUE(derivations(f.algebra).contains(inner_derivation_space(f.algebra))) << f.file;
    // ad: G → SIDer has kernel Z(G).
    EXPECT_EQ(inner_derivation_space(f.algebra).dims(), f.algebra.dims() - center(f.algebra).dims()) << f.file;
  }
}

TEST(Central, SpecExamples) {
  EXPECT_EQ(central_derivations(fixtures::h3()).dims(), (GradedDims{2, 0}));
  EXPECT_EQ(central_derivations(fixtures::sh12()).dims(), (GradedDims{0, 2}));
  EXPECT_EQ(central_derivations(fixtures::h3w()).dims(), (GradedDims{6, 0}));
  EXPECT_EQ(central_derivations(fixtures::f4()).dims(), (GradedDims{2, 0}));
}

TEST(SuperBracket, SelfBrackets) {
  const auto h3 = fixtures::h3();
  for (const auto& t : derivations(h3).basis()) EXPECT_TRUE(endo_super_bracket(t, t).is_zero());
  // Odd swap on (1|1): [T, T] = 2T² = 2·id.
  const GradedLinearMap swap({1, 1}, {1, 1}, Parity::Odd, Matrix::of({{0, 1}, {1, 0}}));
  EXPECT_EQ(endo_super_bracket(swap, swap).matrix(), 2 * Matrix::identity(2));
  EXPECT_THROW(endo_super_bracket(swap, GradedLinearMap::identity({2, 0})), DimensionError);
}

TEST(Structure, SpecExamples) {
  EXPECT_TRUE(derivation_superalgebra_structure(central_derivations(fixtures::h3())).algebra.tensor().is_zero());
  EXPECT_FALSE(derivation_superalgebra_structure(central_derivations(fixtures::h3w())).algebra.tensor().is_zero());
  const auto inner = derivation_superalgebra_structure(inner_derivation_space(fixtures::h3()));
  EXPECT_EQ(inner.algebra.dims(), (GradedDims{2, 0}));
  EXPECT_TRUE(inner.algebra.tensor().is_zero());
}

TEST(Structure, FullDerivationAlgebraIsClosed) {
  for (const auto& f : fixtures::all()) {
    const auto s = derivation_superalgebra_structure(derivations(f.algebra));
    EXPECT_TRUE(oracle::check_axioms(to_oracle(s.algebra)).ok()) << f.file;
  }
}

TEST(Structure, NonClosedSpaceIsRejected) {
  const GradedDims d{2, 0};
  const GradedLinearMap e12(d, d, Parity::Even, Matrix::of({{0, 1}, {0, 0}}));
  const GradedLinearMap e21(d, d, Parity::Even, Matrix::of({{0, 0}, {1, 0}}));
  EXPECT_THROW(derivation_superalgebra_structure(as_space(DerivationKind::SDer, d, {e12, e21})), NotClosedError);
}

TEST(HomDims, SpecExamples) {
  EXPECT_EQ(hom_dims({2, 0}, {1, 0}), (GradedDims{2, 0}));
  EXPECT_EQ(hom_dims({0, 2}, {1, 0}), (GradedDims{0, 2}));
  EXPECT_EQ(hom_dims({3, 0}, {2, 0}), (GradedDims{6, 0}));
  EXPECT_EQ(hom_dims({1, 2}, {3, 1}), (GradedDims{5, 7}));
}

TEST(SubalgebraCenter, SpecExamples) {
  auto z = [](const LieSuperalgebra& g) {
    return center_of_subalgebra(derivation_superalgebra_structure(central_derivations(g))).dims;
  };
  EXPECT_EQ(z(fixtures::h3()), (GradedDims{2, 0}));
  EXPECT_EQ(z(fixtures::h3w()), (GradedDims{2, 0}));
  EXPECT_EQ(z(fixtures::sh12()), (GradedDims{0, 2}));
}

TEST(SubalgebraCenter, MatchesCentralizerOracle) {
  for (const auto& f : fixtures::all()) {
    const auto o = to_oracle(f.algebra);
    const auto expected = oracle::centralizer_dims(oracle::derivations(o, 0, true), oracle::derivations(o, 1, true),
                                                   f.algebra.dim());
    const auto got = center_of_subalgebra(derivation_superalgebra_structure(central_derivations(f.algebra))).dims;
    EXPECT_EQ(to_oracle(got), expected) << f.file;
  }
}

TEST(Noncommuting, SpecExamples) {
  const auto h3w = fixtures::h3w();
  const auto p = construct_noncommuting_central_derivations(h3w);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->y, e(h3w, "w"));
  EXPECT_EQ(p->first(e(h3w, "w")), e(h3w, "w"));
  EXPECT_EQ(p->second(e(h3w, "w")), e(h3w, "z"));
  const auto b = endo_super_bracket(p->first, p->second);
  EXPECT_EQ(b(e(h3w, "w")), (Vector{0, 0, -1, 0}));

  const auto sh12w = fixtures::sh12w();
  const auto q = construct_noncommuting_central_derivations(sh12w);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->first.degree(), Parity::Even);
  EXPECT_EQ(q->second.degree(), Parity::Odd);
  EXPECT_EQ(q->second(e(sh12w, "w")), e(sh12w, "z"));
  EXPECT_FALSE(endo_super_bracket(q->first, q->second).is_zero());
  const auto sderz = central_derivations(sh12w);
  EXPECT_TRUE(sderz.contains(q->first));
  EXPECT_TRUE(sderz.contains(q->second));

  EXPECT_FALSE(construct_noncommuting_central_derivations(fixtures::h3()).has_value());
  EXPECT_THROW(construct_noncommuting_central_derivations(fixtures::abelian(2, 1)), PreconditionError);
}

TEST(Observation, CentralCommuteWithInner) {
  for (const auto& f : fixtures::all()) {
    const auto inner = inner_derivation_space(f.algebra).basis();
    for (const auto& t : central_derivations(f.algebra).basis())
      for (const auto& ad : inner) EXPECT_TRUE(endo_super_bracket(t, ad).is_zero()) << f.file;
  }
}

TEST(Observation, BracketWithAdjoint) {
  for (const auto& f : fixtures::all()) {
    const auto& g = f.algebra;
    for (const auto& t : derivations(g).basis())
      for (std::size_t i = 0; i < g.dim(); ++i) {
        const Vector x = unit_vector(g.dim(), i);
        EXPECT_EQ(endo_super_bracket(t, inner_derivation(g, x)).matrix(), g.adjoint(t(x))) << f.file;
      }
  }
}

TEST(DerivationProperty, DimensionLawOnCorpus) {
  for (const auto& g : corpus()) {
    const auto quotient_dims = g.dims() - derived_subalgebra(g).dims();
    EXPECT_EQ(central_derivations(g).dims(), hom_dims(quotient_dims, center(g).dims())) << g.name();
  }
}

TEST(DerivationProperty, CharacterizationOnCorpus) {
  for (const auto& g : corpus()) {
    const auto sderz = central_derivations(g);
    EXPECT_EQ(sderz.even, characterized_central(g, Parity::Even)) << g.name();
    EXPECT_EQ(sderz.odd, characterized_central(g, Parity::Odd)) << g.name();
  }
}

TEST(DerivationProperty, CorpusMatchesBruteForce) {
  // The brute-force system has d² unknowns; keep to the smaller instances.
  std::size_t checked = 0;
  for (const auto& g : corpus()) {
    if (g.dim() > 7) continue;
    EXPECT_EQ(derivations(g).even, oracle_space(g, 0, false)) << g.name();
    EXPECT_EQ(central_derivations(g).odd, oracle_space(g, 1, true)) << g.name();
    ++checked;
  }
  EXPECT_GT(checked, 10u);
}

TEST(DerivationProperty, InnerIsIdeal) {
  for (const auto& f : fixtures::all()) {
    const auto sder = derivations(f.algebra).basis();
    const auto inner = inner_derivation_space(f.algebra);
    for (const auto& t : sder)
      for (const auto& ad : inner.basis()) EXPECT_TRUE(inner.contains(endo_super_bracket(t, ad))) << f.file;
  }
}

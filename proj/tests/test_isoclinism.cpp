#include <gtest/gtest.h>

#include "support.hpp"

using namespace superder;
using testing_support::e;
using testing_support::to_oracle;

namespace {

IsoclinismPair scaled_theta(IsoclinismPair pair, long factor) {
  pair.theta = GradedLinearMap(pair.theta.source(), pair.theta.target(), Parity::Even,
                               Rational(factor) * pair.theta.matrix());
  return pair;
}

}  // namespace

TEST(Isoclinism, IdentityPairHolds) {
  for (const auto& f : fixtures::all()) EXPECT_TRUE(verify_isoclinism(identity_pair(f.algebra)).holds) << f.file;
}

TEST(Isoclinism, ScaledThetaIsRejectedWithWitness) {
  const auto report = verify_isoclinism(scaled_theta(identity_pair(fixtures::h3()), 2));
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness_labels, (std::vector<std::string>{"e1", "e2"}));
  EXPECT_FALSE(report.failure.empty());
}

TEST(Isoclinism, SingularMapsAreRejected) {
  auto pair = identity_pair(fixtures::h3());
  pair.phi = GradedLinearMap({2, 0}, {2, 0}, Parity::Even, Matrix::of({{1, 1}, {1, 1}}));
  EXPECT_FALSE(verify_isoclinism(pair).holds);
}

TEST(Isoclinism, ShapeMismatchThrows) {
  auto pair = identity_pair(fixtures::h3());
  pair.target = fixtures::f4();
  EXPECT_THROW(verify_isoclinism(pair), DimensionError);
}

TEST(StemReduce, SpecExamples) {
  const auto h3w = fixtures::h3w();
  const auto r = stem_reduce(h3w);
  EXPECT_EQ(r.complement, GradedSubspace::span_homogeneous(h3w.dims(), {e(h3w, "w")}));
  EXPECT_TRUE(r.stem.same_structure(fixtures::h3()));
  EXPECT_TRUE(is_stem(r.stem));
  EXPECT_TRUE(verify_isoclinism(r.pair).holds);

  const auto h3 = fixtures::h3();
  const auto same = stem_reduce(h3);
  EXPECT_TRUE(same.complement.is_zero());
  EXPECT_EQ(same.stem.name(), "H3");
  EXPECT_TRUE(same.stem.same_structure(h3));
  EXPECT_EQ(same.pair.phi.matrix(), Matrix::identity(2));
  EXPECT_EQ(same.pair.theta.matrix(), Matrix::identity(1));

  const auto sh12w = fixtures::sh12w();
  const auto odd = stem_reduce(sh12w);
  EXPECT_EQ(odd.complement.dims(), (GradedDims{0, 1}));
  EXPECT_TRUE(odd.stem.same_structure(fixtures::sh12()));
  EXPECT_EQ(odd.stem.dims(), (GradedDims{1, 2}));
}

TEST(StemReduce, NonStemFixturesReduceToVerifiedStem) {
  for (const auto& f : fixtures::all()) {
    const auto r = stem_reduce(f.algebra);
    EXPECT_TRUE(is_stem(r.stem)) << f.file;
    EXPECT_TRUE(oracle::check_axioms(to_oracle(r.stem)).ok()) << f.file;
    EXPECT_TRUE(verify_isoclinism(r.pair).holds) << f.file;
    EXPECT_TRUE(verify_isoclinism(inverse(r.pair)).holds) << f.file;
  }
}

TEST(ThetaCenterImage, GatesAndHolds) {
  const auto stem_pair = identity_pair(fixtures::h3());
  const auto report = check_theta_center_image(stem_pair);
  EXPECT_TRUE(report.applicable);
  EXPECT_TRUE(report.holds);

  EXPECT_FALSE(check_theta_center_image(identity_pair(fixtures::h3w())).applicable);
  const auto from_stem = inverse(stem_reduce(fixtures::sh12w()).pair);
  EXPECT_TRUE(check_theta_center_image(from_stem).holds);
}

TEST(Transport, SpecExamples) {
  const auto h3w = fixtures::h3w();
  const auto pair = inverse(stem_reduce(h3w).pair);
  const auto& s = pair.source;
  // T(e1) = z on the stem.
  Matrix m(3, 3);
  m(2, 0) = 1;
  const GradedLinearMap t(s.dims(), s.dims(), Parity::Even, m);
  const auto star = induced_central_derivation(pair, t);
  EXPECT_EQ(star(e(h3w, "e1")), e(h3w, "z"));
  EXPECT_TRUE(is_zero(star(e(h3w, "w"))));
  EXPECT_TRUE(central_derivations(h3w).contains(star));

  EXPECT_TRUE(induced_central_derivation(pair, GradedLinearMap::zero(s.dims(), s.dims(), Parity::Even)).is_zero());

  const auto report = check_transport(pair);
  EXPECT_EQ(report.rank, 2u);
  EXPECT_TRUE(report.injective);
  EXPECT_TRUE(report.lands_in_central);
}

TEST(Transport, RefusesBadInput) {
  EXPECT_THROW(CentralTransport(identity_pair(fixtures::h3w())), PreconditionError);
  const auto pair = identity_pair(fixtures::h3());
  EXPECT_THROW(induced_central_derivation(pair, GradedLinearMap::identity({3, 0})), PreconditionError);
}

TEST(Nilindex, SpecExamples) {
  const auto h = check_nilindex_invariance(stem_reduce(fixtures::h3w()).pair);
  EXPECT_TRUE(h.holds);
  EXPECT_EQ(h.source, std::optional<std::size_t>(2));
  EXPECT_EQ(h.target, std::optional<std::size_t>(2));
  EXPECT_TRUE(check_nilindex_invariance(identity_pair(fixtures::f4())).holds);
  const auto f = check_nilindex_invariance(stem_reduce(fixtures::f4w()).pair);
  EXPECT_EQ(f.source, std::optional<std::size_t>(3));
  EXPECT_EQ(f.target, std::optional<std::size_t>(3));
  // Abelian algebras reduce to the zero algebra.
  const auto a = check_nilindex_invariance(stem_reduce(fixtures::abelian(2, 3)).pair);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.target, std::optional<std::size_t>(0));
  EXPECT_THROW(check_nilindex_invariance(scaled_theta(identity_pair(fixtures::h3()), 2)), PreconditionError);
}

TEST(CentralSubalgebra, SpecExamples) {
  const auto h3w = check_central_subalgebra(fixtures::h3w());
  EXPECT_EQ(h3w.n_dims, (GradedDims{2, 0}));
  EXPECT_TRUE(h3w.central);
  EXPECT_EQ(h3w.inner_dims, (GradedDims{2, 0}));
  EXPECT_TRUE(h3w.inner_contained);
  EXPECT_TRUE(h3w.holds);

  const auto sh12w = check_central_subalgebra(fixtures::sh12w());
  EXPECT_EQ(sh12w.n_dims, (GradedDims{0, 2}));
  EXPECT_EQ(sh12w.inner_dims, (GradedDims{0, 2}));
  EXPECT_TRUE(sh12w.holds);

  // Stem input: N is all of SDer_z.
  const auto h3 = check_central_subalgebra(fixtures::h3());
  EXPECT_EQ(h3.n_dims, central_derivations(fixtures::h3()).dims());
  EXPECT_TRUE(h3.holds);
}

TEST(PairFiles, RoundTripAndShapeErrors) {
  const auto h3w = fixtures::h3w();
  const auto r = stem_reduce(h3w);
  const auto pair = inverse(r.pair);
  const std::string text = serialize_pair(pair, "s.json", "t.json");
  const auto back = parse_pair(text, pair.source, pair.target);
  EXPECT_EQ(back.phi, pair.phi);
  EXPECT_EQ(back.theta, pair.theta);
  EXPECT_THROW(parse_pair(text, pair.source, fixtures::f4()), DimensionError);
  EXPECT_THROW(parse_pair(R"({"phi": [[1]], "theta": [[1]]})", pair.source, pair.target), DimensionError);
  EXPECT_THROW(parse_pair("{", pair.source, pair.target), ParseError);
}

TEST(IsoclinismProperty, CorpusStemReductions) {
  for (const auto& g : testing_support::corpus()) {
    const auto r = stem_reduce(g);
    ASSERT_TRUE(is_stem(r.stem)) << g.name();
    ASSERT_TRUE(verify_isoclinism(r.pair).holds) << g.name();
    EXPECT_TRUE(check_nilindex_invariance(r.pair).holds) << g.name();
    const auto back = inverse(r.pair);
    EXPECT_TRUE(check_theta_center_image(back).holds) << g.name();
    const auto t = check_transport(back);
    EXPECT_TRUE(t.injective && t.lands_in_central) << g.name();
  }
}

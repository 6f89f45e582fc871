#pragma once

// Seeded random Lie superalgebras of nilindex at most 2: V ⊕ W with W
// central and a random super-antisymmetric bracket V × V → W. Every triple
// bracket lands in [W, ·] = 0, so super Jacobi holds by construction.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "superder/invariants.hpp"

namespace superder {

class GeneratorGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxGeneratedBlock = 6;

class NilpotentGenerator {
 public:
  /// `v` spans the generating part, `w` the central part receiving brackets.
  NilpotentGenerator(GradedDims v, GradedDims w, std::uint64_t seed) : v_(v), w_(w), seed_(seed), rng_(seed) {
    if (v.even + w.even > kMaxGeneratedBlock || v.odd + w.odd > kMaxGeneratedBlock) {
      throw GeneratorGuardError("generator dims exceed (6|6): V=" + to_string(v) + ", W=" + to_string(w));
    }
  }

  LieSuperalgebra next() {
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= v_.even; ++i) even.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= w_.even; ++i) even.push_back("z" + std::to_string(i));
    for (std::size_t i = 1; i <= v_.odd; ++i) odd.push_back("y" + std::to_string(i));
    for (std::size_t i = 1; i <= w_.odd; ++i) odd.push_back("u" + std::to_string(i));
    GradedBasis basis(std::move(even), std::move(odd));

    // Index helpers in the even-then-odd ordering.
    const std::size_t m = v_.even + w_.even;
    auto v_even = [&](std::size_t i) { return i; };
    auto w_even = [&](std::size_t i) { return v_.even + i; };
    auto v_odd = [&](std::size_t i) { return m + i; };
    auto w_odd = [&](std::size_t i) { return m + v_.odd + i; };

    StructureTensor t(basis.size());
    auto assign = [&](std::size_t i, std::size_t j, std::size_t k, Rational value) {
      const int sign = -koszul_sign(basis.parity(i), basis.parity(j));
      t(i, j, k) = value;
      t(j, i, k) = sign * value;
    };

    for (std::size_t i = 0; i < v_.even; ++i)
      for (std::size_t j = i + 1; j < v_.even; ++j)
        for (std::size_t k = 0; k < w_.even; ++k) assign(v_even(i), v_even(j), w_even(k), draw());
    for (std::size_t i = 0; i < v_.odd; ++i)
      for (std::size_t j = i; j < v_.odd; ++j)
        for (std::size_t k = 0; k < w_.even; ++k) assign(v_odd(i), v_odd(j), w_even(k), draw());
    for (std::size_t i = 0; i < v_.even; ++i)
      for (std::size_t j = 0; j < v_.odd; ++j)
        for (std::size_t k = 0; k < w_.odd; ++k) assign(v_even(i), v_odd(j), w_odd(k), draw());

    std::string name = "gen_" + std::to_string(seed_) + "_" + std::to_string(count_++);
    if (t.is_zero()) name += "_abelian";
    return LieSuperalgebra(std::move(name), std::move(basis), std::move(t));
  }

 private:
  /// Uniform in {-2, ..., 2}. Uses the raw engine output so that the stream
  /// is identical across standard library implementations.
  Rational draw() { return static_cast<long>(rng_() % 5) - 2; }

  GradedDims v_;
  GradedDims w_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::size_t count_ = 0;
};

/// `count` random algebras of nilindex exactly 2, total dimension at most
/// 12, with dims drawn from the seed.
inline std::vector<LieSuperalgebra> nilindex_two_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 shape_rng(seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(shape_rng() % (bound + 1)); };
  std::vector<LieSuperalgebra> corpus;
  std::uint64_t instance_seed = seed;
  while (corpus.size() < count) {
    const GradedDims v{pick(4), pick(4)};
    const GradedDims w{1 + pick(2), pick(2)};
    if (v.total() < 2 || v.total() + w.total() > 12) continue;
    if (v.even + w.even > kMaxGeneratedBlock || v.odd + w.odd > kMaxGeneratedBlock) continue;
    NilpotentGenerator gen(v, w, ++instance_seed);
    LieSuperalgebra g = gen.next();
    const auto n = nilindex(g);
    if (n && *n == 2) corpus.push_back(std::move(g));
  }
  return corpus;
}

}  // namespace superder

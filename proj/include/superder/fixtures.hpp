#pragma once

// The shipped fixture library: stem and non-stem algebras of nilindex 1, 2
// and 3, purely even and mixed parity.

#include <string>
#include <vector>

#include "superder/builder.hpp"

namespace superder::fixtures {

/// AB(m|n) with even labels a1.. and odd labels b1..
inline LieSuperalgebra abelian(std::size_t m, std::size_t n, std::string name = {}) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= m; ++i) even.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) odd.push_back("b" + std::to_string(i));
  if (name.empty()) name = "AB(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return LieSuperalgebra::abelian(std::move(name), GradedBasis(std::move(even), std::move(odd)));
}

/// Heisenberg algebra: [e1, e2] = z.
inline LieSuperalgebra h3() {
  BracketTable t(GradedBasis({"e1", "e2", "z"}, {}));
  t.set("e1", "e2", {{1, "z"}});
  return t.build("H3");
}

/// Super Heisenberg (1|2): [f1, f1] = [f2, f2] = z.
inline LieSuperalgebra sh12() {
  BracketTable t(GradedBasis({"z"}, {"f1", "f2"}));
  t.set("f1", "f1", {{1, "z"}});
  t.set("f2", "f2", {{1, "z"}});
  return t.build("SH12");
}

/// Filiform: [e1, e2] = e3, [e1, e3] = e4.
inline LieSuperalgebra f4() {
  BracketTable t(GradedBasis({"e1", "e2", "e3", "e4"}, {}));
  t.set("e1", "e2", {{1, "e3"}});
  t.set("e1", "e3", {{1, "e4"}});
  return t.build("F4");
}

inline LieSuperalgebra h3w() {
  return direct_sum(h3(), LieSuperalgebra::abelian("w", GradedBasis({"w"}, {})), "H3W");
}

inline LieSuperalgebra sh12w() {
  return direct_sum(sh12(), LieSuperalgebra::abelian("w", GradedBasis({}, {"w"})), "SH12W");
}

inline LieSuperalgebra f4w() {
  return direct_sum(f4(), LieSuperalgebra::abelian("w", GradedBasis({"w"}, {})), "F4W");
}

struct Fixture {
  std::string file;
  LieSuperalgebra algebra;
};

inline std::vector<Fixture> all() {
  return {
      {"ab_2_3.json", abelian(2, 3, "AB23")},
      {"h3.json", h3()},
      {"sh12.json", sh12()},
      {"h3w.json", h3w()},
      {"sh12w.json", sh12w()},
      {"f4.json", f4()},
      {"f4w.json", f4w()},
  };
}

}  // namespace superder::fixtures

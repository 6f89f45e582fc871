#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superder {

/// Exact scalar field. GMP keeps mpq values canonical (gcd 1, positive
/// denominator, 0 as 0/1) after every arithmetic operation.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

class RationalFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only).
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? detail::is_digit_run(body)
                      : detail::is_digit_run(body.substr(0, slash)) &&
                            detail::is_digit_run(body.substr(slash + 1));
  if (!ok) {
    throw RationalFormatError("not a rational number: '" + std::string(text) + "'");
  }
  std::string normalized(text);
  if (normalized.front() == '+') normalized.erase(0, 1);

  Rational q;
  if (q.set_str(normalized, 10) != 0) {
    throw RationalFormatError("not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw RationalFormatError("zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

inline Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

}  // namespace superder

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superder/superalgebra.hpp"

namespace superder {

class DuplicateBracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Collects brackets [e_i, e_j] = v and completes [e_j, e_i] by super
/// antisymmetry. Supplying both orientations is allowed only when they agree;
/// a disagreement is kept as an antisymmetry violation for validation.
class BracketTable {
 public:
  explicit BracketTable(GradedBasis basis)
      : basis_(std::move(basis)), tensor_(basis_.size()), given_(basis_.size() * basis_.size(), false) {}

  const GradedBasis& basis() const { return basis_; }

  std::size_t index(const std::string& label) const {
    const auto i = basis_.index_of(label);
    if (!i) throw std::out_of_range("unknown basis label '" + label + "'");
    return *i;
  }

  void set(std::size_t i, std::size_t j, const Vector& value) {
    const std::size_t n = basis_.size();
    if (value.size() != n) throw DimensionError("bracket value has wrong length");
    if (given_[i * n + j]) {
      throw DuplicateBracketError("duplicate bracket [" + basis_.label(i) + ", " + basis_.label(j) + "]");
    }
    const int sign = -koszul_sign(basis_.parity(i), basis_.parity(j));
    if (given_[j * n + i]) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational defect = value[k] - sign * tensor_(j, i, k);
        if (!is_zero(defect)) conflicts_.push_back({Violation::Kind::Antisymmetry, i, j, k, k, defect});
      }
      given_[i * n + j] = true;
      return;
    }
    for (std::size_t k = 0; k < n; ++k) {
      tensor_(i, j, k) = value[k];
      if (i != j) tensor_(j, i, k) = sign * value[k];
      else if (sign < 0 && !is_zero(value[k])) {
        // [x, x] for even x must vanish; the completion would demand c = -c.
        conflicts_.push_back({Violation::Kind::Antisymmetry, i, i, k, k, 2 * value[k]});
      }
    }
    given_[i * n + j] = true;
  }

  void set(const std::string& x, const std::string& y, const std::vector<std::pair<Rational, std::string>>& terms) {
    Vector v(basis_.size());
    for (const auto& [coeff, label] : terms) v[index(label)] += coeff;
    set(index(x), index(y), v);
  }

  const StructureTensor& tensor() const { return tensor_; }
  const std::vector<Violation>& conflicts() const { return conflicts_; }

  /// Conflicts followed by the validation of the completed tensor.
  ValidationReport validate() const {
    ValidationReport report{conflicts_};
    const auto rest = superder::validate(basis_, tensor_);
    report.violations.insert(report.violations.end(), rest.violations.begin(), rest.violations.end());
    return report;
  }

  LieSuperalgebra build(std::string name) const {
    if (!conflicts_.empty()) {
      throw InvalidAlgebraError("'" + name + "' is not a Lie superalgebra: " + describe(conflicts_.front(), basis_),
                                validate());
    }
    return LieSuperalgebra(std::move(name), basis_, tensor_);
  }

 private:
  GradedBasis basis_;
  StructureTensor tensor_;
  std::vector<bool> given_;
  std::vector<Violation> conflicts_;
};

}  // namespace superder

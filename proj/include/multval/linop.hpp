#pragma once

#include <span>
#include <utility>
#include <vector>

#include "multval/qpoly.hpp"
#include "multval/rational.hpp"

namespace multval {

/// Linear difference operator: an element of Z[r, r^-1], stored as
/// (exponent, coefficient) pairs with exponents strictly increasing and no
/// zero coefficients. The empty list is the zero operator.
class LinOp {
 public:
  LinOp() = default;
  static LinOp from_terms(std::vector<std::pair<int, Int>> terms);
  static LinOp constant(Int c);
  static LinOp zero() { return LinOp(); }
  static LinOp one() { return constant(1); }
  static LinOp rho() { return monomial(1, 1); }
  static LinOp monomial(int exp, Int coeff);

  bool is_zero() const { return t_.empty(); }
  const std::vector<std::pair<int, Int>>& terms() const { return t_; }
  int min_exp() const { return t_.front().first; }
  int max_exp() const { return t_.back().first; }
  const Int& lead_coeff() const { return t_.back().second; }
  Int coeff_at(int exp) const;

  bool operator==(const LinOp& o) const { return t_ == o.t_; }

  friend LinOp operator+(const LinOp& a, const LinOp& b);
  friend LinOp operator-(const LinOp& a, const LinOp& b);
  friend LinOp operator*(const LinOp& a, const LinOp& b);
  LinOp operator-() const;
  LinOp scaled(const Int& k) const;
  LinOp shifted(int k) const;  // multiply by r^k

  /// gcd of the integer coefficients (0 for the zero operator).
  Int content() const;

  /// The operator as a plain polynomial in r after multiplying by r^m with
  /// m = -min_exp (no-op when there are no negative exponents). Returns the
  /// polynomial and m.
  std::pair<QPoly, int> cleared() const;

  static LinOp from_qpoly_num(const QPoly& p);  // integer-coefficient input

 private:
  std::vector<std::pair<int, Int>> t_;
};

/// |I|_rho = sum_j I[j] * r^j for a multi-index I (entries may be negative).
LinOp rho_length(std::span<const long> index);

}  // namespace multval

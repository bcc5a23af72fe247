#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multval/rational.hpp"

namespace multval {

/// Dense univariate polynomial over the rationals, coefficients stored
/// constant-first with no trailing zeros (zero polynomial = empty vector).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(Rat v);
  static QPoly x();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& coeff(int i) const;
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly scaled(const Rat& k) const;

  Rat eval(const Rat& x) const;
  QPoly derivative() const;

  /// Quotient and remainder with deg(rem) < deg(d). d must be nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& n, const QPoly& d);
  static QPoly rem(const QPoly& n, const QPoly& d) { return divmod(n, d).second; }

  /// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
  static QPoly gcd(QPoly a, QPoly b);

  struct EGcd;
  static EGcd egcd(const QPoly& a, const QPoly& b);

  QPoly monic() const;

  /// Substitute x -> x + k (Taylor shift).
  QPoly shifted(const Rat& k) const;

  /// Integer-coefficient primitive part with positive leading coefficient;
  /// returns the coefficients and the positive rational factor f with
  /// this == f * primitive (sign folded into f).
  std::pair<std::vector<Int>, Rat> primitive_int() const;

  /// Number of distinct real roots in (lo, hi] by Sturm's theorem.
  /// Requires a squarefree argument for exact multiplicity-free counting.
  int count_roots(const Rat& lo, const Rat& hi) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct QPoly::EGcd {
  QPoly g, u, v;  // u*a + v*b == g, g monic (or zero)
};

inline QPoly from_int_coeffs(const std::vector<Int>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const auto& n : v) c.emplace_back(n);
  return QPoly(std::move(c));
}

}  // namespace multval

#pragma once

#include <memory>
#include <vector>

#include "multval/linop.hpp"
#include "multval/qpoly.hpp"
#include "multval/rational.hpp"

namespace multval {

enum class RhoKind { Rational, Algebraic, AlgebraicPlusEps, AlgebraicMinusEps, Infinite };

/// The order type of rho: a total, decidable sign oracle on Z[r, r^-1]
/// realizing the trichotomy of Axiom OM. Cheap to copy; sign queries are
/// logically const (the isolating interval is refined behind a lock).
class Rho {
 public:
  static Rho rational(Int p, Int q);
  static Rho algebraic(const std::vector<Int>& minpoly, const Rat& lo, const Rat& hi);
  static Rho algebraic_plus_eps(const std::vector<Int>& minpoly, const Rat& lo, const Rat& hi);
  static Rho algebraic_minus_eps(const std::vector<Int>& minpoly, const Rat& lo, const Rat& hi);
  static Rho infinite();

  RhoKind kind() const;

  /// True for the kinds with a nontrivial kernel (Rational, Algebraic),
  /// i.e. rho is algebraic over the integers.
  bool has_kernel() const;

  Sign sign(const LinOp& op) const;
  Cmp compare(const LinOp& a, const LinOp& b) const;

  /// Canonical representative of op in Z[r]/Ker: for kernel kinds, clear
  /// negative exponents, take the remainder modulo the minimal polynomial
  /// and rescale by the least positive integer giving integer coefficients.
  /// Other kinds have trivial kernel and return op unchanged.
  LinOp reduce(const LinOp& op) const;

  bool is_kernel(const LinOp& op) const { return sign(op) == Sign::Zero; }

  /// Minimal-polynomial coefficients (constant first, primitive, positive
  /// lead) for kernel and eps kinds; empty for Infinite.
  std::vector<Int> modulus_coeffs() const;
  std::pair<Rat, Rat> interval() const;

  struct Impl;

 private:
  explicit Rho(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace multval

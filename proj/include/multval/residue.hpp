#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multval/qpoly.hpp"
#include "multval/rational.hpp"

namespace multval {

/// Rational function in the symbol s over Q, stored as coprime
/// numerator/denominator with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;  // zero
  RatFunc(Rat q) : num_(QPoly::constant(std::move(q))), den_(QPoly::constant(1)) {}
  RatFunc(QPoly n, QPoly d);
  static RatFunc s() { return RatFunc(QPoly::x(), QPoly::constant(1)); }

  bool is_zero() const { return num_.is_zero(); }
  const QPoly& numer() const { return num_; }
  const QPoly& denom() const { return den_; }
  std::optional<Rat> as_rational() const;

  bool operator==(const RatFunc& o) const = default;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  RatFunc shifted(const Rat& k) const;  // substitute s -> s + k

 private:
  QPoly num_;
  QPoly den_ = QPoly::constant(1);
};

/// The residue difference field (Q, sigma_bar = identity). Fails Axiom 2 for
/// every d, which exercises the solver-failure paths.
struct QField {
  using Elem = Rat;
  static constexpr const char* id = "rational-id";

  static Elem zero() { return Rat(0); }
  static Elem one() { return Rat(1); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a);
  static Elem sigma(const Elem& a) { return a; }
  static Elem sigma_inv(const Elem& a) { return a; }
  static Elem sigma_pow(const Elem& a, long) { return a; }
  static Elem from_rat(const Rat& q) { return q; }
  static Elem from_int(long n) { return Rat(n); }

  static std::optional<Elem> solve_linear(const std::vector<Elem>& alphas);
  static std::optional<Elem> nonfixed_witness(long d);
  static Elem test_candidate(size_t k);
  static std::string str(const Elem& a);
};

/// The residue difference field (Q(s), sigma_bar: s -> s + 1). Satisfies
/// Axiom 2 with witness s; solve_linear searches polynomial solutions up to a
/// fixed degree bound.
struct QsField {
  using Elem = RatFunc;
  static constexpr const char* id = "rational-shift";

  static Elem zero() { return RatFunc(); }
  static Elem one() { return RatFunc(Rat(1)); }
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a);
  static Elem sigma(const Elem& a) { return a.shifted(Rat(1)); }
  static Elem sigma_inv(const Elem& a) { return a.shifted(Rat(-1)); }
  static Elem sigma_pow(const Elem& a, long k) { return a.shifted(Rat(k)); }
  static Elem from_rat(const Rat& q) { return RatFunc(q); }
  static Elem from_int(long n) { return RatFunc(Rat(n)); }

  static std::optional<Elem> solve_linear(const std::vector<Elem>& alphas);
  static std::optional<Elem> nonfixed_witness(long d);
  static Elem test_candidate(size_t k);
  static std::string str(const Elem& a);
};

std::string qpoly_str(const QPoly& p, const std::string& var);

}  // namespace multval

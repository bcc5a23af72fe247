#pragma once

#include "multval/rho.hpp"

namespace multval {

/// Element of the prime-model value group: an equivalence class [(num, den)]
/// of operator fractions with den > 0, stored in normalized form. For
/// algebraic rho the denominator is rationalized to a positive integer.
struct GammaElem {
  LinOp num;
  LinOp den = LinOp::one();

  bool operator==(const GammaElem& o) const = default;
  bool is_zero() const { return num.is_zero(); }
};

namespace gamma {

GammaElem zero();

/// Class of (g, L); requires sign(L) = Positive.
GammaElem frac(const Rho& rho, const LinOp& g, const LinOp& L);

GammaElem add(const Rho& rho, const GammaElem& a, const GammaElem& b);
GammaElem neg(const GammaElem& a);
GammaElem sub(const Rho& rho, const GammaElem& a, const GammaElem& b);

Cmp compare(const Rho& rho, const GammaElem& a, const GammaElem& b);
Sign sign_of(const Rho& rho, const GammaElem& a);
bool less(const Rho& rho, const GammaElem& a, const GammaElem& b);
bool equal(const Rho& rho, const GammaElem& a, const GammaElem& b);

GammaElem scalar_mul(const Rho& rho, const LinOp& op, const GammaElem& a);

/// Unique delta with scalar_mul(op, delta) == a; requires reduce(op) != 0.
GammaElem divide(const Rho& rho, const GammaElem& a, const LinOp& op);

GammaElem sigma(const Rho& rho, const GammaElem& a);
GammaElem sigma_inv(const Rho& rho, const GammaElem& a);

GammaElem of_int(long n);
GammaElem of_rat(const Rat& q);

}  // namespace gamma

}  // namespace multval

#include "multval/gamma.hpp"

namespace multval::gamma {

namespace {

// (g, L) ~ (r^k g, r^k L): clear negative exponents from both at once.
std::pair<QPoly, QPoly> clear_pair(const LinOp& g, const LinOp& L) {
  int m = std::min(g.is_zero() ? 0 : g.min_exp(), L.min_exp());
  int k = m < 0 ? -m : 0;
  return {g.shifted(k).cleared().first, L.shifted(k).cleared().first};
}

GammaElem normalize_kernel(const Rho& rho, const LinOp& gin, const LinOp& lin) {
  if (rho.is_kernel(gin)) return zero();
  auto [gq, lq] = clear_pair(gin, lin);
  auto [lo, hi] = rho.interval();
  QPoly f = lo == hi ? QPoly({-lo, Rat(1)}) : from_int_coeffs(rho.modulus_coeffs());
  gq = QPoly::rem(gq, f);
  lq = QPoly::rem(lq, f);
  // Invert the denominator modulo f. A nonconstant gcd means f was not
  // minimal; it cannot vanish at rho here (the denominator does not), so
  // strip it and retry against the cofactor, which still has rho as a root.
  QPoly numq;
  for (;;) {
    auto e = QPoly::egcd(lq, f);
    if (e.g.degree() == 0) {
      numq = QPoly::rem(gq * e.u, f);
      break;
    }
    f = QPoly::divmod(f, e.g).first;
    gq = QPoly::rem(gq, f);
    lq = QPoly::rem(lq, f);
  }
  if (numq.is_zero()) return zero();
  Int scale(1);
  for (const auto& q : numq.coeffs()) scale = lcm(scale, den(q));
  LinOp n = LinOp::from_qpoly_num(numq.scaled(Rat(scale)));
  Int g0 = gcd(n.content(), scale);
  if (g0 > 1) {
    std::vector<std::pair<int, Int>> terms;
    for (const auto& [e2, c] : n.terms()) terms.emplace_back(e2, c / g0);
    n = LinOp::from_terms(std::move(terms));
    scale /= g0;
  }
  return GammaElem{std::move(n), LinOp::constant(scale)};
}

LinOp exact_div(const LinOp& a, const QPoly& d) {
  auto [q, r] = QPoly::divmod(a.cleared().first, d);
  (void)r;
  Int scale(1);
  for (const auto& c : q.coeffs()) scale = lcm(scale, den(c));
  LinOp out = LinOp::from_qpoly_num(q.scaled(Rat(scale)));
  int m = a.is_zero() ? 0 : std::min(0, a.min_exp());
  return out.shifted(m);
}

GammaElem normalize_free(const Rho& rho, const LinOp& gin, const LinOp& lin) {
  if (gin.is_zero()) return zero();
  int a = gin.min_exp(), b = lin.min_exp();
  LinOp g0 = gin.shifted(-a), l0 = lin.shifted(-b);
  // full Z[x] gcd: primitive part of the monic gcd times the content gcd
  QPoly gmonic = QPoly::gcd(g0.cleared().first, l0.cleared().first);
  Int cont = gcd(g0.content(), l0.content());
  QPoly G = from_int_coeffs(gmonic.primitive_int().first).scaled(Rat(cont));
  GammaElem out;
  out.num = exact_div(g0, G).shifted(a - b);
  out.den = exact_div(l0, G);
  if (rho.sign(out.den) == Sign::Negative) {
    out.num = -out.num;
    out.den = -out.den;
  }
  return out;
}

GammaElem normalize(const Rho& rho, const LinOp& g, const LinOp& L) {
  if (rho.has_kernel()) return normalize_kernel(rho, g, L);
  return normalize_free(rho, g, L);
}

}  // namespace

GammaElem zero() { return GammaElem{LinOp::zero(), LinOp::one()}; }

GammaElem frac(const Rho& rho, const LinOp& g, const LinOp& L) {
  if (rho.sign(L) != Sign::Positive)
    throw Error("NonPositiveDenominator", "fraction denominator must be positive");
  return normalize(rho, g, L);
}

GammaElem add(const Rho& rho, const GammaElem& a, const GammaElem& b) {
  return normalize(rho, b.den * a.num + a.den * b.num, a.den * b.den);
}

GammaElem neg(const GammaElem& a) { return GammaElem{-a.num, a.den}; }

GammaElem sub(const Rho& rho, const GammaElem& a, const GammaElem& b) {
  return add(rho, a, neg(b));
}

Cmp compare(const Rho& rho, const GammaElem& a, const GammaElem& b) {
  return cmp_from_sign(rho.sign(b.den * a.num - a.den * b.num));
}

Sign sign_of(const Rho& rho, const GammaElem& a) { return rho.sign(a.num); }

bool less(const Rho& rho, const GammaElem& a, const GammaElem& b) {
  return compare(rho, a, b) == Cmp::Less;
}

bool equal(const Rho& rho, const GammaElem& a, const GammaElem& b) {
  return compare(rho, a, b) == Cmp::Equal;
}

GammaElem scalar_mul(const Rho& rho, const LinOp& op, const GammaElem& a) {
  return normalize(rho, op * a.num, a.den);
}

GammaElem divide(const Rho& rho, const GammaElem& a, const LinOp& op) {
  if (rho.reduce(op).is_zero())
    throw Error("ZeroOperator", "division by an operator in the kernel");
  if (rho.sign(op) == Sign::Negative) return normalize(rho, -a.num, -(a.den * op));
  return normalize(rho, a.num, a.den * op);
}

GammaElem sigma(const Rho& rho, const GammaElem& a) {
  return scalar_mul(rho, LinOp::rho(), a);
}

GammaElem sigma_inv(const Rho& rho, const GammaElem& a) {
  return divide(rho, a, LinOp::rho());
}

GammaElem of_int(long n) { return GammaElem{LinOp::constant(Int(n)), LinOp::one()}; }

GammaElem of_rat(const Rat& q) {
  return GammaElem{LinOp::constant(num(q)), LinOp::constant(den(q))};
}

}  // namespace multval::gamma

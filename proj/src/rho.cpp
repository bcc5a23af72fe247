#include "multval/rho.hpp"

#include <mutex>

namespace multval {

namespace {

struct Interval {
  Rat lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval ieval(const QPoly& p, const Interval& x) {
  Interval acc{Rat(0), Rat(0)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = imul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace

struct Rho::Impl {
  RhoKind kind;
  QPoly modulus;  // base minimal polynomial (kernel and eps kinds)
  Rat lo, hi;     // isolating interval for the base root; lo == hi: rational root

  mutable std::mutex mu;
  mutable Rat cur_lo, cur_hi;  // refined interval, shrinks monotonically

  bool rational_root() const { return lo == hi; }

  // Sign of p at the isolated base root, exact.
  Sign sign_at_root(const QPoly& p) const {
    if (rational_root()) return sign_of_int(sgn(p.eval(lo)));
    QPoly r = QPoly::rem(p, modulus);
    if (r.is_zero()) return Sign::Zero;
    QPoly g = QPoly::gcd(r, modulus);
    if (g.degree() >= 1 && sgn(g.eval(lo)) * sgn(g.eval(hi)) < 0) return Sign::Zero;
    // r does not vanish at the root: bisect until the enclosure is clear of 0.
    std::lock_guard<std::mutex> lock(mu);
    int side = sgn(modulus.eval(cur_lo));
    for (;;) {
      Interval e = ieval(r, {cur_lo, cur_hi});
      if (sgn(e.lo) > 0) return Sign::Positive;
      if (sgn(e.hi) < 0) return Sign::Negative;
      Rat mid = (cur_lo + cur_hi) / 2;
      int sm = sgn(modulus.eval(mid));
      if (sm == 0) {
        // the root itself is the midpoint
        return sign_of_int(sgn(r.eval(mid)));
      }
      if (sm == side)
        cur_lo = mid;
      else
        cur_hi = mid;
    }
  }
};

namespace {

std::shared_ptr<Rho::Impl> make_impl() { return std::make_shared<Rho::Impl>(); }

// Validates and normalizes an algebraic base: primitive squarefree minimal
// polynomial with positive lead, isolating exactly one root in [lo, hi].
// Collapses the interval when the root is a rational endpoint or 1.
std::shared_ptr<Rho::Impl> make_algebraic_base(const std::vector<Int>& coeffs, Rat lo,
                                               Rat hi, bool require_gt_one) {
  QPoly raw = from_int_coeffs(coeffs);
  if (raw.degree() < 1) throw Error("InvalidRhoSpec", "minimal polynomial must be nonconstant");
  auto [prim, factor] = raw.primitive_int();
  QPoly p = from_int_coeffs(prim);
  if (QPoly::gcd(p, p.derivative()).degree() != 0)
    throw Error("InvalidRhoSpec", "minimal polynomial must be squarefree");
  if (lo > hi) throw Error("InvalidRhoSpec", "empty isolating interval");

  if (lo == hi) {
    if (p.eval(lo) != 0) throw Error("InvalidRhoSpec", "degenerate interval is not a root");
  } else if (p.eval(lo) == 0) {
    if (p.count_roots(lo, hi) != 0)
      throw Error("InvalidRhoSpec", "interval isolates more than one root");
    hi = lo;
  } else if (p.eval(hi) == 0) {
    if (p.count_roots(lo, hi) != 1)
      throw Error("InvalidRhoSpec", "interval isolates more than one root");
    lo = hi;
  } else {
    if (p.count_roots(lo, hi) != 1)
      throw Error("InvalidRhoSpec", "interval must isolate exactly one root");
  }

  // The root must be >= 1 (> 1 when approached from below).
  if (lo == hi) {
    if (require_gt_one ? !(lo > 1) : !(lo >= 1))
      throw Error("InvalidRhoSpec", require_gt_one ? "root must be > 1" : "root must be >= 1");
  } else if (lo < 1) {
    if (p.eval(Rat(1)) == 0) {
      if (require_gt_one) throw Error("InvalidRhoSpec", "root must be > 1");
      lo = hi = Rat(1);
    } else if (p.count_roots(Rat(1), hi) == 1) {
      lo = Rat(1);
    } else {
      throw Error("InvalidRhoSpec", "isolated root must be >= 1");
    }
  }

  auto impl = make_impl();
  impl->modulus = p;
  impl->lo = impl->cur_lo = lo;
  impl->hi = impl->cur_hi = hi;
  return impl;
}

}  // namespace

Rho Rho::rational(Int p, Int q) {
  if (q <= 0) throw Error("InvalidRhoSpec", "denominator must be positive");
  Int g = gcd(p, q);
  p /= g;
  q /= g;
  if (p < q) throw Error("InvalidRhoSpec", "rational rho must be >= 1");
  auto impl = make_impl();
  impl->kind = RhoKind::Rational;
  impl->modulus = QPoly({Rat(-p), Rat(q)});
  impl->lo = impl->hi = impl->cur_lo = impl->cur_hi = Rat(p, q);
  return Rho(impl);
}

Rho Rho::algebraic(const std::vector<Int>& minpoly, const Rat& lo, const Rat& hi) {
  auto impl = make_algebraic_base(minpoly, lo, hi, false);
  impl->kind = RhoKind::Algebraic;
  return Rho(impl);
}

Rho Rho::algebraic_plus_eps(const std::vector<Int>& minpoly, const Rat& lo, const Rat& hi) {
  auto impl = make_algebraic_base(minpoly, lo, hi, false);
  impl->kind = RhoKind::AlgebraicPlusEps;
  return Rho(impl);
}

Rho Rho::algebraic_minus_eps(const std::vector<Int>& minpoly, const Rat& lo, const Rat& hi) {
  auto impl = make_algebraic_base(minpoly, lo, hi, true);
  impl->kind = RhoKind::AlgebraicMinusEps;
  return Rho(impl);
}

Rho Rho::infinite() {
  auto impl = make_impl();
  impl->kind = RhoKind::Infinite;
  return Rho(impl);
}

RhoKind Rho::kind() const { return impl_->kind; }

bool Rho::has_kernel() const {
  return impl_->kind == RhoKind::Rational || impl_->kind == RhoKind::Algebraic;
}

Sign Rho::sign(const LinOp& op) const {
  if (op.is_zero()) return Sign::Zero;
  switch (impl_->kind) {
    case RhoKind::Rational: {
      // exact evaluation at p/q (>= 1, so inverses are fine)
      Rat x = impl_->lo, acc(0);
      for (const auto& [e, c] : op.terms()) {
        Rat p = 1;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= x;
        acc += (e < 0 ? Rat(c) / p : Rat(c) * p);
      }
      return sign_of_int(sgn(acc));
    }
    case RhoKind::Algebraic: {
      auto [p, m] = op.cleared();
      (void)m;  // r^m is a positive unit
      return impl_->sign_at_root(p);
    }
    case RhoKind::AlgebraicPlusEps:
    case RhoKind::AlgebraicMinusEps: {
      auto [p, m] = op.cleared();
      (void)m;
      // Taylor cascade at the base: the first nonvanishing derivative decides,
      // with alternating orientation below the base.
      bool below = impl_->kind == RhoKind::AlgebraicMinusEps;
      QPoly d = p;
      for (int k = 0; !d.is_zero(); ++k, d = d.derivative()) {
        Sign s = impl_->sign_at_root(d);
        if (s != Sign::Zero) return (below && (k % 2 == 1)) ? negate(s) : s;
      }
      return Sign::Zero;  // unreachable for nonzero op
    }
    case RhoKind::Infinite:
      return sign_of_int(sgn(op.lead_coeff()));
  }
  return Sign::Zero;
}

Cmp Rho::compare(const LinOp& a, const LinOp& b) const { return cmp_from_sign(sign(a - b)); }

LinOp Rho::reduce(const LinOp& op) const {
  if (!has_kernel() || op.is_zero()) return op;
  auto [p, m] = op.cleared();
  (void)m;
  // A rational root makes the kernel the linear ideal (q r - p), whatever
  // degree the presented polynomial had.
  QPoly mod = impl_->rational_root() ? QPoly({-impl_->lo, Rat(1)}) : impl_->modulus;
  QPoly r = QPoly::rem(p, mod);
  if (r.is_zero()) return LinOp::zero();
  if (!impl_->rational_root()) {
    QPoly g = QPoly::gcd(r, mod);
    if (g.degree() >= 1 && sgn(g.eval(impl_->lo)) * sgn(g.eval(impl_->hi)) < 0)
      return LinOp::zero();
  }
  Int scale(1);
  for (const auto& q : r.coeffs()) scale = lcm(scale, den(q));
  return LinOp::from_qpoly_num(r.scaled(Rat(scale)));
}

std::vector<Int> Rho::modulus_coeffs() const {
  if (impl_->kind == RhoKind::Infinite) return {};
  if (impl_->rational_root() && has_kernel())
    return QPoly({-impl_->lo, Rat(1)}).primitive_int().first;
  return impl_->modulus.primitive_int().first;
}

std::pair<Rat, Rat> Rho::interval() const { return {impl_->lo, impl_->hi}; }

}  // namespace multval

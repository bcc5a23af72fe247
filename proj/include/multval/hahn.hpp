#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "multval/gamma.hpp"

namespace multval {

/// Value group element extended with infinity (the valuation of 0).
struct Val {
  std::optional<GammaElem> g;
  static Val inf() { return Val{}; }
  static Val finite(GammaElem x) { return Val{std::move(x)}; }
  bool is_inf() const { return !g.has_value(); }
  const GammaElem& get() const {
    if (is_inf()) throw Error("InfiniteValuation", "expected a finite valuation");
    return *g;
  }
  bool operator==(const Val&) const = default;
};

inline Cmp vcmp(const Rho& rho, const Val& a, const Val& b) {
  if (a.is_inf()) return b.is_inf() ? Cmp::Equal : Cmp::Greater;
  if (b.is_inf()) return Cmp::Less;
  return gamma::compare(rho, *a.g, *b.g);
}

namespace hahn {

template <class F>
struct Term {
  GammaElem exp;
  typename F::Elem coef;
  bool operator==(const Term&) const = default;
};

/// Finite-support twisted Hahn series: terms with strictly increasing
/// exponents and nonzero coefficients; empty list is 0.
template <class F>
struct Series {
  std::vector<Term<F>> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Series&) const = default;
};

template <class F>
Series<F> make(const Rho& rho, std::vector<Term<F>> ts) {
  std::stable_sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
    return gamma::less(rho, a.exp, b.exp);
  });
  Series<F> out;
  for (auto& t : ts) {
    if (!out.terms.empty() && gamma::equal(rho, out.terms.back().exp, t.exp)) {
      out.terms.back().coef = F::add(out.terms.back().coef, t.coef);
      if (F::is_zero(out.terms.back().coef)) out.terms.pop_back();
    } else if (!F::is_zero(t.coef)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

template <class F>
Series<F> zero() {
  return Series<F>{};
}

template <class F>
Series<F> monomial(const typename F::Elem& c, const GammaElem& g) {
  if (F::is_zero(c)) throw Error("ZeroCoefficient", "monomial coefficient must be nonzero");
  return Series<F>{{{g, c}}};
}

template <class F>
Series<F> from_elem(const typename F::Elem& c) {
  if (F::is_zero(c)) return zero<F>();
  return Series<F>{{{gamma::zero(), c}}};
}

template <class F>
Series<F> one() {
  return from_elem<F>(F::one());
}

template <class F>
Val valuation(const Series<F>& x) {
  if (x.is_zero()) return Val::inf();
  return Val::finite(x.terms.front().exp);
}

template <class F>
const typename F::Elem& lead_coeff(const Series<F>& x) {
  if (x.is_zero()) throw Error("ZeroSeries", "zero series has no leading coefficient");
  return x.terms.front().coef;
}

template <class F>
Series<F> add(const Rho& rho, const Series<F>& x, const Series<F>& y) {
  Series<F> out;
  size_t i = 0, j = 0;
  while (i < x.terms.size() || j < y.terms.size()) {
    if (j == y.terms.size()) {
      out.terms.push_back(x.terms[i++]);
    } else if (i == x.terms.size()) {
      out.terms.push_back(y.terms[j++]);
    } else {
      Cmp c = gamma::compare(rho, x.terms[i].exp, y.terms[j].exp);
      if (c == Cmp::Less) {
        out.terms.push_back(x.terms[i++]);
      } else if (c == Cmp::Greater) {
        out.terms.push_back(y.terms[j++]);
      } else {
        auto coef = F::add(x.terms[i].coef, y.terms[j].coef);
        if (!F::is_zero(coef)) out.terms.push_back({x.terms[i].exp, std::move(coef)});
        ++i, ++j;
      }
    }
  }
  return out;
}

template <class F>
Series<F> neg(const Series<F>& x) {
  Series<F> out(x);
  for (auto& t : out.terms) t.coef = F::neg(t.coef);
  return out;
}

template <class F>
Series<F> sub(const Rho& rho, const Series<F>& x, const Series<F>& y) {
  return add(rho, x, neg(y));
}

template <class F>
Series<F> mul(const Rho& rho, const Series<F>& x, const Series<F>& y) {
  std::vector<Term<F>> prod;
  prod.reserve(x.terms.size() * y.terms.size());
  for (const auto& a : x.terms)
    for (const auto& b : y.terms)
      prod.push_back({gamma::add(rho, a.exp, b.exp), F::mul(a.coef, b.coef)});
  return make(rho, std::move(prod));
}

template <class F>
Series<F> scale(const Series<F>& x, const typename F::Elem& c) {
  if (F::is_zero(c)) return zero<F>();
  Series<F> out(x);
  for (auto& t : out.terms) t.coef = F::mul(t.coef, c);
  return out;
}

template <class F>
Series<F> sigma(const Rho& rho, const Series<F>& x) {
  Series<F> out;
  out.terms.reserve(x.terms.size());
  for (const auto& t : x.terms)
    out.terms.push_back({gamma::sigma(rho, t.exp), F::sigma(t.coef)});
  return out;  // exponent map is order-preserving
}

template <class F>
Series<F> sigma_inv(const Rho& rho, const Series<F>& x) {
  Series<F> out;
  out.terms.reserve(x.terms.size());
  for (const auto& t : x.terms)
    out.terms.push_back({gamma::sigma_inv(rho, t.exp), F::sigma_inv(t.coef)});
  return out;
}

template <class F>
Series<F> sigma_pow(const Rho& rho, Series<F> x, long k) {
  for (; k > 0; --k) x = sigma(rho, x);
  for (; k < 0; ++k) x = sigma_inv(rho, x);
  return x;
}

template <class F>
typename F::Elem residue_pi(const Rho& rho, const Series<F>& x) {
  if (x.is_zero()) return F::zero();
  if (gamma::sign_of(rho, x.terms.front().exp) == Sign::Negative)
    throw Error("NegativeValuation", "residue of an element outside the valuation ring");
  for (const auto& t : x.terms)
    if (t.exp.is_zero() || gamma::sign_of(rho, t.exp) == Sign::Zero) return t.coef;
  return F::zero();
}

template <class F>
Series<F> truncate(const Rho& rho, const Series<F>& x, const Val& cutoff) {
  if (cutoff.is_inf()) return x;
  Series<F> out;
  for (const auto& t : x.terms) {
    if (gamma::compare(rho, t.exp, cutoff.get()) == Cmp::Greater) break;
    out.terms.push_back(t);
  }
  return out;
}

/// Finite inverse up to a cutoff: v(x*y - 1) > cutoff and v(y) = -v(x).
template <class F>
Series<F> invert(const Rho& rho, const Series<F>& x, const GammaElem& cutoff) {
  if (x.is_zero()) throw Error("DivisionByZero", "inverse of the zero series");
  Series<F> y0 = monomial<F>(F::inv(x.terms.front().coef), gamma::neg(x.terms.front().exp));
  Series<F> r = sub(rho, one<F>(), mul(rho, x, y0));  // v(r) > 0
  Series<F> acc = one<F>();
  Series<F> pw = r;
  while (!pw.is_zero() &&
         gamma::compare(rho, pw.terms.front().exp, cutoff) != Cmp::Greater) {
    acc = add(rho, acc, pw);
    pw = mul(rho, pw, r);
  }
  return mul(rho, y0, acc);
}

template <class F>
Series<F> pow(const Rho& rho, const Series<F>& x, long e) {
  if (e < 0) throw Error("InvalidArgument", "negative power of a general series");
  Series<F> acc = one<F>();
  for (long i = 0; i < e; ++i) acc = mul(rho, acc, x);
  return acc;
}

/// x^e for a single-term series, any integer e.
template <class F>
Series<F> pow_monomial(const Rho& rho, const Series<F>& x, long e) {
  if (x.terms.size() != 1) throw Error("InvalidArgument", "not a monomial");
  if (e >= 0) return pow(rho, x, e);
  Series<F> inv = monomial<F>(F::inv(x.terms.front().coef), gamma::neg(x.terms.front().exp));
  return pow(rho, inv, -e);
}

template <class F>
bool equal(const Rho& rho, const Series<F>& x, const Series<F>& y) {
  return sub(rho, x, y).is_zero();
}

}  // namespace hahn

}  // namespace multval

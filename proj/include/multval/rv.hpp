#pragma once

#include "multval/hahn.hpp"

namespace multval {

namespace rv {

/// Leading-term datum: infinity (for 0) or (valuation, leading coefficient).
template <class F>
struct RVElem {
  bool infinite = true;
  GammaElem gamma;
  typename F::Elem lead = F::zero();

  static RVElem inf() { return RVElem{}; }
  static RVElem finite(GammaElem g, typename F::Elem c) {
    return RVElem{false, std::move(g), std::move(c)};
  }
  bool operator==(const RVElem&) const = default;
};

template <class F>
RVElem<F> of(const hahn::Series<F>& x) {
  if (x.is_zero()) return RVElem<F>::inf();
  return RVElem<F>::finite(x.terms.front().exp, x.terms.front().coef);
}

template <class F>
Val valuation(const RVElem<F>& r) {
  return r.infinite ? Val::inf() : Val::finite(r.gamma);
}

template <class F>
RVElem<F> mul(const Rho& rho, const RVElem<F>& a, const RVElem<F>& b) {
  if (a.infinite || b.infinite) return RVElem<F>::inf();
  return RVElem<F>::finite(gamma::add(rho, a.gamma, b.gamma), F::mul(a.lead, b.lead));
}

template <class F>
RVElem<F> inv(const RVElem<F>& a) {
  if (a.infinite) throw Error("InfinityInverse", "inverse of rv(0)");
  return RVElem<F>::finite(gamma::neg(a.gamma), F::inv(a.lead));
}

/// Partial addition (Lemma 9.3): defined when the leads at the minimal
/// valuation do not cancel; nullopt otherwise.
template <class F>
std::optional<RVElem<F>> sum(const Rho& rho, const std::vector<RVElem<F>>& rs) {
  std::optional<GammaElem> vmin;
  for (const auto& r : rs) {
    if (r.infinite) continue;
    if (!vmin || gamma::less(rho, r.gamma, *vmin)) vmin = r.gamma;
  }
  if (!vmin) return RVElem<F>::inf();  // empty sum or all zeros
  typename F::Elem lead = F::zero();
  for (const auto& r : rs)
    if (!r.infinite && gamma::equal(rho, r.gamma, *vmin)) lead = F::add(lead, r.lead);
  if (F::is_zero(lead)) return std::nullopt;
  return RVElem<F>::finite(*vmin, std::move(lead));
}

template <class F>
RVElem<F> sigma(const Rho& rho, const RVElem<F>& r) {
  if (r.infinite) return r;
  return RVElem<F>::finite(gamma::sigma(rho, r.gamma), F::sigma(r.lead));
}

/// The canonical cross-section s(gamma) = t^gamma.
template <class F>
hahn::Series<F> cross_section(const GammaElem& g) {
  return hahn::monomial<F>(F::one(), g);
}

/// sigma_vec(x)^I for the operator tau = sum_j I[j] sigma^j acting
/// multiplicatively on a monomial (entries of I may be negative).
template <class F>
hahn::Series<F> operator_action(const Rho& rho, const LinOp& tau,
                                const hahn::Series<F>& x) {
  hahn::Series<F> acc = hahn::one<F>();
  for (const auto& [j, c] : tau.terms()) {
    hahn::Series<F> factor = hahn::sigma_pow(rho, x, j);
    acc = hahn::mul(rho, acc, hahn::pow_monomial(rho, factor, long(c)));
  }
  return acc;
}

enum class WitnessStatus { Verified, NotApplicable };

template <class F>
struct Axiom4Witness {
  hahn::Series<F> value;
  WitnessStatus status;
};

/// Axiom 4 witness at gamma: t^gamma, checked against the minimal-polynomial
/// operator P^sigma when rho is algebraic ((P^sigma) t^gamma = 1 exactly).
/// Non-algebraic kinds need no Axiom 4 and return the cross-section as is.
template <class F>
Axiom4Witness<F> axiom4_witness(const Rho& rho, const GammaElem& g) {
  hahn::Series<F> w = cross_section<F>(g);
  if (!rho.has_kernel()) return {w, WitnessStatus::NotApplicable};
  std::vector<std::pair<int, Int>> terms;
  auto coeffs = rho.modulus_coeffs();
  for (size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) terms.emplace_back(int(j), coeffs[j]);
  LinOp psigma = LinOp::from_terms(std::move(terms));
  if (!hahn::equal(rho, operator_action(rho, psigma, w), hahn::one<F>()))
    throw Error("WitnessCheckFailed", "(P^sigma) t^gamma evaluated away from 1");
  return {w, WitnessStatus::Verified};
}

/// The coding of Proposition 11.8: (gamma, c) -> rv(s(gamma) c), with the
/// (0, 0) sentinel mapping to infinity.
template <class F>
RVElem<F> encode(const GammaElem& g, const typename F::Elem& c) {
  if (F::is_zero(c)) {
    if (g.is_zero()) return RVElem<F>::inf();
    throw Error("ZeroCoefficient", "only (0, 0) encodes infinity");
  }
  return RVElem<F>::finite(g, c);
}

template <class F>
std::pair<GammaElem, typename F::Elem> decode(const RVElem<F>& r) {
  if (r.infinite) throw Error("InfinityDecode", "cannot decode rv(0)");
  return {r.gamma, r.lead};
}

}  // namespace rv

}  // namespace multval

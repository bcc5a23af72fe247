#pragma once

#include <string>
#include <variant>

#include "multval/sigma_poly.hpp"

namespace multval {

namespace hensel {

/// Witness of Definition 5.1: the unique gamma, the set of unit indices
/// attaining the minimum in (i), and strictness (singleton minimizer).
struct Config {
  GammaElem gamma;
  std::vector<int> minimizing;
  bool strict = false;
  int i_value = 0;  // the minimizer when strict, else the smallest one
};

enum class LiftStatus { RootFound, PrecisionReached, SolverFailed, NotInConfiguration };

/// The residue equation 1 + sum_j alphas[j] sigma^j(x) = 0 the residue field
/// could not solve (the Axiom 3 obligation).
template <class F>
struct SolverFailure {
  std::vector<typename F::Elem> alphas;
};

template <class F>
using StepResult = std::variant<hahn::Series<F>, SolverFailure<F>>;

struct TraceEntry {
  GammaElem gamma;  // correction valuation of this step
  Val v_after;      // v(P(b)) after the step
  bool strict = false;
  int i_value = 0;
};

template <class F>
struct LiftReport {
  hahn::Series<F> final;
  LiftStatus status = LiftStatus::NotInConfiguration;
  std::vector<TraceEntry> trace;
  std::optional<SolverFailure<F>> failure;
};

namespace detail {

template <class F>
struct TaylorData {
  std::vector<MultiIndex> indices;                     // |I| >= 1, nonzero P_(I)
  std::map<MultiIndex, hahn::Series<F>> values;        // P_(I)(a)
};

template <class F>
TaylorData<F> taylor_at(const Rho& rho, const sigma_poly::SigmaPoly<F>& p,
                        const hahn::Series<F>& a) {
  TaylorData<F> out;
  for (auto& idx : sigma_poly::indices_up_to(p.nvars(), sigma_poly::degree(p))) {
    auto pi = sigma_poly::taylor_coeff(p, idx);
    if (pi.is_zero()) continue;
    out.values.emplace(idx, sigma_poly::eval(rho, pi, a));
    out.indices.push_back(std::move(idx));
  }
  return out;
}

inline GammaElem weight(const Rho& rho, const MultiIndex& idx, const GammaElem& g) {
  std::vector<long> iv(idx.begin(), idx.end());
  return gamma::scalar_mul(rho, rho_length(iv), g);
}

}  // namespace detail

/// Definition 5.1 check. Returns the configuration witness, or nullopt when
/// (P, a) is not in sigma-hensel configuration (constants, roots, or no
/// admissible gamma).
template <class F>
std::optional<Config> config(const Rho& rho, const sigma_poly::SigmaPoly<F>& p,
                             const hahn::Series<F>& a) {
  if (sigma_poly::is_constant(p)) return std::nullopt;
  hahn::Series<F> pa = sigma_poly::eval(rho, p, a);
  if (pa.is_zero()) return std::nullopt;
  GammaElem vpa = hahn::valuation(pa).get();

  auto data = detail::taylor_at(rho, p, a);
  int n = p.order_bound;
  auto unit_val = [&](int j) -> Val {
    MultiIndex idx(p.nvars(), 0);
    idx[size_t(j)] = 1;
    auto it = data.values.find(idx);
    if (it == data.values.end()) return Val::inf();
    return hahn::valuation(it->second);
  };

  std::optional<Config> found;
  for (int i = 0; i <= n; ++i) {
    Val vi = unit_val(i);
    if (vi.is_inf()) continue;
    GammaElem g = gamma::divide(rho, gamma::sub(rho, vpa, vi.get()),
                                LinOp::monomial(i, 1));
    // (i): v(P(a)) <= v(P_(j)(a)) + rho^j g for every unit index j
    bool ok = true;
    std::vector<int> minimizing;
    for (int j = 0; j <= n && ok; ++j) {
      Val vj = unit_val(j);
      if (vj.is_inf()) continue;
      GammaElem w = gamma::add(rho, vj.get(),
                               gamma::scalar_mul(rho, LinOp::monomial(j, 1), g));
      switch (gamma::compare(rho, vpa, w)) {
        case Cmp::Greater: ok = false; break;
        case Cmp::Equal: minimizing.push_back(j); break;
        case Cmp::Less: break;
      }
    }
    if (!ok) continue;
    // (ii): strictly increasing weights along the product order
    for (size_t ji = 0; ji < data.indices.size() && ok; ++ji) {
      const MultiIndex& J = data.indices[ji];
      Val vJ = hahn::valuation(data.values.at(J));
      for (size_t li = 0; li < data.indices.size() && ok; ++li) {
        const MultiIndex& L = data.indices[li];
        if (J == L || !mi_leq(J, L)) continue;
        if (vJ.is_inf()) {
          ok = false;  // w_J = infinity can never be strictly below w_L
          break;
        }
        Val vL = hahn::valuation(data.values.at(L));
        if (vL.is_inf()) continue;
        GammaElem wj = gamma::add(rho, vJ.get(), detail::weight(rho, J, g));
        GammaElem wl = gamma::add(rho, vL.get(), detail::weight(rho, L, g));
        if (gamma::compare(rho, wj, wl) != Cmp::Less) ok = false;
      }
    }
    if (!ok) continue;
    if (found) {
      // Remark 5.2: gamma is unique across all witnesses
      if (!gamma::equal(rho, found->gamma, g))
        throw Error("GammaNotUnique", "distinct hensel gammas for the same point");
      continue;
    }
    found = Config{g, minimizing, minimizing.size() == 1, minimizing.front()};
  }
  return found;
}

/// One Newton step (Lemma 5.4 Step 1) with epsilon = t^gamma: solves the
/// residue equation built from leading terms and returns b = a + u t^gamma,
/// or the unsolved equation.
template <class F>
StepResult<F> step(const Rho& rho, const sigma_poly::SigmaPoly<F>& p,
                   const hahn::Series<F>& a, const Config& cfg) {
  hahn::Series<F> pa = sigma_poly::eval(rho, p, a);
  if (pa.is_zero()) throw Error("AlreadyRoot", "no step from an exact root");
  GammaElem vpa = hahn::valuation(pa).get();
  const typename F::Elem& lead_pa = hahn::lead_coeff(pa);

  int n = p.order_bound;
  std::vector<typename F::Elem> alphas;
  for (int j = 0; j <= n; ++j) {
    MultiIndex idx(p.nvars(), 0);
    idx[size_t(j)] = 1;
    auto pj = sigma_poly::taylor_coeff(p, idx);
    hahn::Series<F> pja = pj.is_zero() ? hahn::zero<F>() : sigma_poly::eval(rho, pj, a);
    if (pja.is_zero()) {
      alphas.push_back(F::zero());
      continue;
    }
    GammaElem w = gamma::add(rho, hahn::valuation(pja).get(),
                             gamma::scalar_mul(rho, LinOp::monomial(j, 1), cfg.gamma));
    if (gamma::equal(rho, w, vpa))
      alphas.push_back(F::mul(hahn::lead_coeff(pja), F::inv(lead_pa)));
    else
      alphas.push_back(F::zero());
  }
  auto u = F::solve_linear(alphas);
  if (!u) return SolverFailure<F>{std::move(alphas)};
  return hahn::add(rho, a, hahn::monomial<F>(*u, cfg.gamma));
}

/// Iterated lifting with a bounded loop: stops at an exact root, once
/// v(P(b)) exceeds the target, on solver failure, or on loss of
/// configuration; max_iter caps the number of steps.
template <class F>
LiftReport<F> lift(const Rho& rho, const sigma_poly::SigmaPoly<F>& p,
                   const hahn::Series<F>& a, const GammaElem& target, long max_iter) {
  if (max_iter < 1) throw Error("InvalidArgument", "max_iter must be at least 1");
  LiftReport<F> rep;
  rep.final = a;
  for (long k = 0;; ++k) {
    hahn::Series<F> pb = sigma_poly::eval(rho, p, rep.final);
    if (pb.is_zero()) {
      rep.status = LiftStatus::RootFound;
      return rep;
    }
    if (gamma::compare(rho, hahn::valuation(pb).get(), target) == Cmp::Greater || k >= max_iter) {
      rep.status = LiftStatus::PrecisionReached;
      return rep;
    }
    auto cfg = config(rho, p, rep.final);
    if (!cfg) {
      rep.status = LiftStatus::NotInConfiguration;
      return rep;
    }
    auto res = step(rho, p, rep.final, *cfg);
    if (std::holds_alternative<SolverFailure<F>>(res)) {
      rep.status = LiftStatus::SolverFailed;
      rep.failure = std::get<SolverFailure<F>>(res);
      return rep;
    }
    rep.final = std::get<hahn::Series<F>>(res);
    rep.trace.push_back({cfg->gamma,
                         hahn::valuation(sigma_poly::eval(rho, p, rep.final)),
                         cfg->strict, cfg->i_value});
  }
}

/// Argmin set of v(P_(I)(a)) + |I|_rho * gamma over |I| >= 1 with
/// P_(I)(a) != 0 (the dominant terms of the Basic Calculation).
template <class F>
std::vector<MultiIndex> dominant_index(const Rho& rho, const sigma_poly::SigmaPoly<F>& p,
                                       const hahn::Series<F>& a, const GammaElem& g) {
  auto data = detail::taylor_at(rho, p, a);
  std::optional<GammaElem> best;
  std::vector<MultiIndex> argmin;
  for (const auto& idx : data.indices) {
    const auto& val = data.values.at(idx);
    if (val.is_zero()) continue;
    GammaElem w =
        gamma::add(rho, hahn::valuation(val).get(), detail::weight(rho, idx, g));
    if (!best || gamma::less(rho, w, *best)) {
      best = w;
      argmin.assign(1, idx);
    } else if (gamma::equal(rho, w, *best)) {
      argmin.push_back(idx);
    }
  }
  if (argmin.empty())
    throw Error("NoNonzeroTerm", "every Taylor coefficient vanishes at the point");
  return argmin;
}

/// Pseudo-convergence report for a finite prefix.
struct PcReport {
  bool is_pc = false;
  std::vector<Val> gammas;  // v(a_{eta+1} - a_eta) from eta0 on
  std::vector<std::string> violations;
};

template <class F>
PcReport pc_check(const Rho& rho, const std::vector<hahn::Series<F>>& seq, size_t eta0) {
  if (seq.size() < eta0 + 3)
    throw Error("TooShort", "need at least three elements past eta0");
  PcReport rep;
  auto dval = [&](size_t i, size_t j) {
    return hahn::valuation(hahn::sub(rho, seq[j], seq[i]));
  };
  for (size_t e = eta0; e + 1 < seq.size(); ++e) rep.gammas.push_back(dval(e, e + 1));
  for (size_t e = eta0; e < seq.size(); ++e)
    for (size_t e1 = e + 1; e1 < seq.size(); ++e1)
      for (size_t e2 = e1 + 1; e2 < seq.size(); ++e2)
        if (vcmp(rho, dval(e1, e2), dval(e, e1)) != Cmp::Greater)
          rep.violations.push_back("v(a" + std::to_string(e2) + " - a" + std::to_string(e1) +
                                   ") <= v(a" + std::to_string(e1) + " - a" +
                                   std::to_string(e) + ")");
  // gamma_eta depends only on eta across the available pairs
  for (size_t e = eta0; e + 1 < seq.size(); ++e)
    for (size_t e1 = e + 2; e1 < seq.size(); ++e1)
      if (vcmp(rho, dval(e, e1), rep.gammas[e - eta0]) != Cmp::Equal)
        rep.violations.push_back("v(a" + std::to_string(e1) + " - a" + std::to_string(e) +
                                 ") != gamma_" + std::to_string(e));
  rep.is_pc = rep.violations.empty();
  return rep;
}

template <class F>
bool is_pseudo_limit(const Rho& rho, const hahn::Series<F>& a,
                     const std::vector<hahn::Series<F>>& seq, size_t eta0) {
  if (seq.size() < eta0 + 2)
    throw Error("TooShort", "need at least two elements past eta0");
  for (size_t e = eta0; e + 1 < seq.size(); ++e) {
    Val cur = hahn::valuation(hahn::sub(rho, a, seq[e]));
    Val next = hahn::valuation(hahn::sub(rho, a, seq[e + 1]));
    if (vcmp(rho, next, cur) != Cmp::Greater) return false;
  }
  return true;
}

/// Affine function gamma -> intercept + slope * gamma over the value group.
struct AffineFn {
  GammaElem intercept;
  LinOp slope;
};

struct EventualOrder {
  std::vector<size_t> order;  // indices, eventually ascending
  GammaElem threshold;        // valid for every x > threshold
};

/// Lemma 4.1: the eventual ordering of finitely many affine functions with
/// pairwise sign-distinct slopes, plus an explicit crossing threshold.
EventualOrder eventual_order(const Rho& rho, const std::vector<AffineFn>& fns);

}  // namespace hensel

}  // namespace multval

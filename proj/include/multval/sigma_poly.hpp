#pragma once

#include <limits>
#include <optional>

#include "multval/hahn.hpp"
#include "multval/mpoly.hpp"

namespace multval {

/// Complexity triple (order, deg in the top variable, total degree) ordered
/// lexicographically; kNegInf encodes "-infinity" slots.
struct Complexity {
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  int order = kNegInf;
  int top_degree = kNegInf;
  int degree = kNegInf;
  auto operator<=>(const Complexity&) const = default;
};

namespace sigma_poly {

/// P(x, sigma(x), ..., sigma^n(x)) as a sparse table from multi-indices of
/// length n+1 to nonzero Hahn-series coefficients.
template <class F>
struct SigmaPoly {
  int order_bound = 0;  // n
  std::map<MultiIndex, hahn::Series<F>> table;

  size_t nvars() const { return size_t(order_bound) + 1; }
  bool is_zero() const { return table.empty(); }
  bool operator==(const SigmaPoly&) const = default;
};

template <class F>
SigmaPoly<F> make(int order_bound,
                  std::vector<std::pair<MultiIndex, hahn::Series<F>>> terms) {
  SigmaPoly<F> out;
  out.order_bound = order_bound;
  for (auto& [i, c] : terms) {
    if (i.size() != out.nvars())
      throw Error("InvalidArgument", "multi-index length does not match order bound");
    if (c.is_zero()) continue;
    auto it = out.table.find(i);
    if (it == out.table.end())
      out.table.emplace(i, std::move(c));
    else
      throw Error("InvalidArgument", "duplicate multi-index");
  }
  return out;
}

template <class F>
SigmaPoly<F> constant(int order_bound, const hahn::Series<F>& c) {
  SigmaPoly<F> out;
  out.order_bound = order_bound;
  if (!c.is_zero()) out.table.emplace(MultiIndex(size_t(order_bound) + 1, 0), c);
  return out;
}

/// The variable x_j, i.e. sigma^j(x).
template <class F>
SigmaPoly<F> var(int order_bound, int j) {
  MultiIndex i(size_t(order_bound) + 1, 0);
  i[size_t(j)] = 1;
  SigmaPoly<F> out;
  out.order_bound = order_bound;
  out.table.emplace(std::move(i), hahn::one<F>());
  return out;
}

template <class F>
SigmaPoly<F> add(const Rho& rho, const SigmaPoly<F>& a, const SigmaPoly<F>& b) {
  SigmaPoly<F> out = a;
  for (const auto& [i, c] : b.table) {
    auto it = out.table.find(i);
    if (it == out.table.end()) {
      out.table.emplace(i, c);
    } else {
      it->second = hahn::add(rho, it->second, c);
      if (it->second.is_zero()) out.table.erase(it);
    }
  }
  return out;
}

template <class F>
SigmaPoly<F> neg(const SigmaPoly<F>& a) {
  SigmaPoly<F> out = a;
  for (auto& [i, c] : out.table) c = hahn::neg(c);
  return out;
}

template <class F>
SigmaPoly<F> sub(const Rho& rho, const SigmaPoly<F>& a, const SigmaPoly<F>& b) {
  return add(rho, a, neg(b));
}

template <class F>
SigmaPoly<F> mul(const Rho& rho, const SigmaPoly<F>& a, const SigmaPoly<F>& b) {
  SigmaPoly<F> out;
  out.order_bound = a.order_bound;
  for (const auto& [ia, ca] : a.table)
    for (const auto& [ib, cb] : b.table) {
      MultiIndex i = ia;
      for (size_t k = 0; k < i.size(); ++k) i[k] += ib[k];
      auto prod = hahn::mul(rho, ca, cb);
      auto it = out.table.find(i);
      if (it == out.table.end()) {
        if (!prod.is_zero()) out.table.emplace(std::move(i), std::move(prod));
      } else {
        it->second = hahn::add(rho, it->second, prod);
        if (it->second.is_zero()) out.table.erase(it);
      }
    }
  return out;
}

template <class F>
SigmaPoly<F> scale(const SigmaPoly<F>& a, const typename F::Elem& k) {
  SigmaPoly<F> out;
  out.order_bound = a.order_bound;
  if (F::is_zero(k)) return out;
  for (const auto& [i, c] : a.table) out.table.emplace(i, hahn::scale(c, k));
  return out;
}

template <class F>
bool equal(const Rho& rho, const SigmaPoly<F>& a, const SigmaPoly<F>& b) {
  return sub(rho, a, b).is_zero();
}

template <class F>
hahn::Series<F> eval(const Rho& rho, const SigmaPoly<F>& p, const hahn::Series<F>& a) {
  std::vector<hahn::Series<F>> orbit{a};
  for (int j = 1; j <= p.order_bound; ++j) orbit.push_back(hahn::sigma(rho, orbit.back()));
  hahn::Series<F> acc;
  for (const auto& [i, c] : p.table) {
    hahn::Series<F> term = c;
    for (size_t j = 0; j < i.size(); ++j)
      for (uint32_t e = 0; e < i[j]; ++e) term = hahn::mul(rho, term, orbit[j]);
    acc = hahn::add(rho, acc, term);
  }
  return acc;
}

inline Int binomial(uint32_t n, uint32_t k) {
  if (k > n) return Int(0);
  Int acc(1);
  for (uint32_t i = 0; i < k; ++i) {
    acc *= Int(n - i);
    acc /= Int(i + 1);
  }
  return acc;
}

inline Int mi_binomial(const MultiIndex& n, const MultiIndex& k) {
  Int acc(1);
  for (size_t j = 0; j < n.size(); ++j) acc *= binomial(n[j], k[j]);
  return acc;
}

/// Taylor coefficient P_(I) = (d_I P) / I!, so that
/// P(x + y) = sum_I P_(I)(x) * sigma_vec(y)^I.
template <class F>
SigmaPoly<F> taylor_coeff(const SigmaPoly<F>& p, const MultiIndex& idx) {
  if (idx.size() != p.nvars())
    throw Error("InvalidArgument", "multi-index length does not match order bound");
  SigmaPoly<F> out;
  out.order_bound = p.order_bound;
  for (const auto& [j, c] : p.table) {
    if (!mi_leq(idx, j)) continue;
    MultiIndex rem(j);
    for (size_t k = 0; k < rem.size(); ++k) rem[k] -= idx[k];
    Int factor = mi_binomial(j, idx);
    out.table.emplace(std::move(rem), hahn::scale(c, F::from_rat(Rat(factor))));
  }
  return out;
}

/// Largest d with x_d occurring; nullopt encodes order -infinity (constants).
template <class F>
std::optional<int> order(const SigmaPoly<F>& p) {
  std::optional<int> d;
  for (const auto& [i, c] : p.table)
    for (size_t j = 0; j < i.size(); ++j)
      if (i[j] > 0 && (!d || int(j) > *d)) d = int(j);
  return d;
}

template <class F>
bool is_constant(const SigmaPoly<F>& p) {
  return !order(p).has_value();
}

template <class F>
int degree(const SigmaPoly<F>& p) {
  int deg = 0;
  for (const auto& [i, c] : p.table) deg = std::max(deg, int(mi_total(i)));
  return deg;
}

template <class F>
Complexity complexity(const SigmaPoly<F>& p) {
  if (p.is_zero()) return Complexity{};
  auto d = order(p);
  if (!d) return Complexity{Complexity::kNegInf, 0, 0};
  int top = 0, deg = 0;
  for (const auto& [i, c] : p.table) {
    top = std::max(top, int(i[size_t(*d)]));
    deg = std::max(deg, int(mi_total(i)));
  }
  return Complexity{*d, top, deg};
}

/// min over stored I of v(coeff_I) + |I|_rho * gamma (finite since stored
/// coefficients are nonzero); nullopt for the zero polynomial.
template <class F>
std::optional<GammaElem> min_weighted_valuation(const Rho& rho, const SigmaPoly<F>& p,
                                                const GammaElem& gamma_of_a) {
  std::optional<GammaElem> best;
  for (const auto& [i, c] : p.table) {
    std::vector<long> iv(i.begin(), i.end());
    GammaElem w = gamma::add(rho, hahn::valuation(c).get(),
                             gamma::scalar_mul(rho, rho_length(iv), gamma_of_a));
    if (!best || gamma::less(rho, w, *best)) best = std::move(w);
  }
  return best;
}

template <class F>
bool is_generic_for(const Rho& rho, const SigmaPoly<F>& p, const hahn::Series<F>& a) {
  if (a.is_zero()) throw Error("ZeroArgument", "genericity needs a nonzero point");
  auto best = min_weighted_valuation(rho, p, hahn::valuation(a).get());
  Val v = hahn::valuation(eval(rho, p, a));
  if (!best) return v.is_inf();
  return !v.is_inf() && gamma::equal(rho, v.get(), *best);
}

/// The reduced sigma-polynomial of (P, a): write P(a x) = d * Q(x) with d the
/// monomial t^min-valuation (coefficient 1) and push Q through the residue.
template <class F>
MPoly<F> residue_poly_for(const Rho& rho, const SigmaPoly<F>& p, const hahn::Series<F>& a) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "reduced polynomial of 0");
  if (a.is_zero()) throw Error("ZeroArgument", "reduced polynomial needs a nonzero point");
  GammaElem vmin = *min_weighted_valuation(rho, p, hahn::valuation(a).get());
  hahn::Series<F> dinv = hahn::monomial<F>(F::one(), gamma::neg(vmin));
  std::vector<hahn::Series<F>> orbit{a};
  for (int j = 1; j <= p.order_bound; ++j) orbit.push_back(hahn::sigma(rho, orbit.back()));
  MPoly<F> out(p.nvars());
  for (const auto& [i, c] : p.table) {
    hahn::Series<F> coef = hahn::mul(rho, c, dinv);
    for (size_t j = 0; j < i.size(); ++j)
      for (uint32_t e = 0; e < i[j]; ++e) coef = hahn::mul(rho, coef, orbit[j]);
    out.add_term(i, hahn::residue_pi(rho, coef));
  }
  return out;
}

/// Element a = u * t^gamma, generic for every polynomial in ps, found through
/// the residue field's test sequence; nullopt when the budget runs out.
template <class F>
std::optional<hahn::Series<F>> make_generic(const Rho& rho,
                                            const std::vector<SigmaPoly<F>>& ps,
                                            const GammaElem& g, size_t budget = 1000) {
  size_t nv = 1;
  for (const auto& p : ps) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "cannot be generic for 0");
    nv = std::max(nv, p.nvars());
  }
  hahn::Series<F> tg = hahn::monomial<F>(F::one(), g);
  // product of the reduced polynomials, times x_0 to force a nonzero point
  MPoly<F> prod = MPoly<F>::var(nv, 0);
  for (const auto& p : ps) {
    MPoly<F> q = residue_poly_for(rho, p, tg);
    MPoly<F> padded(nv);
    for (const auto& [i, c] : q.terms()) {
      MultiIndex ext(i);
      ext.resize(nv, 0);
      padded.add_term(ext, c);
    }
    prod = prod * padded;
  }
  auto u = nonvanishing_point(prod, budget);
  if (!u) return std::nullopt;
  return hahn::monomial<F>(*u, g);
}

/// All multi-indices of the given length with total weight in [1, max_total].
inline std::vector<MultiIndex> indices_up_to(size_t nvars, long max_total) {
  std::vector<MultiIndex> out;
  MultiIndex cur(nvars, 0);
  auto rec = [&](auto&& self, size_t pos, long left) -> void {
    if (pos == nvars) {
      if (mi_total(cur) >= 1) out.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[pos] = uint32_t(v);
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

}  // namespace sigma_poly

}  // namespace multval

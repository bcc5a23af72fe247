#pragma once

#include <random>

#include "multval/hahn.hpp"
#include "multval/residue.hpp"

namespace multval::testing {

inline LinOp op(std::vector<std::pair<int, long>> terms) {
  std::vector<std::pair<int, Int>> t;
  for (auto& [e, c] : terms) t.emplace_back(e, Int(c));
  return LinOp::from_terms(std::move(t));
}

inline Rho sqrt2() { return Rho::algebraic({-2, 0, 1}, Rat(1), Rat(2)); }

inline LinOp random_linop(std::mt19937_64& rng, int lo_exp = -2, int hi_exp = 3,
                          long coeff = 6, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(lo_exp, hi_exp);
  std::uniform_int_distribution<long> cd(-coeff, coeff);
  std::vector<std::pair<int, Int>> t;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) t.emplace_back(exp(rng), Int(cd(rng)));
  return LinOp::from_terms(std::move(t));
}

inline LinOp random_positive_linop(const Rho& rho, std::mt19937_64& rng) {
  for (;;) {
    LinOp l = random_linop(rng);
    switch (rho.sign(l)) {
      case Sign::Positive: return l;
      case Sign::Negative: return -l;
      case Sign::Zero: break;
    }
  }
}

inline GammaElem random_gamma(const Rho& rho, std::mt19937_64& rng) {
  return gamma::frac(rho, random_linop(rng), random_positive_linop(rho, rng));
}

template <class F>
typename F::Elem random_elem(std::mt19937_64& rng);

template <>
inline Rat random_elem<QField>(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-9, 9);
  std::uniform_int_distribution<long> d(1, 5);
  return Rat(n(rng), d(rng));
}

template <>
inline RatFunc random_elem<QsField>(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  RatFunc base(random_elem<QField>(rng));
  if (kind(rng) == 0) return base;
  return base + RatFunc(random_elem<QField>(rng)) * RatFunc::s();
}

template <class F>
hahn::Series<F> random_series(const Rho& rho, std::mt19937_64& rng, int max_terms = 3,
                              bool nonneg_val = false) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::vector<hahn::Term<F>> ts;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    GammaElem e = random_gamma(rho, rng);
    if (nonneg_val && gamma::sign_of(rho, e) == Sign::Negative) e = gamma::neg(e);
    ts.push_back({std::move(e), random_elem<F>(rng)});
  }
  return hahn::make(rho, std::move(ts));
}

template <class F>
hahn::Series<F> random_nonzero_series(const Rho& rho, std::mt19937_64& rng,
                                      int max_terms = 3) {
  for (;;) {
    auto s = random_series<F>(rho, rng, max_terms);
    if (!s.is_zero()) return s;
  }
}

}  // namespace multval::testing

#include "multval/sigma_poly.hpp"

namespace multval::testing {

template <class F>
sigma_poly::SigmaPoly<F> random_sigma_poly(const Rho& rho, std::mt19937_64& rng,
                                           int max_order = 2, long max_deg = 3) {
  std::uniform_int_distribution<int> ord(0, max_order);
  int n = ord(rng);
  auto idxs = sigma_poly::indices_up_to(size_t(n) + 1, max_deg);
  idxs.push_back(MultiIndex(size_t(n) + 1, 0));
  std::shuffle(idxs.begin(), idxs.end(), rng);
  std::uniform_int_distribution<size_t> nterms(1, 4);
  size_t k = std::min(nterms(rng), idxs.size());
  std::vector<std::pair<MultiIndex, hahn::Series<F>>> terms;
  for (size_t i = 0; i < k; ++i)
    terms.emplace_back(idxs[i], random_series<F>(rho, rng, 2));
  return sigma_poly::make(n, std::move(terms));
}

}  // namespace multval::testing

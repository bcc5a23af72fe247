#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "multval/rational.hpp"

namespace multval {

using MultiIndex = std::vector<uint32_t>;

inline long mi_total(const MultiIndex& i) {
  long t = 0;
  for (auto v : i) t += v;
  return t;
}

/// Componentwise (product) partial order.
inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

/// Sparse polynomial in x_0..x_n over a residue field F, used for the reduced
/// sigma-polynomials that drive genericity searches.
template <class F>
class MPoly {
 public:
  using Elem = typename F::Elem;

  explicit MPoly(size_t nvars) : nvars_(nvars) {}

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<MultiIndex, Elem>& terms() const { return t_; }

  void add_term(const MultiIndex& i, const Elem& c) {
    auto it = t_.find(i);
    if (it == t_.end()) {
      if (!F::is_zero(c)) t_.emplace(i, c);
      return;
    }
    it->second = F::add(it->second, c);
    if (F::is_zero(it->second)) t_.erase(it);
  }

  static MPoly var(size_t nvars, size_t j) {
    MPoly p(nvars);
    MultiIndex i(nvars, 0);
    i[j] = 1;
    p.add_term(i, F::one());
    return p;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.nvars_);
    for (const auto& [ia, ca] : a.t_)
      for (const auto& [ib, cb] : b.t_) {
        MultiIndex i(ia);
        for (size_t k = 0; k < i.size(); ++k) i[k] += ib[k];
        out.add_term(i, F::mul(ca, cb));
      }
    return out;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly out(a);
    for (const auto& [i, c] : b.t_) out.add_term(i, c);
    return out;
  }

  /// Evaluate at the sigma_bar-orbit (y, sigma(y), ..., sigma^n(y)).
  Elem eval_orbit(const Elem& y) const {
    std::vector<Elem> orbit;
    orbit.reserve(nvars_);
    Elem cur = y;
    for (size_t j = 0; j < nvars_; ++j) {
      orbit.push_back(cur);
      cur = F::sigma(cur);
    }
    Elem acc = F::zero();
    for (const auto& [i, c] : t_) {
      Elem m = c;
      for (size_t j = 0; j < nvars_; ++j)
        for (uint32_t e = 0; e < i[j]; ++e) m = F::mul(m, orbit[j]);
      acc = F::add(acc, m);
    }
    return acc;
  }

 private:
  size_t nvars_;
  std::map<MultiIndex, Elem> t_;
};

/// Searches the field's countable test sequence for y with
/// f(y, sigma(y), ..., sigma^n(y)) != 0; std::nullopt on budget exhaustion.
template <class F>
std::optional<typename F::Elem> nonvanishing_point(const MPoly<F>& f, size_t budget = 1000) {
  if (f.is_zero()) throw Error("ZeroPolynomial", "nonvanishing point of the zero polynomial");
  for (size_t k = 0; k < budget; ++k) {
    typename F::Elem y = F::test_candidate(k);
    if (!F::is_zero(f.eval_orbit(y))) return y;
  }
  return std::nullopt;
}

}  // namespace multval

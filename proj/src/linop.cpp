#include "multval/linop.hpp"

#include <algorithm>
#include <map>

namespace multval {

LinOp LinOp::from_terms(std::vector<std::pair<int, Int>> terms) {
  std::map<int, Int> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  LinOp out;
  for (auto& [e, c] : acc)
    if (c != 0) out.t_.emplace_back(e, std::move(c));
  return out;
}

LinOp LinOp::constant(Int c) { return monomial(0, std::move(c)); }

LinOp LinOp::monomial(int exp, Int coeff) {
  LinOp out;
  if (coeff != 0) out.t_.emplace_back(exp, std::move(coeff));
  return out;
}

Int LinOp::coeff_at(int exp) const {
  for (const auto& [e, c] : t_)
    if (e == exp) return c;
  return Int(0);
}

LinOp operator+(const LinOp& a, const LinOp& b) {
  std::vector<std::pair<int, Int>> merged(a.t_);
  merged.insert(merged.end(), b.t_.begin(), b.t_.end());
  return LinOp::from_terms(std::move(merged));
}

LinOp operator-(const LinOp& a, const LinOp& b) { return a + (-b); }

LinOp LinOp::operator-() const {
  LinOp out(*this);
  for (auto& [e, c] : out.t_) c = -c;
  return out;
}

LinOp LinOp::scaled(const Int& k) const {
  if (k == 0) return LinOp();
  LinOp out(*this);
  for (auto& [e, c] : out.t_) c *= k;
  return out;
}

LinOp LinOp::shifted(int k) const {
  LinOp out(*this);
  for (auto& [e, c] : out.t_) e += k;
  return out;
}

LinOp operator*(const LinOp& a, const LinOp& b) {
  std::vector<std::pair<int, Int>> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) prod.emplace_back(ea + eb, ca * cb);
  return LinOp::from_terms(std::move(prod));
}

Int LinOp::content() const {
  Int g(0);
  for (const auto& [e, c] : t_) g = gcd(g, c);
  return g;
}

std::pair<QPoly, int> LinOp::cleared() const {
  if (t_.empty()) return {QPoly(), 0};
  int m = std::min(0, min_exp());
  std::vector<Rat> c(static_cast<size_t>(max_exp() - m) + 1);
  for (const auto& [e, v] : t_) c[static_cast<size_t>(e - m)] = Rat(v);
  return {QPoly(std::move(c)), -m};
}

LinOp LinOp::from_qpoly_num(const QPoly& p) {
  std::vector<std::pair<int, Int>> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rat& q = p.coeff(i);
    if (q != 0) terms.emplace_back(i, num(q));
  }
  return from_terms(std::move(terms));
}

LinOp rho_length(std::span<const long> index) {
  std::vector<std::pair<int, Int>> terms;
  for (size_t j = 0; j < index.size(); ++j)
    if (index[j] != 0) terms.emplace_back(static_cast<int>(j), Int(index[j]));
  return LinOp::from_terms(std::move(terms));
}

}  // namespace multval

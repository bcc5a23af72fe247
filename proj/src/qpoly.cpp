#include "multval/qpoly.hpp"

#include <algorithm>

namespace multval {

namespace {
const Rat kZero{};
}

QPoly QPoly::constant(Rat v) {
  std::vector<Rat> c;
  if (v != 0) c.push_back(std::move(v));
  return QPoly(std::move(c));
}

QPoly QPoly::x() { return QPoly({Rat(0), Rat(1)}); }

const Rat& QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly QPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v = -v;
  return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rat& k) const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= k;
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(Int(i));
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& n, const QPoly& d) {
  if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  std::vector<Rat> rem = n.c_;
  int dn = d.degree();
  if (n.degree() < dn) return {QPoly(), n};
  std::vector<Rat> quo(static_cast<size_t>(n.degree() - dn) + 1);
  for (int k = n.degree(); k >= dn; --k) {
    Rat f = rem[static_cast<size_t>(k)] / d.lead();
    if (f == 0) continue;
    quo[static_cast<size_t>(k - dn)] = f;
    for (int i = 0; i <= dn; ++i)
      rem[static_cast<size_t>(k - dn + i)] -= f * d.coeff(i);
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / lead());
}

QPoly::EGcd QPoly::egcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly u0 = QPoly::constant(1), u1;
  QPoly v0, v1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  Rat k = Rat(1) / r0.lead();
  return {r0.scaled(k), u0.scaled(k), v0.scaled(k)};
}

QPoly QPoly::shifted(const Rat& k) const {
  // Horner on x+k.
  QPoly acc;
  QPoly xk({k, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * xk + QPoly::constant(*it);
  return acc;
}

std::pair<std::vector<Int>, Rat> QPoly::primitive_int() const {
  if (is_zero()) return {{}, Rat(1)};
  Int l(1);
  for (const auto& q : c_) l = lcm(l, den(q));
  std::vector<Int> z;
  z.reserve(c_.size());
  Int g(0);
  for (const auto& q : c_) {
    Int v = num(q) * (l / den(q));
    g = multval::gcd(g, v);
    z.push_back(std::move(v));
  }
  if (sgn(z.back()) < 0) g = -g;
  for (auto& v : z) v /= g;
  return {std::move(z), Rat(g, l)};
}

namespace {
int sign_variations(const std::vector<QPoly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}
}  // namespace

int QPoly::count_roots(const Rat& lo, const Rat& hi) const {
  if (is_zero() || degree() == 0 || lo >= hi) return 0;
  std::vector<QPoly> chain{*this, derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = -rem(chain[chain.size() - 2], chain.back());
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace multval

#include "multval/residue.hpp"

#include <algorithm>

namespace multval {

RatFunc::RatFunc(QPoly n, QPoly d) {
  if (d.is_zero()) throw Error("DivisionByZero", "zero denominator");
  if (n.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = QPoly::gcd(n, d);
  if (g.degree() > 0) {
    n = QPoly::divmod(n, g).first;
    d = QPoly::divmod(d, g).first;
  }
  Rat lead = d.lead();
  num_ = n.scaled(Rat(1) / lead);
  den_ = d.scaled(Rat(1) / lead);
}

std::optional<Rat> RatFunc::as_rational() const {
  if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
  if (num_.is_zero()) return Rat(0);
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("DivisionByZero", "division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::shifted(const Rat& k) const {
  RatFunc out;
  out.num_ = num_.shifted(k);
  out.den_ = den_.shifted(k);
  return out;
}

Rat QField::inv(const Elem& a) {
  if (a == 0) throw Error("DivisionByZero", "inverse of zero");
  return Rat(1) / a;
}

std::optional<Rat> QField::solve_linear(const std::vector<Elem>& alphas) {
  Rat sum(0);
  bool all_zero = true;
  for (const auto& a : alphas) {
    if (a != 0) all_zero = false;
    sum += a;
  }
  if (all_zero) throw Error("AllZeroCoefficients", "linear equation has no variable part");
  if (sum == 0) return std::nullopt;  // 1 + 0*u = 0 is unsolvable
  return Rat(-1) / sum;
}

std::optional<Rat> QField::nonfixed_witness(long) { return std::nullopt; }

namespace {
// 0, 1, -1, 2, -2, ...
Rat int_candidate(size_t j) {
  if (j == 0) return Rat(0);
  return j % 2 == 1 ? Rat(Int((j + 1) / 2)) : -Rat(Int(j / 2));
}
}  // namespace

Rat QField::test_candidate(size_t k) { return int_candidate(k); }

std::string QField::str(const Elem& a) {
  std::string out = num(a).str();
  if (den(a) != 1) out += "/" + den(a).str();
  return out;
}

RatFunc QsField::inv(const Elem& a) {
  if (a.is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return RatFunc(a.denom(), a.numer());
}

std::optional<RatFunc> QsField::solve_linear(const std::vector<Elem>& alphas) {
  bool all_zero = true;
  long max_deg = 0;
  for (const auto& a : alphas) {
    if (!a.is_zero()) all_zero = false;
    max_deg = std::max({max_deg, long(a.numer().degree()), long(a.denom().degree())});
  }
  if (all_zero) throw Error("AllZeroCoefficients", "linear equation has no variable part");

  // Clear denominators: L + sum_i A_i(s) u(s+i) = 0 with A_i = alpha_i * L.
  QPoly L = QPoly::constant(1);
  for (const auto& a : alphas)
    if (!a.is_zero()) {
      QPoly g = QPoly::gcd(L, a.denom());
      L = L * QPoly::divmod(a.denom(), g).first;
    }
  std::vector<QPoly> A(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i)
    if (!alphas[i].is_zero())
      A[i] = alphas[i].numer() * QPoly::divmod(L, alphas[i].denom()).first;

  const long D = std::max(10l, 2 * max_deg);
  // rows: coefficient of s^p in L + sum A_i(s) * (s+i)^d * u_d; unknowns u_d
  long rows = long(L.degree());
  std::vector<std::vector<QPoly>> basis(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (A[i].is_zero()) continue;
    QPoly pw = QPoly::constant(1);
    QPoly xi({Rat(Int(i)), Rat(1)});  // s + i
    for (long d = 0; d <= D; ++d) {
      basis[i].push_back(A[i] * pw);
      rows = std::max(rows, long(basis[i].back().degree()));
      pw = pw * xi;
    }
  }
  size_t nr = size_t(rows) + 1, nc = size_t(D) + 1;
  std::vector<std::vector<Rat>> M(nr, std::vector<Rat>(nc + 1));
  for (size_t r = 0; r < nr; ++r) M[r][nc] = -L.coeff(int(r));
  for (size_t i = 0; i < alphas.size(); ++i)
    for (size_t d = 0; d < basis[i].size(); ++d)
      for (size_t r = 0; r < nr; ++r) M[r][d] += basis[i][d].coeff(int(r));

  // Gaussian elimination; free unknowns stay zero.
  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t p = r;
    while (p < nr && M[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(M[p], M[r]);
    for (size_t rr = 0; rr < nr; ++rr) {
      if (rr == r || M[rr][c] == 0) continue;
      Rat f = M[rr][c] / M[r][c];
      for (size_t cc = c; cc <= nc; ++cc) M[rr][cc] -= f * M[r][cc];
    }
    pivot_col.push_back(long(c));
    ++r;
  }
  for (size_t rr = r; rr < nr; ++rr)
    if (M[rr][nc] != 0) return std::nullopt;  // inconsistent

  std::vector<Rat> u(nc);
  for (size_t i = 0; i < pivot_col.size(); ++i)
    u[size_t(pivot_col[i])] = M[i][nc] / M[i][size_t(pivot_col[i])];
  RatFunc sol(QPoly(std::move(u)), QPoly::constant(1));

  // substitution check; the ansatz must solve the equation exactly
  RatFunc acc = one();
  for (size_t i = 0; i < alphas.size(); ++i)
    acc = acc + alphas[i] * sol.shifted(Rat(Int(i)));
  if (!acc.is_zero()) return std::nullopt;
  return sol;
}

std::optional<RatFunc> QsField::nonfixed_witness(long d) {
  if (d < 1) throw Error("InvalidArgument", "d must be positive");
  return RatFunc::s();  // s + d != s
}

RatFunc QsField::test_candidate(size_t k) {
  // 0, 1, s, -1, s+1, 2, s^2, -2, s^3, ...
  if (k < 2) return RatFunc(int_candidate(k));
  if (k % 2 == 1) return RatFunc(int_candidate((k + 1) / 2));
  size_t j = (k - 2) / 2;
  if (j == 0) return RatFunc::s();
  if (j == 1) return RatFunc::s() + RatFunc(Rat(1));
  RatFunc p = RatFunc(Rat(1));
  for (size_t i = 0; i < j; ++i) p = p * RatFunc::s();
  return p;
}

std::string qpoly_str(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (c == 0) continue;
    Rat a = c;
    if (out.empty()) {
      if (sgn(c) < 0) {
        out += "-";
        a = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) a = -c;
    }
    bool unit = a == 1 && i > 0;
    if (!unit) {
      out += num(a).str();
      if (den(a) != 1) out += "/" + den(a).str();
    }
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string QsField::str(const Elem& a) {
  if (auto q = a.as_rational()) return QField::str(*q);
  return "(" + qpoly_str(a.numer(), "s") + ")/(" + qpoly_str(a.denom(), "s") + ")";
}

}  // namespace multval

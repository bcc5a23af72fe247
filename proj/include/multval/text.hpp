#pragma once

#include <string>
#include <string_view>

#include "multval/hensel.hpp"
#include "multval/residue.hpp"
#include "multval/rv.hpp"

namespace multval::text {

// ---------------------------------------------------------------------------
// Lexer shared by every grammar. Tokens carry line/column for diagnostics.

enum class Tok { Int, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string value;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src);
  const Token& peek(size_t ahead = 0) const;
  Token next();
  [[noreturn]] void fail(const std::string& expected) const;
  bool accept_sym(char c);
  void expect_sym(char c);
  bool accept_ident(std::string_view id);
  void expect_ident(std::string_view id);
  std::string expect_int();
  void expect_end();
  // index of the token after the ')' matching an upcoming '(' at `start`
  size_t find_matching_paren(size_t start) const;
  size_t pos() const { return pos_; }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Non-template parsers and printers.

LinOp parse_linop(Lexer& lx);
LinOp parse_linop(std::string_view s);
GammaElem parse_gamma(const Rho& rho, Lexer& lx);
GammaElem parse_gamma(const Rho& rho, std::string_view s);
Rat parse_rational(Lexer& lx);
Rat parse_rational(std::string_view s);
QPoly parse_spoly(Lexer& lx);  // polynomial in s with rational coefficients
RatFunc parse_ratfunc(Lexer& lx);
RatFunc parse_ratfunc(std::string_view s);
MultiIndex parse_multi_index(std::string_view s);

/// "rational 3/2" | "algebraic [c0,...] in (lo,hi) [plus-eps|minus-eps]" |
/// "infinite"
Rho parse_rho_spec(std::string_view s);

std::string str(const LinOp& op);
std::string str(const Rho& rho, const GammaElem& g);
std::string str(const Rho& rho, const Val& v);
std::string str(const Rat& q);
std::string str(const MultiIndex& idx);

// ---------------------------------------------------------------------------
// Carrier element hooks.

template <class F>
typename F::Elem parse_carrier(Lexer& lx);

template <>
inline Rat parse_carrier<QField>(Lexer& lx) {
  return parse_rational(lx);
}

template <>
inline RatFunc parse_carrier<QsField>(Lexer& lx) {
  return parse_ratfunc(lx);
}

/// Sign split used by the series/sigma-poly printers: constants print with an
/// extracted sign, anything else prints as an unsigned atom.
template <class F>
std::pair<bool, typename F::Elem> sign_split(const typename F::Elem& c);

template <>
inline std::pair<bool, Rat> sign_split<QField>(const Rat& c) {
  return c < 0 ? std::pair{true, -c} : std::pair{false, c};
}

template <>
inline std::pair<bool, RatFunc> sign_split<QsField>(const RatFunc& c) {
  auto q = c.as_rational();
  if (q && *q < 0) return {true, RatFunc(-*q)};
  return {false, c};
}

// ---------------------------------------------------------------------------
// Series.

template <class F>
hahn::Series<F> parse_series(const Rho& rho, Lexer& lx) {
  std::vector<hahn::Term<F>> terms;
  bool negate = lx.accept_sym('-');
  for (;;) {
    typename F::Elem coef = F::one();
    bool have_coef = false;
    const Token& t = lx.peek();
    if (t.kind == Tok::Int || (t.kind == Tok::Sym && t.value == "(")) {
      coef = parse_carrier<F>(lx);
      have_coef = true;
    }
    GammaElem exp = gamma::zero();
    bool have_mono = false;
    if (!have_coef || lx.accept_sym('*')) {
      lx.expect_ident("t");
      have_mono = true;
      if (lx.accept_sym('^')) {
        lx.expect_sym('(');
        exp = parse_gamma(rho, lx);
        lx.expect_sym(')');
      } else {
        exp = gamma::of_int(1);
      }
    }
    if (!have_coef && !have_mono) lx.fail("a coefficient or 't'");
    if (negate) coef = F::neg(coef);
    terms.push_back({std::move(exp), std::move(coef)});
    if (lx.accept_sym('+')) {
      negate = false;
    } else if (lx.accept_sym('-')) {
      negate = true;
    } else {
      break;
    }
  }
  return hahn::make(rho, std::move(terms));
}

template <class F>
hahn::Series<F> parse_series(const Rho& rho, std::string_view s) {
  Lexer lx(s);
  auto out = parse_series<F>(rho, lx);
  lx.expect_end();
  return out;
}

template <class F>
std::string carrier_str(const typename F::Elem& c);

template <>
inline std::string carrier_str<QField>(const Rat& c) {
  return QField::str(c);
}

template <>
inline std::string carrier_str<QsField>(const RatFunc& c) {
  return QsField::str(c);
}

template <class F>
std::string str(const Rho& rho, const hahn::Series<F>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& term : x.terms) {
    auto [neg, mag] = sign_split<F>(term.coef);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool at_zero = term.exp.is_zero();
    bool unit = !at_zero && F::is_zero(F::sub(mag, F::one()));
    if (!unit) out += carrier_str<F>(mag);
    if (!at_zero) {
      if (!unit) out += "*";
      out += "t^(" + str(rho, term.exp) + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sigma-polynomials.

template <class F>
sigma_poly::SigmaPoly<F> promote(const sigma_poly::SigmaPoly<F>& p, int bound) {
  if (bound <= p.order_bound) return p;
  sigma_poly::SigmaPoly<F> out;
  out.order_bound = bound;
  for (const auto& [i, c] : p.table) {
    MultiIndex j(i);
    j.resize(size_t(bound) + 1, 0);
    out.table.emplace(std::move(j), c);
  }
  return out;
}

template <class F>
sigma_poly::SigmaPoly<F> parse_sigma_poly(const Rho& rho, Lexer& lx) {
  using SP = sigma_poly::SigmaPoly<F>;
  auto lift_bound = [&](SP& a, SP& b) {
    int n = std::max(a.order_bound, b.order_bound);
    a = promote(a, n);
    b = promote(b, n);
  };
  SP acc;  // order_bound 0, empty
  bool negate = lx.accept_sym('-');
  for (;;) {
    SP term = sigma_poly::constant(0, hahn::one<F>());
    bool first_factor = true;
    for (;;) {
      const Token& t = lx.peek();
      SP factor;
      if (t.kind == Tok::Ident && t.value == "x") {
        lx.next();
        long e = 1;
        if (lx.accept_sym('^')) e = std::stol(lx.expect_int());
        factor = sigma_poly::var<F>(0, 0);
        SP acc2 = factor;
        for (long k = 1; k < e; ++k) acc2 = sigma_poly::mul(rho, acc2, factor);
        factor = acc2;
      } else if (t.kind == Tok::Ident && t.value == "s") {
        lx.next();
        long j = 1;
        if (lx.accept_sym('^')) j = std::stol(lx.expect_int());
        lx.expect_sym('(');
        lx.expect_ident("x");
        lx.expect_sym(')');
        long e = 1;
        if (lx.accept_sym('^')) e = std::stol(lx.expect_int());
        SP v = sigma_poly::var<F>(int(j), int(j));
        SP acc2 = v;
        for (long k = 1; k < e; ++k) acc2 = sigma_poly::mul(rho, acc2, v);
        factor = acc2;
      } else if (t.kind == Tok::Ident && t.value == "t") {
        hahn::Series<F> mono;
        lx.expect_ident("t");
        GammaElem exp = gamma::of_int(1);
        if (lx.accept_sym('^')) {
          lx.expect_sym('(');
          exp = parse_gamma(rho, lx);
          lx.expect_sym(')');
        }
        mono = hahn::monomial<F>(F::one(), exp);
        factor = sigma_poly::constant(0, mono);
      } else if (t.kind == Tok::Int) {
        factor = sigma_poly::constant(0, hahn::from_elem<F>(parse_carrier<F>(lx)));
      } else if (t.kind == Tok::Sym && t.value == "(") {
        size_t after = lx.find_matching_paren(lx.pos());
        if (lx.peek(after - lx.pos()).kind == Tok::Sym &&
            lx.peek(after - lx.pos()).value == "/") {
          factor = sigma_poly::constant(0, hahn::from_elem<F>(parse_carrier<F>(lx)));
        } else {
          lx.expect_sym('(');
          factor = sigma_poly::constant(0, parse_series<F>(rho, lx));
          lx.expect_sym(')');
        }
      } else if (first_factor) {
        lx.fail("a sigma-polynomial term");
      } else {
        break;
      }
      lift_bound(term, factor);
      term = sigma_poly::mul(rho, term, factor);
      first_factor = false;
      if (!lx.accept_sym('*')) break;
    }
    if (negate) term = sigma_poly::neg(term);
    lift_bound(acc, term);
    acc = sigma_poly::add(rho, acc, term);
    if (lx.accept_sym('+')) {
      negate = false;
    } else if (lx.accept_sym('-')) {
      negate = true;
    } else {
      break;
    }
  }
  return acc;
}

template <class F>
sigma_poly::SigmaPoly<F> parse_sigma_poly(const Rho& rho, std::string_view s) {
  Lexer lx(s);
  auto out = parse_sigma_poly<F>(rho, lx);
  lx.expect_end();
  return out;
}

template <class F>
std::string str(const Rho& rho, const sigma_poly::SigmaPoly<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, coef] : p.table) {
    std::string mono;
    for (size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      if (j == 0)
        mono += "x";
      else if (j == 1)
        mono += "s(x)";
      else
        mono += "s^" + std::to_string(j) + "(x)";
      if (idx[j] > 1) mono += "^" + std::to_string(idx[j]);
    }
    bool neg = false;
    std::string cs;
    if (mono.empty()) {
      if (coef.terms.size() == 1) {
        std::string one_term = str(rho, coef);
        neg = !one_term.empty() && one_term[0] == '-';
        cs = neg ? one_term.substr(1) : one_term;
      } else {
        cs = "(" + str(rho, coef) + ")";
      }
    } else if (coef.terms.size() == 1 && coef.terms.front().exp.is_zero()) {
      auto [n, mag] = sign_split<F>(coef.terms.front().coef);
      neg = n;
      if (!F::is_zero(F::sub(mag, F::one()))) cs = carrier_str<F>(mag) + "*";
    } else if (coef.terms.size() == 1) {
      std::string one_term = str(rho, coef);
      neg = !one_term.empty() && one_term[0] == '-';
      cs = (neg ? one_term.substr(1) : one_term) + "*";
    } else {
      cs = "(" + str(rho, coef) + ")*";
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += cs + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RV elements: rv(inf) | rv(gamma=<GammaElem>, lc=<carrier>)

template <class F>
rv::RVElem<F> parse_rv(const Rho& rho, std::string_view s) {
  Lexer lx(s);
  lx.expect_ident("rv");
  lx.expect_sym('(');
  if (lx.accept_ident("inf")) {
    lx.expect_sym(')');
    lx.expect_end();
    return rv::RVElem<F>::inf();
  }
  lx.expect_ident("gamma");
  lx.expect_sym('=');
  GammaElem g = parse_gamma(rho, lx);
  lx.expect_sym(',');
  lx.expect_ident("lc");
  lx.expect_sym('=');
  typename F::Elem c = parse_carrier<F>(lx);
  lx.expect_sym(')');
  lx.expect_end();
  if (F::is_zero(c)) throw Error("ZeroCoefficient", "rv leading coefficient must be nonzero");
  return rv::RVElem<F>::finite(std::move(g), std::move(c));
}

template <class F>
std::string str(const Rho& rho, const rv::RVElem<F>& r) {
  if (r.infinite) return "rv(inf)";
  return "rv(gamma=" + str(rho, r.gamma) + ", lc=" + carrier_str<F>(r.lead) + ")";
}

}  // namespace multval::text

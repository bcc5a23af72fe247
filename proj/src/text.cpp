#include "multval/text.hpp"

#include <cctype>

namespace multval::text {

namespace {
bool is_sym(char c) { return std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos; }
}

Lexer::Lexer(std::string_view src) {
  int line = 1, col = 1;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.value = std::string(src.substr(i, j - i));
      col += int(j - i);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Ident;
      t.value = std::string(src.substr(i, j - i));
      col += int(j - i);
      i = j;
    } else if (is_sym(c)) {
      t.kind = Tok::Sym;
      t.value = std::string(1, c);
      ++col;
      ++i;
    } else {
      throw Error("ParseError", "line " + std::to_string(line) + " col " +
                                    std::to_string(col) + ": unexpected character '" +
                                    std::string(1, c) + "'");
    }
    toks_.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  toks_.push_back(end);
}

const Token& Lexer::peek(size_t ahead) const {
  size_t i = std::min(pos_ + ahead, toks_.size() - 1);
  return toks_[i];
}

Token Lexer::next() {
  Token t = peek();
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

void Lexer::fail(const std::string& expected) const {
  const Token& t = peek();
  std::string got = t.kind == Tok::End ? "end of input" : "'" + t.value + "'";
  throw Error("ParseError", "line " + std::to_string(t.line) + " col " +
                                std::to_string(t.col) + ": expected " + expected +
                                ", got " + got);
}

bool Lexer::accept_sym(char c) {
  const Token& t = peek();
  if (t.kind == Tok::Sym && t.value.size() == 1 && t.value[0] == c) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect_sym(char c) {
  if (!accept_sym(c)) fail("'" + std::string(1, c) + "'");
}

bool Lexer::accept_ident(std::string_view id) {
  const Token& t = peek();
  if (t.kind == Tok::Ident && t.value == id) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect_ident(std::string_view id) {
  if (!accept_ident(id)) fail("'" + std::string(id) + "'");
}

std::string Lexer::expect_int() {
  if (peek().kind != Tok::Int) fail("an integer");
  return next().value;
}

void Lexer::expect_end() {
  if (peek().kind != Tok::End) fail("end of input");
}

size_t Lexer::find_matching_paren(size_t start) const {
  size_t i = start;
  int depth = 0;
  for (; i < toks_.size(); ++i) {
    if (toks_[i].kind == Tok::Sym && toks_[i].value == "(") ++depth;
    if (toks_[i].kind == Tok::Sym && toks_[i].value == ")") {
      --depth;
      if (depth == 0) return i + 1;
    }
    if (toks_[i].kind == Tok::End) break;
  }
  const Token& t = toks_[std::min(start, toks_.size() - 1)];
  throw Error("ParseError", "line " + std::to_string(t.line) + " col " +
                                std::to_string(t.col) + ": unbalanced parentheses");
}

// linop := ['-'] term (('+'|'-') term)*
// term  := INT ['*' rfactor] | rfactor ;  rfactor := 'r' ['^' ['-'] INT]
LinOp parse_linop(Lexer& lx) {
  std::vector<std::pair<int, Int>> terms;
  bool negate = lx.accept_sym('-');
  for (;;) {
    Int coeff(1);
    bool have_coeff = false;
    if (lx.peek().kind == Tok::Int) {
      coeff = Int(lx.next().value);
      have_coeff = true;
    }
    int exp = 0;
    if (!have_coeff || lx.accept_sym('*')) {
      lx.expect_ident("r");
      exp = 1;
      if (lx.accept_sym('^')) {
        bool eneg = lx.accept_sym('-');
        exp = std::stoi(lx.expect_int());
        if (eneg) exp = -exp;
      }
    } else if (lx.peek().kind == Tok::Ident && lx.peek().value == "r") {
      // allow "2r" style? keep strict: require '*', so this is an error
      lx.fail("'*' between coefficient and 'r'");
    }
    terms.emplace_back(exp, negate ? -coeff : coeff);
    if (lx.accept_sym('+')) {
      negate = false;
    } else if (lx.peek().kind == Tok::Sym && lx.peek().value == "-") {
      lx.next();
      negate = true;
    } else {
      break;
    }
  }
  return LinOp::from_terms(std::move(terms));
}

LinOp parse_linop(std::string_view s) {
  Lexer lx(s);
  LinOp out = parse_linop(lx);
  lx.expect_end();
  return out;
}

// gamma := '0' | '(' linop ')' '/' '(' linop ')'
GammaElem parse_gamma(const Rho& rho, Lexer& lx) {
  if (lx.peek().kind == Tok::Int && lx.peek().value == "0") {
    lx.next();
    return gamma::zero();
  }
  lx.expect_sym('(');
  LinOp num = parse_linop(lx);
  lx.expect_sym(')');
  lx.expect_sym('/');
  lx.expect_sym('(');
  LinOp den = parse_linop(lx);
  lx.expect_sym(')');
  return gamma::frac(rho, num, den);
}

GammaElem parse_gamma(const Rho& rho, std::string_view s) {
  Lexer lx(s);
  GammaElem out = parse_gamma(rho, lx);
  lx.expect_end();
  return out;
}

Rat parse_rational(Lexer& lx) {
  bool neg = lx.accept_sym('-');
  Int n(lx.expect_int());
  Int d(1);
  if (lx.accept_sym('/')) d = Int(lx.expect_int());
  if (d == 0) throw Error("DivisionByZero", "zero denominator in rational literal");
  Rat q(n, d);
  return neg ? -q : q;
}

Rat parse_rational(std::string_view s) {
  Lexer lx(s);
  Rat out = parse_rational(lx);
  lx.expect_end();
  return out;
}

// spoly := ['-'] sterm (('+'|'-') sterm)* ; sterm := coef ['*' sfac] | sfac
// sfac := 's' ['^' INT] ; coef := INT ['/' INT]
QPoly parse_spoly(Lexer& lx) {
  QPoly acc;
  bool negate = lx.accept_sym('-');
  for (;;) {
    Rat coef(1);
    bool have_coef = false;
    if (lx.peek().kind == Tok::Int) {
      Int n(lx.next().value);
      Int d(1);
      if (lx.accept_sym('/')) d = Int(lx.expect_int());
      if (d == 0) throw Error("DivisionByZero", "zero denominator in coefficient");
      coef = Rat(n, d);
      have_coef = true;
    }
    int exp = 0;
    if (!have_coef || lx.accept_sym('*')) {
      lx.expect_ident("s");
      exp = 1;
      if (lx.accept_sym('^')) exp = std::stoi(lx.expect_int());
    }
    std::vector<Rat> c(size_t(exp) + 1);
    c[size_t(exp)] = negate ? -coef : coef;
    acc = acc + QPoly(std::move(c));
    if (lx.accept_sym('+')) {
      negate = false;
    } else if (lx.peek().kind == Tok::Sym && lx.peek().value == "-") {
      lx.next();
      negate = true;
    } else {
      break;
    }
  }
  return acc;
}

// ratfunc := rational | '(' spoly ')' '/' '(' spoly ')'
RatFunc parse_ratfunc(Lexer& lx) {
  if (lx.peek().kind == Tok::Int ||
      (lx.peek().kind == Tok::Sym && lx.peek().value == "-")) {
    return RatFunc(parse_rational(lx));
  }
  lx.expect_sym('(');
  QPoly n = parse_spoly(lx);
  lx.expect_sym(')');
  lx.expect_sym('/');
  lx.expect_sym('(');
  QPoly d = parse_spoly(lx);
  lx.expect_sym(')');
  return RatFunc(std::move(n), std::move(d));
}

RatFunc parse_ratfunc(std::string_view s) {
  Lexer lx(s);
  RatFunc out = parse_ratfunc(lx);
  lx.expect_end();
  return out;
}

MultiIndex parse_multi_index(std::string_view s) {
  Lexer lx(s);
  MultiIndex out;
  for (;;) {
    out.push_back(uint32_t(std::stoul(lx.expect_int())));
    if (!lx.accept_sym(',')) break;
  }
  lx.expect_end();
  return out;
}

Rho parse_rho_spec(std::string_view s) {
  Lexer lx(s);
  if (lx.accept_ident("rational")) {
    bool neg = lx.accept_sym('-');
    Int p(lx.expect_int());
    Int q(1);
    if (lx.accept_sym('/')) q = Int(lx.expect_int());
    lx.expect_end();
    return Rho::rational(neg ? -p : p, q);
  }
  if (lx.accept_ident("algebraic")) {
    lx.expect_sym('[');
    std::vector<Int> coeffs;
    for (;;) {
      bool neg = lx.accept_sym('-');
      Int c(lx.expect_int());
      coeffs.push_back(neg ? -c : c);
      if (!lx.accept_sym(',')) break;
    }
    lx.expect_sym(']');
    lx.expect_ident("in");
    lx.expect_sym('(');
    Rat lo = parse_rational(lx);
    lx.expect_sym(',');
    Rat hi = parse_rational(lx);
    lx.expect_sym(')');
    if (lx.peek().kind == Tok::End) return Rho::algebraic(coeffs, lo, hi);
    if (lx.accept_ident("plus")) {
      lx.expect_sym('-');
      lx.expect_ident("eps");
      lx.expect_end();
      return Rho::algebraic_plus_eps(coeffs, lo, hi);
    }
    lx.expect_ident("minus");
    lx.expect_sym('-');
    lx.expect_ident("eps");
    lx.expect_end();
    return Rho::algebraic_minus_eps(coeffs, lo, hi);
  }
  if (lx.accept_ident("infinite")) {
    lx.expect_end();
    return Rho::infinite();
  }
  lx.fail("'rational', 'algebraic' or 'infinite'");
}

std::string str(const LinOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = c;
    bool neg = sgn(c) < 0;
    if (neg) mag = -mag;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = mag == 1 && e != 0;
    if (!unit) out += mag.str();
    if (e != 0) {
      if (!unit) out += "*";
      out += "r";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string str(const Rho&, const GammaElem& g) {
  if (g.is_zero()) return "0";
  return "(" + str(g.num) + ")/(" + str(g.den) + ")";
}

std::string str(const Rho& rho, const Val& v) {
  if (v.is_inf()) return "inf";
  return str(rho, v.get());
}

std::string str(const Rat& q) { return QField::str(q); }

std::string str(const MultiIndex& idx) {
  std::string out;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out;
}

}  // namespace multval::text

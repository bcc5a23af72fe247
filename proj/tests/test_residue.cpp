#include "multval/residue.hpp"

#include <random>

#include "doctest.h"
#include "multval/mpoly.hpp"

using namespace multval;

TEST_CASE("rational identity solve_linear") {
  auto u = QField::solve_linear({Rat(2), Rat(3)});
  REQUIRE(u.has_value());
  CHECK(*u == Rat(-1, 5));
  CHECK(Rat(1) + Rat(2) * *u + Rat(3) * *u == 0);

  CHECK(!QField::solve_linear({Rat(-1), Rat(1)}).has_value());
  CHECK_THROWS_AS(QField::solve_linear({Rat(0), Rat(0)}), Error);
}

TEST_CASE("shift field solve_linear") {
  auto u = QsField::solve_linear({RatFunc(Rat(-1)), RatFunc(Rat(1))});
  REQUIRE(u.has_value());
  CHECK(*u == -RatFunc::s());
  // substitute: 1 - u(s) + u(s+1) = 0
  RatFunc check = QsField::one() - *u + u->shifted(Rat(1));
  CHECK(check.is_zero());

  // nonconstant coefficients
  auto v = QsField::solve_linear({RatFunc::s(), RatFunc(Rat(2))});
  if (v.has_value()) {
    RatFunc subst = QsField::one() + RatFunc::s() * *v + RatFunc(Rat(2)) * v->shifted(Rat(1));
    CHECK(subst.is_zero());
  }
  CHECK_THROWS_AS(QsField::solve_linear({RatFunc(), RatFunc()}), Error);
}

TEST_CASE("nonfixed witness") {
  auto w = QsField::nonfixed_witness(3);
  REQUIRE(w.has_value());
  CHECK(!(QsField::sigma_pow(*w, 3) == *w));
  CHECK(!QField::nonfixed_witness(1).has_value());
  CHECK(!QField::nonfixed_witness(7).has_value());
  CHECK(QsField::nonfixed_witness(1) == RatFunc::s());
}

TEST_CASE("nonvanishing_point examples") {
  // f = x0
  MPoly<QField> f0(1);
  f0.add_term({1}, Rat(1));
  CHECK(nonvanishing_point(f0) == Rat(1));
  MPoly<QsField> f0s(1);
  f0s.add_term({1}, QsField::one());
  CHECK(nonvanishing_point(f0s) == RatFunc(Rat(1)));

  // f = x0 - x1
  MPoly<QsField> d(2);
  d.add_term({1, 0}, QsField::one());
  d.add_term({0, 1}, QsField::neg(QsField::one()));
  CHECK(nonvanishing_point(d) == RatFunc::s());

  MPoly<QField> dq(2);
  dq.add_term({1, 0}, Rat(1));
  dq.add_term({0, 1}, Rat(-1));
  CHECK(!nonvanishing_point(dq).has_value());

  MPoly<QField> z(1);
  CHECK_THROWS_AS(nonvanishing_point(z), Error);
}

TEST_CASE("automorphism commutes with inversion") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    RatFunc a = RatFunc(Rat(c(rng))) + RatFunc(Rat(c(rng))) * RatFunc::s();
    if (a.is_zero()) continue;
    CHECK(QsField::sigma(QsField::inv(a)) == QsField::inv(QsField::sigma(a)));
  }
}

TEST_CASE("rational function normalization") {
  RatFunc a(QPoly({Rat(0), Rat(2)}), QPoly({Rat(0), Rat(0), Rat(4)}));  // 2s/4s^2
  CHECK(a == RatFunc(QPoly({Rat(1)}), QPoly({Rat(0), Rat(2)})));
  CHECK(a.denom().lead() == 1);
  CHECK_THROWS_AS(RatFunc(QPoly::x(), QPoly()), Error);
  CHECK(RatFunc(Rat(5)).as_rational() == Rat(5));
  CHECK(!RatFunc::s().as_rational().has_value());
}

TEST_CASE("solver output always satisfies the equation") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-4, 4);
  int solved = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<RatFunc> alphas;
    int n = 1 + int(i % 3);
    bool all_zero = true;
    for (int j = 0; j <= n; ++j) {
      RatFunc a = RatFunc(Rat(c(rng))) + RatFunc(Rat(c(rng))) * RatFunc::s();
      if (!a.is_zero()) all_zero = false;
      alphas.push_back(a);
    }
    if (all_zero) continue;
    auto u = QsField::solve_linear(alphas);
    if (!u.has_value()) continue;
    ++solved;
    RatFunc acc = QsField::one();
    for (size_t j = 0; j < alphas.size(); ++j)
      acc = acc + alphas[j] * u->shifted(Rat(Int(j)));
    CHECK(acc.is_zero());
  }
  CHECK(solved >= 5);
}

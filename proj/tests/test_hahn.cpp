#include "multval/hahn.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "multval/residue.hpp"

using namespace multval;
using namespace multval::testing;
using QS = hahn::Series<QField>;

namespace {

GammaElem g_int(long n) { return gamma::of_int(n); }
QS t_pow(long n) { return hahn::monomial<QField>(Rat(1), g_int(n)); }
QS t_gamma(const GammaElem& g) { return hahn::monomial<QField>(Rat(1), g); }

}  // namespace

TEST_CASE("valuation examples") {
  Rho s2 = sqrt2();
  GammaElem g = gamma::frac(s2, op({{1, 1}, {0, -1}}), op({{0, 3}}));
  CHECK(hahn::valuation(t_gamma(g)) == Val::finite(g));
  CHECK(hahn::valuation(hahn::zero<QField>()).is_inf());

  GammaElem minus_inv_rho = gamma::neg(gamma::divide(s2, g_int(1), LinOp::rho()));
  QS x = hahn::add(s2, hahn::monomial<QField>(Rat(2), minus_inv_rho), t_pow(1));
  CHECK(hahn::valuation(x) == Val::finite(minus_inv_rho));
}

TEST_CASE("ring operation examples") {
  Rho s2 = sqrt2();
  QS one = hahn::one<QField>();
  QS t = t_pow(1);
  QS lhs = hahn::mul(s2, hahn::add(s2, one, t), hahn::sub(s2, one, t));
  CHECK(lhs == hahn::sub(s2, one, t_pow(2)));

  std::mt19937_64 rng(3);
  QS x = random_series<QField>(s2, rng);
  CHECK(hahn::add(s2, x, hahn::neg(x)).is_zero());

  GammaElem alpha = gamma::divide(s2, g_int(1), LinOp::rho());
  QS prod = hahn::mul(s2, t_gamma(alpha), t_gamma(alpha));
  CHECK(prod == t_gamma(gamma::frac(s2, LinOp::rho(), LinOp::one())));
}

TEST_CASE("sigma examples") {
  Rho s2 = sqrt2();
  // sigma(t^(-rho^-i)) = t^(-rho^(-i+1))
  for (long i = 1; i <= 4; ++i) {
    GammaElem e = gamma::neg(gamma::divide(s2, g_int(1), op({{int(i), 1}})));
    GammaElem e1 = gamma::neg(gamma::divide(s2, g_int(1), op({{int(i - 1), 1}})));
    CHECK(hahn::sigma(s2, t_gamma(e)) == t_gamma(e1));
  }
  CHECK(hahn::sigma(s2, hahn::one<QField>()) == hahn::one<QField>());

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    QS x = random_nonzero_series<QField>(s2, rng);
    CHECK(gamma::equal(s2, hahn::valuation(hahn::sigma(s2, x)).get(),
                       gamma::scalar_mul(s2, LinOp::rho(), hahn::valuation(x).get())));
  }
}

TEST_CASE("residue examples") {
  Rho s2 = sqrt2();
  QS x = hahn::add(s2, hahn::from_elem<QField>(Rat(3)), t_pow(1));
  CHECK(hahn::residue_pi(s2, x) == Rat(3));
  CHECK(hahn::residue_pi(s2, t_pow(1)) == Rat(0));
  CHECK_THROWS_AS(hahn::residue_pi(s2, t_pow(-1)), Error);
}

TEST_CASE("monomial examples") {
  Rho s2 = sqrt2();
  CHECK(hahn::monomial<QField>(Rat(1), gamma::zero()) == hahn::one<QField>());
  GammaElem g = gamma::frac(s2, op({{1, 1}}), op({{0, 5}}));
  CHECK(hahn::sigma(s2, t_gamma(g)) == t_gamma(gamma::scalar_mul(s2, LinOp::rho(), g)));
  CHECK(hahn::mul(s2, t_gamma(g), t_gamma(gamma::neg(g))) == hahn::one<QField>());
  CHECK_THROWS_AS(hahn::monomial<QField>(Rat(0), g), Error);
}

TEST_CASE("invert examples") {
  Rho s2 = sqrt2();
  QS one = hahn::one<QField>();
  QS x = hahn::sub(s2, one, t_pow(1));
  QS y = hahn::invert(s2, x, g_int(3));
  QS expect = hahn::make<QField>(
      s2, {{g_int(0), Rat(1)}, {g_int(1), Rat(1)}, {g_int(2), Rat(1)}, {g_int(3), Rat(1)}});
  CHECK(y == expect);

  GammaElem g = gamma::frac(s2, op({{1, 1}, {0, -1}}), op({{0, 2}}));
  CHECK(hahn::mul(s2, hahn::invert(s2, t_gamma(g), g_int(7)), t_gamma(g)) == one);

  CHECK(hahn::invert(s2, hahn::from_elem<QField>(Rat(2)), gamma::zero()) ==
        hahn::from_elem<QField>(Rat(1, 2)));
  CHECK_THROWS_AS(hahn::invert(s2, hahn::zero<QField>(), g_int(0)), Error);
}

TEST_CASE("truncate examples") {
  Rho s2 = sqrt2();
  QS x = hahn::make<QField>(s2, {{g_int(0), Rat(1)}, {g_int(1), Rat(1)}, {g_int(5), Rat(1)}});
  QS want = hahn::make<QField>(s2, {{g_int(0), Rat(1)}, {g_int(1), Rat(1)}});
  CHECK(hahn::truncate(s2, x, Val::finite(g_int(2))) == want);
  CHECK(hahn::truncate(s2, hahn::zero<QField>(), Val::finite(g_int(0))).is_zero());
  CHECK(hahn::truncate(s2, x, Val::inf()) == x);
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(7);
  for (Rho rho : {sqrt2(), Rho::rational(3, 2), Rho::infinite()}) {
    for (int i = 0; i < 120; ++i) {
      QS x = random_nonzero_series<QField>(rho, rng);
      QS y = random_nonzero_series<QField>(rho, rng);
      // v(xy) = v(x) + v(y)
      CHECK(gamma::equal(rho, hahn::valuation(hahn::mul(rho, x, y)).get(),
                         gamma::add(rho, hahn::valuation(x).get(), hahn::valuation(y).get())));
      // ultrametric
      Val vs = hahn::valuation(hahn::add(rho, x, y));
      Val vx = hahn::valuation(x), vy = hahn::valuation(y);
      Val vmin = vcmp(rho, vx, vy) == Cmp::Greater ? vy : vx;
      CHECK(vcmp(rho, vs, vmin) != Cmp::Less);
      if (vcmp(rho, vx, vy) != Cmp::Equal) CHECK(vcmp(rho, vs, vmin) == Cmp::Equal);
    }
  }
}

TEST_CASE("sigma is a ring automorphism") {
  std::mt19937_64 rng(9);
  Rho s2 = sqrt2();
  for (int i = 0; i < 60; ++i) {
    QS x = random_series<QField>(s2, rng);
    QS y = random_series<QField>(s2, rng);
    CHECK(hahn::sigma(s2, hahn::add(s2, x, y)) ==
          hahn::add(s2, hahn::sigma(s2, x), hahn::sigma(s2, y)));
    CHECK(hahn::sigma(s2, hahn::mul(s2, x, y)) ==
          hahn::mul(s2, hahn::sigma(s2, x), hahn::sigma(s2, y)));
    CHECK(hahn::sigma_inv(s2, hahn::sigma(s2, x)) == x);
  }
}

TEST_CASE("pi is a ring morphism on the valuation ring") {
  std::mt19937_64 rng(11);
  Rho s2 = sqrt2();
  for (int i = 0; i < 60; ++i) {
    QS x = random_series<QField>(s2, rng, 3, true);
    QS y = random_series<QField>(s2, rng, 3, true);
    CHECK(hahn::residue_pi(s2, hahn::add(s2, x, y)) ==
          hahn::residue_pi(s2, x) + hahn::residue_pi(s2, y));
    CHECK(hahn::residue_pi(s2, hahn::mul(s2, x, y)) ==
          hahn::residue_pi(s2, x) * hahn::residue_pi(s2, y));
  }
}

TEST_CASE("invert contract on random pairs") {
  std::mt19937_64 rng(13);
  Rho s2 = sqrt2();
  for (int i = 0; i < 60; ++i) {
    QS x = random_nonzero_series<QField>(s2, rng);
    GammaElem cutoff = random_gamma(s2, rng);
    QS y = hahn::invert(s2, x, cutoff);
    CHECK(gamma::equal(s2, hahn::valuation(y).get(), gamma::neg(hahn::valuation(x).get())));
    QS r = hahn::sub(s2, hahn::mul(s2, x, y), hahn::one<QField>());
    if (!r.is_zero())
      CHECK(gamma::compare(s2, hahn::valuation(r).get(), cutoff) == Cmp::Greater);
  }
}

TEST_CASE("shift-field coefficients twist under sigma") {
  Rho s2 = sqrt2();
  using SS = hahn::Series<QsField>;
  SS x = hahn::monomial<QsField>(RatFunc::s(), gamma::of_int(1));
  SS sx = hahn::sigma(s2, x);
  REQUIRE(sx.terms.size() == 1);
  CHECK(sx.terms[0].coef == RatFunc::s() + RatFunc(Rat(1)));
  CHECK(hahn::sigma_inv(s2, sx) == x);
}

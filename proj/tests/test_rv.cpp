#include "multval/rv.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace multval;
using namespace multval::testing;
using QS = hahn::Series<QField>;
using RV = rv::RVElem<QField>;

namespace {
QS t_pow(long n) { return hahn::monomial<QField>(Rat(1), gamma::of_int(n)); }
}

TEST_CASE("rv examples") {
  Rho s2 = sqrt2();
  QS a = hahn::add(s2, hahn::one<QField>(), t_pow(1));
  QS b = hahn::add(s2, hahn::one<QField>(), t_pow(2));
  CHECK(rv::of(a) == rv::of(b));
  CHECK(rv::of(a) == RV::finite(gamma::zero(), Rat(1)));
  CHECK(rv::of(hahn::zero<QField>()) == RV::inf());
  CHECK(rv::of(hahn::monomial<QField>(Rat(3), gamma::of_int(1))) ==
        RV::finite(gamma::of_int(1), Rat(3)));
}

TEST_CASE("lemma 9.2 equivalence on random pairs") {
  std::mt19937_64 rng(37);
  Rho s2 = sqrt2();
  for (int i = 0; i < 200; ++i) {
    QS x = random_nonzero_series<QField>(s2, rng);
    QS y = random_nonzero_series<QField>(s2, rng);
    bool same_rv = rv::of(x) == rv::of(y);
    QS diff = hahn::sub(s2, x, y);
    bool high_diff = diff.is_zero() ||
                     vcmp(s2, hahn::valuation(diff), hahn::valuation(y)) == Cmp::Greater;
    CHECK(same_rv == high_diff);
    // third clause at leading-term level: rv(x) * rv(y)^-1 = rv(1)
    bool quotient_one = rv::mul(s2, rv::of(x), rv::inv(rv::of(y))) == rv::of(hahn::one<QField>());
    CHECK(same_rv == quotient_one);
  }
}

TEST_CASE("rv multiplication is a homomorphism") {
  std::mt19937_64 rng(41);
  Rho s2 = sqrt2();
  for (int i = 0; i < 150; ++i) {
    QS x = random_series<QField>(s2, rng);
    QS y = random_series<QField>(s2, rng);
    CHECK(rv::of(hahn::mul(s2, x, y)) == rv::mul(s2, rv::of(x), rv::of(y)));
  }
  GammaElem g = random_gamma(s2, rng);
  CHECK(rv::inv(rv::of(hahn::monomial<QField>(Rat(1), g))) ==
        rv::of(hahn::monomial<QField>(Rat(1), gamma::neg(g))));
  CHECK(rv::mul(s2, RV::finite(gamma::zero(), Rat(2)), RV::inf()) == RV::inf());
  CHECK_THROWS_AS(rv::inv(RV::inf()), Error);
}

TEST_CASE("rv_sum examples") {
  Rho s2 = sqrt2();
  auto one = rv::of(hahn::one<QField>());
  auto t = rv::of(t_pow(1));
  auto s = rv::sum<QField>(s2, {one, t});
  REQUIRE(s.has_value());
  CHECK(*s == RV::finite(gamma::zero(), Rat(1)));

  auto cancel = rv::sum<QField>(s2, {t, rv::of(hahn::neg(t_pow(1)))});
  CHECK(!cancel.has_value());

  auto twice = rv::sum<QField>(s2, {t, t});
  REQUIRE(twice.has_value());
  CHECK(*twice == RV::finite(gamma::of_int(1), Rat(2)));
}

TEST_CASE("lemma 9.3 soundness on random sums") {
  std::mt19937_64 rng(43);
  Rho s2 = sqrt2();
  for (int i = 0; i < 150; ++i) {
    std::vector<QS> xs;
    std::vector<RV> rs;
    std::uniform_int_distribution<int> cnt(2, 4);
    int n = cnt(rng);
    QS total;
    Val vmin = Val::inf();
    for (int k = 0; k < n; ++k) {
      QS x = random_series<QField>(s2, rng, 2);
      total = hahn::add(s2, total, x);
      if (vcmp(s2, hahn::valuation(x), vmin) == Cmp::Less) vmin = hahn::valuation(x);
      rs.push_back(rv::of(x));
      xs.push_back(std::move(x));
    }
    auto s = rv::sum<QField>(s2, rs);
    bool min_attained = vcmp(s2, hahn::valuation(total), vmin) == Cmp::Equal;
    if (s.has_value()) {
      CHECK(min_attained);
      CHECK(*s == rv::of(total));
    } else {
      CHECK(vcmp(s2, hahn::valuation(total), vmin) == Cmp::Greater);
    }
  }
}

TEST_CASE("rv_sigma") {
  std::mt19937_64 rng(47);
  Rho s2 = sqrt2();
  for (int i = 0; i < 100; ++i) {
    QS x = random_series<QField>(s2, rng);
    CHECK(rv::sigma(s2, rv::of(x)) == rv::of(hahn::sigma(s2, x)));
  }
  CHECK(rv::sigma(s2, RV::inf()) == RV::inf());
  CHECK(rv::sigma(s2, RV::finite(gamma::zero(), Rat(5))) ==
        RV::finite(gamma::zero(), Rat(5)));
  // multiplicativity of the induced automorphism on valuations
  for (int i = 0; i < 50; ++i) {
    QS x = random_nonzero_series<QField>(s2, rng);
    RV r = rv::of(x);
    CHECK(gamma::equal(s2, rv::sigma(s2, r).gamma,
                       gamma::scalar_mul(s2, LinOp::rho(), r.gamma)));
  }
}

TEST_CASE("cross-section law") {
  std::mt19937_64 rng(53);
  Rho s2 = sqrt2();
  for (int i = 0; i < 60; ++i) {
    GammaElem g1 = random_gamma(s2, rng), g2 = random_gamma(s2, rng);
    CHECK(hahn::equal(s2, rv::cross_section<QField>(gamma::add(s2, g1, g2)),
                      hahn::mul(s2, rv::cross_section<QField>(g1),
                                rv::cross_section<QField>(g2))));
    CHECK(gamma::equal(s2, hahn::valuation(rv::cross_section<QField>(g1)).get(), g1));

    // s(tau(gamma)) = sigma_vec(s(gamma))^I for a random operator tau
    LinOp tau = random_linop(rng, 0, 3, 3);
    if (tau.is_zero()) continue;
    CHECK(hahn::equal(
        s2, rv::cross_section<QField>(gamma::scalar_mul(s2, tau, g1)),
        rv::operator_action(s2, tau, rv::cross_section<QField>(g1))));
  }
  // tau = 2 + sigma: s((2+rho)gamma) = s(gamma)^2 sigma(s(gamma))
  GammaElem g = gamma::frac(s2, op({{1, 1}, {0, -3}}), op({{0, 2}}));
  LinOp tau = op({{0, 2}, {1, 1}});
  QS lhs = rv::cross_section<QField>(gamma::scalar_mul(s2, tau, g));
  QS sg = rv::cross_section<QField>(g);
  QS rhs = hahn::mul(s2, hahn::mul(s2, sg, sg), hahn::sigma(s2, sg));
  CHECK(hahn::equal(s2, lhs, rhs));
}

TEST_CASE("axiom 4 witness") {
  for (Rho rho : {sqrt2(), Rho::rational(3, 2), Rho::rational(1, 1)}) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 20; ++i) {
      GammaElem g = random_gamma(rho, rng);
      auto w = rv::axiom4_witness<QField>(rho, g);
      CHECK(w.status == rv::WitnessStatus::Verified);
      CHECK(hahn::equal(rho, w.value, rv::cross_section<QField>(g)));
    }
  }
  auto w0 = rv::axiom4_witness<QField>(sqrt2(), gamma::zero());
  CHECK(w0.value == hahn::one<QField>());

  auto winf = rv::axiom4_witness<QField>(Rho::infinite(), gamma::of_int(2));
  CHECK(winf.status == rv::WitnessStatus::NotApplicable);
}

TEST_CASE("encode and decode") {
  std::mt19937_64 rng(61);
  Rho s2 = sqrt2();
  for (int i = 0; i < 200; ++i) {
    GammaElem g = random_gamma(s2, rng);
    Rat c = random_elem<QField>(rng);
    if (c == 0) continue;
    auto r = rv::encode<QField>(g, c);
    auto [g2, c2] = rv::decode(r);
    CHECK(g2 == g);
    CHECK(c2 == c);
    CHECK(gamma::equal(s2, rv::valuation(r).get(), g));
  }
  CHECK(rv::encode<QField>(gamma::zero(), Rat(0)) == RV::inf());
  CHECK_THROWS_AS(rv::encode<QField>(gamma::of_int(1), Rat(0)), Error);
  CHECK_THROWS_AS(rv::decode(RV::inf()), Error);
  CHECK(rv::decode(rv::of(hahn::monomial<QField>(Rat(3), gamma::of_int(1)))) ==
        std::pair<GammaElem, Rat>(gamma::of_int(1), Rat(3)));
}

#include "multval/qpoly.hpp"

#include "doctest.h"

using namespace multval;

namespace {
QPoly zpoly(std::vector<long> c) {
  std::vector<Rat> q(c.begin(), c.end());
  return QPoly(std::move(q));
}
}  // namespace

TEST_CASE("divmod recombines") {
  QPoly n = zpoly({1, 0, -3, 2, 5});
  QPoly d = zpoly({-2, 0, 1});
  auto [q, r] = QPoly::divmod(n, d);
  CHECK(q * d + r == n);
  CHECK(r.degree() < d.degree());
}

TEST_CASE("x^3 mod x^2-2 is 2x") {
  auto r = QPoly::rem(zpoly({0, 0, 0, 1}), zpoly({-2, 0, 1}));
  CHECK(r == zpoly({0, 2}));
}

TEST_CASE("gcd of multiples") {
  QPoly f = zpoly({-1, 1});       // x-1
  QPoly g = zpoly({-2, 1});       // x-2
  CHECK(QPoly::gcd(f * g, f * f) == f.monic());
  CHECK(QPoly::gcd(f, g).degree() == 0);
}

TEST_CASE("egcd bezout identity") {
  QPoly a = zpoly({0, 1});        // x
  QPoly f = zpoly({-2, 0, 1});    // x^2-2
  auto e = QPoly::egcd(a, f);
  CHECK(e.g == QPoly::constant(1));
  CHECK(e.u * a + e.v * f == e.g);
}

TEST_CASE("sturm root counting") {
  QPoly p = zpoly({-2, 0, 1});  // roots +-sqrt(2)
  CHECK(p.count_roots(Rat(1), Rat(2)) == 1);
  CHECK(p.count_roots(Rat(-2), Rat(2)) == 2);
  CHECK(p.count_roots(Rat(2), Rat(3)) == 0);
}

TEST_CASE("taylor shift") {
  QPoly p = zpoly({0, 0, 1});  // x^2
  CHECK(p.shifted(Rat(1)) == zpoly({1, 2, 1}));
}

TEST_CASE("primitive int part") {
  QPoly p({Rat(1, 2), Rat(3, 4)});
  auto [z, f] = p.primitive_int();
  REQUIRE(z.size() == 2);
  CHECK(z[0] == 2);
  CHECK(z[1] == 3);
  CHECK(f == Rat(1, 4));
}

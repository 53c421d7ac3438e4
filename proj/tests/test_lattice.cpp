#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/lattice.hpp"

#include <random>

using namespace trop;

TEST_CASE("det2 on known vectors") {
  CHECK(det2({1, 1}, {-2, 1}) == 3);
  CHECK(det2({2, 0}, {1, 0}) == 0);
  CHECK(det2({0, -1}, {1, 1}) == 1);
  CHECK(det2({1, 2}, {3, 4}) == -2);
}

TEST_CASE("det2 is antisymmetric and bilinear") {
  std::mt19937 rng(7);
  auto rnd = [&] { return static_cast<long long>(rng() % 21) - 10; };
  for (int it = 0; it < 200; ++it) {
    LatticeVec a{rnd(), rnd()}, b{rnd(), rnd()}, c{rnd(), rnd()};
    CHECK(det2(a, b) == -det2(b, a));
    CHECK(det2(a + c, b) == det2(a, b) + det2(c, b));
    CHECK(det2(a, a) == 0);
  }
}

TEST_CASE("weight and parity") {
  auto wp = weight_and_parity({-2, 4});
  CHECK(wp.weight == 2);
  CHECK(wp.even);
  wp = weight_and_parity({1, 1});
  CHECK(wp.weight == 1);
  CHECK_FALSE(wp.even);
  wp = weight_and_parity({3, 0});
  CHECK(wp.weight == 3);
  CHECK_FALSE(wp.even);
  wp = weight_and_parity({0, -6});
  CHECK(wp.weight == 6);
  CHECK(wp.even);
  CHECK_THROWS_AS(weight_and_parity({0, 0}), std::invalid_argument);
}

TEST_CASE("primitive directions") {
  CHECK(primitive({-2, 4}) == LatticeVec{-1, 2});
  CHECK(primitive({0, -3}) == LatticeVec{0, -1});
  CHECK(primitive({1, 1}) == LatticeVec{1, 1});
}

TEST_CASE("ipow has period four and inverse behaviour") {
  GaussRat one{Rat(1)}, i{Rat(0), Rat(1)}, mone{Rat(-1)}, mi{Rat(0), Rat(-1)};
  CHECK(ipow(0) == one);
  CHECK(ipow(1) == i);
  CHECK(ipow(2) == mone);
  CHECK(ipow(3) == mi);
  CHECK(ipow(4) == one);
  CHECK(ipow(-1) == mi);
  CHECK(ipow(-2) == mone);
  for (long long a = -8; a <= 8; ++a)
    for (long long b = -8; b <= 8; ++b)
      CHECK(ipow(a) * ipow(b) == ipow(a + b));
}

TEST_CASE("rational parse and serialize") {
  CHECK(rat_str(rat_parse("3/4")) == "3/4");
  CHECK(rat_str(rat_parse("6/8")) == "3/4");
  CHECK(rat_str(rat_parse("-7")) == "-7");
  CHECK(rat_str(rat_parse("0")) == "0");
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_parse("10/5") == Rat(2));
  CHECK_THROWS_AS(rat_parse("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("+3"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("2/-3"), std::invalid_argument);
}

TEST_CASE("gaussian rationals form a commutative ring") {
  std::mt19937 rng(11);
  auto rnd = [&] {
    return GaussRat(Rat(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 4) + 1),
                    Rat(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 4) + 1));
  };
  GaussRat i{Rat(0), Rat(1)};
  CHECK(i * i == GaussRat(Rat(-1)));
  for (int it = 0; it < 100; ++it) {
    GaussRat a = rnd(), b = rnd(), c = rnd();
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("gaussian serialization") {
  CHECK(gauss_str(GaussRat(Rat(2))) == "2");
  CHECK(gauss_str(GaussRat(Rat(0), Rat(1))) == "i");
  CHECK(gauss_str(GaussRat(Rat(0), Rat(-1))) == "-i");
  CHECK(gauss_str(GaussRat(Rat(1), Rat(2))) == "1+2i");
  CHECK(gauss_str(GaussRat(Rat(-1, 2), Rat(-3))) == "-1/2-3i");
}

#include "quadclif/chern.hpp"

#include <doctest.h>

using quadclif::BiDegree;
using quadclif::ChernCharacter;
using quadclif::CurveClass;
using quadclif::Int;
using quadclif::Rational;

TEST_CASE("bidegree arithmetic and pairing") {
  BiDegree u{1, 2}, v{3, 4};
  CHECK(u + v == BiDegree{4, 6});
  CHECK(u - v == BiDegree{-2, -2});
  CHECK(2 * u == BiDegree{2, 4});
  CHECK(pairing(u, v) == 10);  // u.a*v.b + u.b*v.a
  CHECK(pairing(u, v) == pairing(v, u));
  CHECK(flip(u) == BiDegree{2, 1});
}

TEST_CASE("line bundle characters") {
  ChernCharacter ch = quadclif::line_bundle_character(2, 3);
  CHECK(ch.rank == 1);
  CHECK(ch.c1 == BiDegree{2, 3});
  CHECK(ch.ch2 == Rational(6));
  CHECK(quadclif::euler_characteristic(ch) == 12);
  CHECK(quadclif::slope(ch) == Rational(5, 2));
}

TEST_CASE("twist shifts c1 and ch2") {
  ChernCharacter ch{3, {4, 3}, Rational(4)};
  CHECK(quadclif::euler_characteristic(ch) == 14);
  ChernCharacter tw = quadclif::twist(ch, 0, -1);
  CHECK(tw.rank == 3);
  CHECK(tw.c1 == BiDegree{4, 0});
  CHECK(tw.ch2 == Rational(0));
  CHECK(quadclif::euler_characteristic(tw) == 7);
  // twisting back is the identity
  ChernCharacter back = quadclif::twist(tw, 0, 1);
  CHECK(back == ch);
}

TEST_CASE("flip swaps the factors") {
  ChernCharacter ch{2, {5, 1}, Rational(7, 2)};
  ChernCharacter fl = quadclif::flip(ch);
  CHECK(fl.rank == 2);
  CHECK(fl.c1 == BiDegree{1, 5});
  CHECK(fl.ch2 == ch.ch2);
  CHECK(quadclif::slope(fl) == quadclif::slope(ch));
}

TEST_CASE("slope and euler characteristic reject bad input") {
  ChernCharacter torsion{0, {1, 1}, Rational(0)};
  CHECK_THROWS_AS(quadclif::slope(torsion), quadclif::domain_error);
  ChernCharacter frac{2, {1, 1}, Rational(1, 2)};
  CHECK_THROWS_AS(quadclif::euler_characteristic(frac), quadclif::domain_error);
}

TEST_CASE("restriction to moving curves counts sections by Riemann-Roch") {
  ChernCharacter ch{3, {4, 3}, Rational(4)};
  CHECK(quadclif::restriction_sections(ch, CurveClass::ruling_a) == 6);
  CHECK(quadclif::restriction_sections(ch, CurveClass::ruling_b) == 7);
  CHECK(quadclif::restriction_sections(ch, CurveClass::hyperplane) == 10);
  CHECK(quadclif::bidegree(CurveClass::hyperplane) == BiDegree{1, 1});
}

TEST_CASE("anticanonical pairing is always even") {
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b) {
      ChernCharacter ch{1, {a, b}, Rational(0)};
      Int p = quadclif::anticanonical_pairing(ch);
      CHECK(p == 2 * a + 2 * b);
      CHECK(p % 2 == 0);
    }
}

#pragma once

// Numerical Chern data on the smooth quadric surface P1 x P1.
//
// Divisor classes are written in the ruling basis: (a,b) stands for
// a*F1 + b*F2 with F1^2 = F2^2 = 0 and F1.F2 = 1, so the intersection
// pairing is (a,b).(c,d) = a*d + b*c.  The polarization is H = (1,1),
// the anticanonical class is -K = (2,2), and slopes are taken with
// respect to H: mu(E) = c1(E).H / (2 rk E).

#include "quadclif/rational.hpp"

namespace quadclif {

struct BiDegree {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const BiDegree&, const BiDegree&) = default;
  friend BiDegree operator+(BiDegree u, BiDegree v) { return {u.a + v.a, u.b + v.b}; }
  friend BiDegree operator-(BiDegree u, BiDegree v) { return {u.a - v.a, u.b - v.b}; }
  friend BiDegree operator*(Int s, BiDegree u) { return {s * u.a, s * u.b}; }
};

inline Int pairing(BiDegree u, BiDegree v) { return u.a * v.b + u.b * v.a; }

// Exchange the two rulings.
inline BiDegree flip(BiDegree u) { return {u.b, u.a}; }

enum class CurveClass { ruling_a, ruling_b, hyperplane };

inline BiDegree bidegree(CurveClass c) {
  switch (c) {
    case CurveClass::ruling_a: return {1, 0};
    case CurveClass::ruling_b: return {0, 1};
    case CurveClass::hyperplane: return {1, 1};
  }
  throw domain_error("bidegree: unknown curve class");
}

struct ChernCharacter {
  Int rank = 0;
  BiDegree c1;
  Rational ch2;

  friend bool operator==(const ChernCharacter& x, const ChernCharacter& y) {
    return x.rank == y.rank && x.c1 == y.c1 && x.ch2 == y.ch2;
  }
  friend ChernCharacter operator+(const ChernCharacter& x, const ChernCharacter& y) {
    return {x.rank + y.rank, x.c1 + y.c1, x.ch2 + y.ch2};
  }
};

inline ChernCharacter line_bundle_character(Int a, Int b) {
  return {1, {a, b}, Rational(a * b)};
}

inline ChernCharacter flip(const ChernCharacter& ch) {
  return {ch.rank, flip(ch.c1), ch.ch2};
}

inline Rational slope(const ChernCharacter& ch) {
  if (ch.rank < 1) throw domain_error("slope: rank must be >= 1");
  return Rational(ch.c1.a + ch.c1.b, 2 * ch.rank);
}

// Riemann-Roch: chi = r + a + b + ch2.  A character of an actual sheaf has
// integral chi; anything else is rejected.
inline Int euler_characteristic(const ChernCharacter& ch) {
  Rational chi = Rational(ch.rank + ch.c1.a + ch.c1.b) + ch.ch2;
  if (!chi.is_integer())
    throw domain_error("euler_characteristic: non-integral value, invalid character");
  return chi.to_int();
}

inline ChernCharacter twist(const ChernCharacter& ch, Int p, Int q) {
  ChernCharacter out = ch;
  out.c1 = ch.c1 + ch.rank * BiDegree{p, q};
  out.ch2 = ch.ch2 + Rational(ch.c1.a * q + ch.c1.b * p + ch.rank * p * q);
  return out;
}

// h0 of the restriction to a general curve of the given class, for a
// globally generated sheaf: rank + c1.C sections.
inline Int restriction_sections(const ChernCharacter& ch, CurveClass c) {
  if (ch.rank < 1) throw domain_error("restriction_sections: rank must be >= 1");
  return ch.rank + pairing(ch.c1, bidegree(c));
}

inline Int anticanonical_pairing(const ChernCharacter& ch) {
  return pairing(ch.c1, {2, 2});
}

}  // namespace quadclif

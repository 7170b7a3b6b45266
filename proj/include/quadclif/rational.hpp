#pragma once

// Exact rational scalar backed by GMP, plus the error types shared across
// the library.  Every value is kept in canonical form: numerator and
// denominator coprime, denominator strictly positive.  All arithmetic is
// exact; there is no overflow path.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadclif {

using Int = std::int64_t;

static_assert(sizeof(long) == sizeof(Int), "GMP slong interfaces assume 64-bit long");

// Precondition violations and invalid input values.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A randomized oracle failed its genericity checks after the retry limit.
struct genericity_error : std::runtime_error {
  std::uint64_t seed;
  genericity_error(const std::string& what, std::uint64_t seed_in)
      : std::runtime_error(what), seed(seed_in) {}
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(Int n) : v_(static_cast<long>(n)) {}

  Rational(Int num, Int den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q" and optional surrounding whitespace, base 10.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Largest integer <= value.  Bound values in this library are small, so a
  // result outside Int is a usage error, not a legitimate state.
  Int floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) throw domain_error("Rational::floor: out of Int range");
    return q.get_si();
  }

  // Exact conversion; throws unless the value is an integer fitting Int.
  Int to_int() const {
    if (!is_integer()) throw domain_error("Rational::to_int: not an integer");
    return floor();
  }

  std::string to_string() const { return v_.get_str(); }

  friend Rational operator+(const Rational& x, const Rational& y) { return wrap(x.v_ + y.v_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return wrap(x.v_ - y.v_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return wrap(x.v_ * y.v_); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.v_ == 0) throw domain_error("Rational: division by zero");
    return wrap(x.v_ / y.v_);
  }
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  friend Rational abs(const Rational& x) { return wrap(abs(x.v_)); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.v_.get_str();
  }

 private:
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);  // results of mpq arithmetic on canonical operands stay canonical
    return r;
  }

  mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
  size_t first = text.find_first_not_of(" \t");
  size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw domain_error("Rational::parse: empty input");
  std::string body(text.substr(first, last - first + 1));
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), body.c_str(), 10) != 0)
    throw domain_error("Rational::parse: malformed rational '" + body + "'");
  if (v.get_den() == 0) throw domain_error("Rational::parse: zero denominator in '" + body + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

}  // namespace quadclif

#pragma once

// Dense matrices over the exact Rational scalar and fraction-free rank
// computation.
//
// rank() accepts any Eigen expression with Rational scalar.  It clears
// denominators row by row (row scaling by a nonzero rational preserves
// rank), then runs Bareiss elimination on the integer working copy.  The
// pivot in each column is the entry of largest absolute value, ties broken
// by lowest row index, so the elimination path is deterministic across
// platforms.  Bareiss divisions are exact by Sylvester's identity, which
// survives row swaps and skipped zero columns.

#include "quadclif/rational.hpp"

#include <Eigen/Core>

#include <type_traits>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<quadclif::Rational> : GenericNumTraits<quadclif::Rational> {
  typedef quadclif::Rational Real;
  typedef quadclif::Rational NonInteger;
  typedef quadclif::Rational Nested;
  typedef quadclif::Rational Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace quadclif {

using ExactMatrix =
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace detail {

// Bareiss on a row-major integer matrix held in a flat buffer.  Destroys w.
inline Eigen::Index bareiss_rank(std::vector<mpz_class>& w, Eigen::Index rows,
                                 Eigen::Index cols) {
  auto at = [&](Eigen::Index i, Eigen::Index j) -> mpz_class& { return w[i * cols + j]; };
  Eigen::Index rank_found = 0;
  mpz_class prev(1);
  for (Eigen::Index col = 0; col < cols && rank_found < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank_found; i < rows; ++i) {
      if (at(i, col) == 0) continue;
      if (pivot < 0 || mpz_cmpabs(at(i, col).get_mpz_t(), at(pivot, col).get_mpz_t()) > 0)
        pivot = i;
    }
    if (pivot < 0) continue;
    if (pivot != rank_found)
      for (Eigen::Index j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank_found, j));
    const mpz_class& p = at(rank_found, col);
    for (Eigen::Index i = rank_found + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        mpz_class t = p * at(i, j) - at(i, col) * at(rank_found, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank_found;
  }
  return rank_found;
}

}  // namespace detail

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  static_assert(std::is_same_v<typename Derived::Scalar, Rational>,
                "rank() is defined for Rational matrices");
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<mpz_class> w(static_cast<size_t>(rows * cols));
  for (Eigen::Index i = 0; i < rows; ++i) {
    mpz_class scale(1);
    for (Eigen::Index j = 0; j < cols; ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              m.derived().coeff(i, j).denominator().get_mpz_t());
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Rational& x = m.derived().coeff(i, j);
      w[i * cols + j] = x.numerator() * mpz_class(scale / x.denominator());
    }
  }
  return detail::bareiss_rank(w, rows, cols);
}

template <typename Derived>
Eigen::Index kernel_dimension(const Eigen::MatrixBase<Derived>& m) {
  return m.cols() - rank(m);
}

}  // namespace quadclif

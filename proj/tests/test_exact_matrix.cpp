#include "quadclif/exact_matrix.hpp"
#include "quadclif/oracles.hpp"

#include <doctest.h>

#include <random>

using quadclif::ExactMatrix;
using quadclif::Int;
using quadclif::Rational;

namespace {

// Independent oracle: plain fraction-arithmetic Gaussian elimination.
Int gauss_rank(ExactMatrix m) {
  Int rank = 0;
  Int rows = m.rows(), cols = m.cols();
  for (Int col = 0; col < cols && rank < rows; ++col) {
    Int pivot = -1;
    for (Int i = rank; i < rows; ++i)
      if (m(i, col) != Rational(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Int i = rank + 1; i < rows; ++i) {
      if (m(i, col) == Rational(0)) continue;
      Rational f = m(i, col) / m(rank, col);
      for (Int j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

ExactMatrix fixed_rank2_matrix() {
  ExactMatrix m(4, 4);
  m << Rational(1), Rational(2), Rational(3), Rational(4),
       Rational(2), Rational(4), Rational(6), Rational(8),
       Rational(0), Rational(1, 3), Rational(1, 3), Rational(0),
       Rational(1), Rational(3), Rational(4), Rational(4);
  return m;
}

}  // namespace

TEST_CASE("rank of identity and zero") {
  ExactMatrix id = ExactMatrix::Identity(5, 5);
  CHECK(quadclif::rank(id) == 5);
  ExactMatrix z = ExactMatrix::Zero(3, 7);
  CHECK(quadclif::rank(z) == 0);
  CHECK(quadclif::kernel_dimension(z) == 7);
  ExactMatrix empty(0, 4);
  CHECK(quadclif::rank(empty) == 0);
  CHECK(quadclif::kernel_dimension(empty) == 4);
}

TEST_CASE("rank of a matrix with dependent rows") {
  // row2 = 2*row1 and row4 = row1 + 3*row3, so the rank is 2.
  ExactMatrix m = fixed_rank2_matrix();
  CHECK(quadclif::rank(m) == 2);
  CHECK(gauss_rank(m) == 2);
  CHECK(quadclif::kernel_dimension(m) == 2);
}

TEST_CASE("rank is invariant under transpose, row swaps and scaling") {
  ExactMatrix m = fixed_rank2_matrix();
  ExactMatrix t = m.transpose();
  CHECK(quadclif::rank(t) == 2);
  m.row(0).swap(m.row(3));
  CHECK(quadclif::rank(m) == 2);
  for (Int j = 0; j < m.cols(); ++j) m(1, j) *= Rational(-3, 7);
  CHECK(quadclif::rank(m) == 2);
}

TEST_CASE("fraction-free rank agrees with plain elimination on random input") {
  std::mt19937_64 gen(20240817);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix m(6, 5);
    for (Int i = 0; i < 6; ++i)
      for (Int j = 0; j < 5; ++j) {
        Int num = static_cast<Int>(gen() % 19) - 9;
        Int den = static_cast<Int>(gen() % 3) + 1;
        m(i, j) = Rational(num, den);
      }
    // Occasionally force a dependent row so low ranks get exercised too.
    if (trial % 3 == 0) m.row(5) = m.row(0) + m.row(1);
    Int expected = gauss_rank(m);
    CHECK(quadclif::rank(m) == expected);
    CHECK(quadclif::kernel_dimension(m) == 5 - expected);
  }
}

TEST_CASE("section matrix of explicit generic forms has a trivial kernel") {
  std::vector<std::array<Rational, 2>> forms = {
      {Rational(1), Rational(2)},
      {Rational(3), Rational(5)},
      {Rational(7), Rational(11)},
      {Rational(13), Rational(17)},
  };
  ExactMatrix sections = quadclif::steiner_section_matrix(1, 1, 3, 1, 0, forms);
  CHECK(sections.rows() == 16);
  CHECK(sections.cols() == 2);
  CHECK(quadclif::rank(sections) == 2);
  CHECK(quadclif::kernel_dimension(sections) == 0);
}

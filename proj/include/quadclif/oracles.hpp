#pragma once

// Brute-force cohomology oracles used to certify the bounds: Kunneth
// line-bundle tables, ideal sheaves of point sets via exact evaluation
// matrices, and randomized Steiner-like samples via exact section-matrix
// ranks.  Everything is deterministic in the seed.

#include "quadclif/bounds.hpp"
#include "quadclif/exact_matrix.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace quadclif {

// 0xC11FF0, the documented default for every seeded entry point.
inline constexpr std::uint64_t default_seed = 12656624;

struct CohomologyTable {
  Int h0 = 0, h1 = 0, h2 = 0;
  Int chi() const { return h0 - h1 + h2; }
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

CohomologyTable line_bundle_cohomology(Int a, Int b);

// Exponent pairs (i,j) in lexicographic order; (i,j) stands for the
// monomial x0^i x1^(a-i) y0^j y1^(b-j).  Empty when a < 0 or b < 0.
std::vector<std::pair<Int, Int>> monomial_basis(Int a, Int b);

struct PointOnQuadric {
  std::array<Rational, 2> x{Rational(1), Rational(0)};
  std::array<Rational, 2> y{Rational(1), Rational(0)};
};

bool projectively_equal(const PointOnQuadric& p, const PointOnQuadric& q);

// Deterministic general-position point sets with small integer coordinates.
std::vector<PointOnQuadric> random_points(Int count, std::uint64_t seed);

// One point per line: "x0 x1 y0 y1", each entry an integer or p/q;
// '#' starts a comment, blank lines are skipped.
std::vector<PointOnQuadric> parse_points(std::istream& in);

Int ideal_sheaf_h0(const std::vector<PointOnQuadric>& points, Int a, Int b);

struct DirectSum {
  struct Summand {
    BiDegree degree;
    Int multiplicity = 1;
  };
  std::vector<Summand> summands;
};

struct IdealSheafTwist {
  std::vector<PointOnQuadric> points;
  BiDegree twist;
};

// Cokernel of a matrix of forms O(k-1,l)^m (+) O(k,l-1)^n -> O(k,l)^{r+m+n}.
// Column j < m holds (1,0)-forms c0*x0 + c1*x1, column j >= m holds
// (0,1)-forms c0*y0 + c1*y1.  Entries are drawn from the seed unless
// explicit forms are supplied (row-major, (r+m+n) x (m+n) coefficient pairs).
struct SteinerLike {
  Int k = 0, l = 0, r = 1, m = 0, n = 0;
  std::uint64_t seed = default_seed;
  std::optional<std::vector<std::array<Rational, 2>>> forms;
};

using SheafModel = std::variant<DirectSum, IdealSheafTwist, SteinerLike>;

DirectSum flip(const DirectSum& ds);
CohomologyTable direct_sum_cohomology(const DirectSum& ds);
ChernCharacter model_character(const SheafModel& model);

struct MuExtremes {
  Rational mu_min;
  Rational mu_max;
  bool exact = false;  // exact for direct sums; otherwise the slope, trusting semistability
};
MuExtremes model_mu_extremes(const SheafModel& model);

// Largest twist index usable in the unbalanced bound for a globally
// generated direct sum oriented a <= b: min(min_i b_i, floor((b-a)/r)).
Int twist_index_j(const DirectSum& ds);

struct GenericityReport {
  Int attempts = 0;
  Int points_checked = 0;
  bool section_rank_full = false;
  bool pointwise_rank_full = false;
};

struct SteinerSample {
  Int h0 = 0;
  Int h1 = 0;
  std::uint64_t seed = 0;
  GenericityReport genericity;
};

// Exact h0/h1 of a generic Steiner-like sample via the section-matrix rank
// (valid for k,l >= 0).  Degenerate draws are resampled deterministically up
// to a retry limit, after which genericity_error carries the caller's seed.
SteinerSample steiner_h0_random(Int k, Int l, Int r, Int m, Int n, std::uint64_t seed);

// The section-level multiplication matrix for explicit forms; exposed so
// tests can rank hand-built maps.
ExactMatrix steiner_section_matrix(Int k, Int l, Int r, Int m, Int n,
                                   const std::vector<std::array<Rational, 2>>& forms);

struct BoundCheck {
  BoundKind kind;
  Int bound = 0;
  bool sharp = false;
  bool ok = false;  // h0 <= bound
};

struct AuditRecord {
  ChernCharacter character;
  MuExtremes mu;
  Int h0 = 0;
  std::optional<Int> h1;
  std::vector<BoundCheck> bounds;
  std::optional<Int> deficiency_vs_slope;
  std::optional<GenericityReport> genericity;  // present for randomized Steiner samples
  bool flipped = false;            // unbalanced bound evaluated on the flipped model
  bool vanishing_regime = false;   // mu_max < -1, so h0 must vanish outright
  bool mu_max_certified = true;    // false when mu.mu_max is only the slope on trust
  Int violations = 0;
  bool ok() const { return violations == 0; }
};

// Runs the exact oracle for the model, then evaluates every bound whose
// hypotheses the model satisfies, recording sharpness and violations.
AuditRecord model_bound_audit(const SheafModel& model);

}  // namespace quadclif

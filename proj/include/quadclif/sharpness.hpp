#pragma once

// Sharpness certificates for the general bound.
//
// A candidate consists of a balanced Steiner-like subsheaf shape S (twist
// degree k, rank r, excess (m,n)) and a quotient character Q.  S attains
// h0 = beta on its own; the seven checks below are the numeric conditions
// under which E with ch(E) = ch(S) + Q keeps all sections of S and gains
// none, so that E itself is a sharpness witness for beta at slope(E):
//
//   (1) S is balanced Steiner-like          (by construction of the shape)
//   (2) chi(Q) <= 0                         (necessary proxy for h0(Q) = 0)
//   (3) slope(S) is the best representable slope below slope(E) for rank(S)
//   (4) chi(Q) <= chi_threshold             (caller's safety margin)
//   (5) anticanonical slope strictly increases from S to Q
//   (6) gcd(rank S, c1(S).(-K)) = 1
//   (7) gcd(rank Q, c1(Q).(-K)) = 1
//
// c1.(-K) = 2a + 2b is always even, so every even-rank S fails (6).

#include "quadclif/bounds.hpp"

#include <array>
#include <vector>

namespace quadclif {

// Balanced Steiner-like shape: cokernel of
// O(k-1,k)^m (+) O(k,k-1)^n -> O(k,k)^{r+m+n}.
struct SteinerShape {
  Int k = 0;
  Int r = 1;
  Int m = 0;
  Int n = 0;

  friend bool operator==(const SteinerShape&, const SteinerShape&) = default;
};

ChernCharacter character(const SteinerShape& s);

struct SharpnessReport {
  bool balanced_steiner = false;
  bool chi_q_nonpositive = false;
  bool slope_is_best_representable = false;
  bool chi_q_below_threshold = false;
  bool anticanonical_slope_increases = false;
  bool s_pairing_coprime = false;
  bool q_pairing_coprime = false;

  std::array<bool, 7> flags() const {
    return {balanced_steiner,          chi_q_nonpositive, slope_is_best_representable,
            chi_q_below_threshold,     anticanonical_slope_increases,
            s_pairing_coprime,         q_pairing_coprime};
  }
  bool all() const {
    for (bool f : flags())
      if (!f) return false;
    return true;
  }
};

SharpnessReport check_sharpness_conditions(const SteinerShape& s, const ChernCharacter& q,
                                           Int chi_threshold);

enum class RankParity { any, even, odd };

struct SharpnessBox {
  Int max_k = 1;     // k in [0, max_k]
  Int max_rank = 3;  // rank(S) and rank(Q) in [1, max_rank]
  Int max_c1 = 3;    // c1(Q) components in [-max_c1, max_c1]
  Int chi_min = -8;  // chi(Q) enumerated over [chi_min, chi_max]
  Int chi_max = 0;
  RankParity s_rank_parity = RankParity::any;
};

struct SharpnessWitness {
  SteinerShape s;
  ChernCharacter q;
  SharpnessReport report;
};

// Enumerates the box in lexicographic order (k, rank S, m, n, rank Q,
// c1(Q).a, c1(Q).b, chi(Q)) and returns every tuple passing all seven
// checks.  chi(Q) <= chi_threshold filters monotonically, so tightening
// the threshold yields a subset of the looser run.
std::vector<SharpnessWitness> sharpness_search(const SharpnessBox& box, Int chi_threshold);

}  // namespace quadclif

#include "quadclif/sharpness.hpp"

#include <numeric>

namespace quadclif {

namespace {

bool coprime_with_pairing(Int rank, Int pair) {
  return std::gcd(rank, pair < 0 ? -pair : pair) == 1;
}

}  // namespace

ChernCharacter character(const SteinerShape& s) {
  return steiner_character(s.k, s.k, s.r, s.m, s.n);
}

SharpnessReport check_sharpness_conditions(const SteinerShape& s, const ChernCharacter& q,
                                           Int chi_threshold) {
  if (s.k < 0) throw domain_error("check_sharpness_conditions: k must be >= 0");
  if (q.rank < 1) throw domain_error("check_sharpness_conditions: rank(Q) must be >= 1");
  ChernCharacter sch = character(s);  // validates the shape
  ChernCharacter ech = sch + q;

  Int chi_q = euler_characteristic(q);

  SharpnessReport rep;
  rep.balanced_steiner = true;
  rep.chi_q_nonpositive = chi_q <= 0;
  rep.chi_q_below_threshold = chi_q <= chi_threshold;

  Rational mu_e = slope(ech);
  rep.slope_is_best_representable =
      mu_e >= Rational(0) && slope(sch) == best_representable_slope(mu_e, s.r, 0);

  rep.anticanonical_slope_increases =
      Rational(anticanonical_pairing(sch), sch.rank) <
      Rational(anticanonical_pairing(q), q.rank);

  rep.s_pairing_coprime = coprime_with_pairing(sch.rank, anticanonical_pairing(sch));
  rep.q_pairing_coprime = coprime_with_pairing(q.rank, anticanonical_pairing(q));
  return rep;
}

std::vector<SharpnessWitness> sharpness_search(const SharpnessBox& box, Int chi_threshold) {
  if (box.max_k < 0 || box.max_rank < 1 || box.max_c1 < 0 || box.chi_min > box.chi_max)
    throw domain_error("sharpness_search: empty box");
  std::vector<SharpnessWitness> out;
  for (Int k = 0; k <= box.max_k; ++k)
    for (Int rs = 1; rs <= box.max_rank; ++rs) {
      if (box.s_rank_parity == RankParity::even && rs % 2 != 0) continue;
      if (box.s_rank_parity == RankParity::odd && rs % 2 == 0) continue;
      for (Int m = 0; m < 2 * rs; ++m)
        for (Int n = 0; m + n < 2 * rs; ++n)
          for (Int rq = 1; rq <= box.max_rank; ++rq)
            for (Int qa = -box.max_c1; qa <= box.max_c1; ++qa)
              for (Int qb = -box.max_c1; qb <= box.max_c1; ++qb)
                for (Int chi = box.chi_min; chi <= box.chi_max; ++chi) {
                  ChernCharacter q{rq, {qa, qb}, Rational(chi - rq - qa - qb)};
                  SteinerShape s{k, rs, m, n};
                  SharpnessReport rep = check_sharpness_conditions(s, q, chi_threshold);
                  if (rep.all()) out.push_back({s, q, rep});
                }
    }
  return out;
}

}  // namespace quadclif

// Acceptance gate: ten numbered criteria, one PASS/FAIL line each, exit 1 on
// the first counterexample anywhere.  Every comparison is exact; the only
// tolerances are the per-criterion wall-clock budgets, pinned below next to
// the checks they time.

#include "quadclif/sharpness.hpp"
#include "quadclif/sweep.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using quadclif::beta;
using quadclif::ChernCharacter;
using quadclif::DirectSum;
using quadclif::Int;
using quadclif::Rational;

namespace {

struct Gate {
  int failures = 0;

  // Runs one criterion, enforcing its wall-clock budget.
  template <typename Body>
  void criterion(int number, const std::string& label, double budget_seconds, Body body) {
    std::ostringstream detail;
    bool pass = true;
    auto start = std::chrono::steady_clock::now();
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail << "exception: " << e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_seconds) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << "over budget";
    }
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, budget %g s", elapsed, budget_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
              << timing << "]";
    if (!pass && !detail.str().empty()) std::cout << " -- " << detail.str();
    std::cout << "\n";
  }
};

Int oracle_h0(const DirectSum& ds) { return direct_sum_cohomology(ds).h0; }

bool check_beta_table(std::ostream& detail) {
  for (Int r = 1; r <= 4; ++r)
    for (Int m = 0; m <= 4; ++m) {
      if (beta(r, Rational(m)) != r * (m + 1) * (m + 1)) {
        detail << "beta(" << r << "," << m << ") != r(m+1)^2";
        return false;
      }
      if (beta(r, Rational(2 * m + 1, 2)) != r * (m + 1) * (m + 2)) {
        detail << "beta(" << r << ",(2m+1)/2) wrong at r=" << r << " m=" << m;
        return false;
      }
    }
  return true;
}

bool check_balanced_sharpness(std::ostream& detail) {
  for (Int r = 1; r <= 4; ++r)
    for (Int m = 0; m <= 4; ++m)
      for (Int d = 0; d <= 1; ++d) {
        DirectSum ds{{{{m, m + d}, r}}};
        Int h0 = oracle_h0(ds);
        Int bound = quadclif::general_bound(r, Rational(2 * m + d, 2)).bound;
        if (h0 != bound) {
          detail << "O(" << m << "," << (m + d) << ")^" << r << ": h0=" << h0
                 << " bound=" << bound;
          return false;
        }
      }
  return true;
}

bool check_unbalanced_sharpness(std::ostream& detail) {
  for (Int r = 1; r <= 3; ++r)
    for (Int m = 0; m <= 6; ++m)
      for (Int n = m; n <= 6; ++n) {
        DirectSum ds{{{{m, n}, r}}};
        Int j = quadclif::twist_index_j(ds);
        Int bound = quadclif::unbalanced_bound(r, r * m, r * n, j).bound;
        Int h0 = oracle_h0(ds);
        if (h0 != bound) {
          detail << "O(" << m << "," << n << ")^" << r << " j=" << j << ": h0=" << h0
                 << " bound=" << bound;
          return false;
        }
      }
  return true;
}

bool check_steiner_maximality(std::ostream& detail) {
  for (Int k = 0; k <= 2; ++k)
    for (Int r = 1; r <= 4; ++r)
      for (Int m = 0; m < 2 * r; ++m)
        for (Int n = 0; m + n < 2 * r; ++n) {
          Rational mu(2 * r * k + m + n, 2 * r);
          Int expected = beta(r, mu);
          for (int trial = 0; trial < 5; ++trial) {
            auto s = quadclif::steiner_h0_random(k, k, r, m, n,
                                                 quadclif::default_seed + trial);
            if (s.h0 != expected || s.h1 != 0) {
              detail << "balanced k=" << k << " r=" << r << " m=" << m << " n=" << n
                     << " trial=" << trial << ": (h0,h1)=(" << s.h0 << "," << s.h1
                     << ") expected (" << expected << ",0)";
              return false;
            }
          }
        }
  for (Int k = 0; k <= 2; ++k)
    for (Int ell = 1; ell <= 2; ++ell)
      for (Int r = 1; r <= 4; ++r)
        for (Int m = 0; m < 2 * r; ++m)
          for (Int n = m; m + n < 2 * r && n - m < r; ++n) {
            Int l = k + ell;
            Rational mu_prime(2 * r * k + m + n, 2 * r);
            Int expected = beta(r, mu_prime) + ell * (r + r * k + m);
            auto s = quadclif::steiner_h0_random(k, l, r, m, n, quadclif::default_seed);
            if (s.h0 != expected ||
                s.h0 != quadclif::twisted_steiner_h0_formula(k, l, r, m, n)) {
              detail << "twisted k=" << k << " l=" << l << " r=" << r << " m=" << m
                     << " n=" << n << ": h0=" << s.h0 << " expected " << expected;
              return false;
            }
          }
  return true;
}

bool check_four_point_deficiency(std::ostream& detail) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto points = quadclif::random_points(4, seed);
    if (quadclif::ideal_sheaf_h0(points, 1, 1) != 0) {
      detail << "seed " << seed << ": four points fail to impose independent conditions";
      return false;
    }
    ChernCharacter ch{1, {1, 1}, Rational(-3)};
    Int alpha = quadclif::alpha(slope(ch));
    if (quadclif::deficiency(ch, 0) != alpha * alpha) {
      detail << "deficiency != alpha^2";
      return false;
    }
  }
  return true;
}

bool check_monotonicity_suites(std::ostream& detail) {
  for (const char* suite : {"beta-monotonicity", "theta"}) {
    auto res = quadclif::run_sweep(suite, quadclif::SweepOptions{});
    if (res.failures != 0) {
      for (const auto& row : res.rows)
        if (!row.pass) {
          detail << suite << ": " << row.params << " expected " << row.expected << " got "
                 << row.actual;
          break;
        }
      return false;
    }
  }
  return true;
}

bool check_structure_round_trip(std::ostream& detail) {
  for (Int k = 0; k <= 2; ++k)
    for (Int r = 1; r <= 4; ++r)
      for (Int m = 0; m < 2 * r; ++m)
        for (Int n = 0; m + n < 2 * r; ++n) {
          ChernCharacter ch = quadclif::steiner_character(k, k, r, m, n);
          auto s = quadclif::maximal_structure_check(ch);
          if (!s || s->k != k || s->m != m || s->n != n || s->r != r) {
            detail << "round trip lost (k,m,n) at k=" << k << " r=" << r << " m=" << m
                   << " n=" << n;
            return false;
          }
          bool sums_ok = s->e2 - s->e1a - s->e1b + s->e0 == ch.rank &&
                         s->e1a - s->e0 == ch.c1.a && s->e1b - s->e0 == ch.c1.b &&
                         Rational(s->e0) == ch.ch2 &&
                         s->e2 == quadclif::euler_characteristic(ch);
          if (!sums_ok) {
            detail << "alternating sums fail at k=" << k << " r=" << r << " m=" << m
                   << " n=" << n;
            return false;
          }
        }
  return true;
}

bool check_bn_decisions(std::ostream& detail) {
  using quadclif::BnDecision;
  for (Int k = 0; k <= 2; ++k)
    for (Int r = 1; r <= 4; ++r)
      for (Int m = 0; m < 2 * r; ++m)
        for (Int n = 0; m + n < 2 * r; ++n) {
          ChernCharacter ch = quadclif::steiner_character(k, k, r, m, n);
          Int b = beta(ch.rank, slope(ch));
          if (quadclif::bn_locus_decision(ch, b) != BnDecision::all_of_moduli) {
            detail << "maximal character not AllOfModuli at k=" << k << " r=" << r;
            return false;
          }
          if (quadclif::bn_locus_decision(ch, b + 1) != BnDecision::empty) {
            detail << "k = beta + 1 not Empty on a maximal character";
            return false;
          }
          ChernCharacter off = ch;
          off.ch2 = off.ch2 - Rational(1);  // chi drops below beta
          if (quadclif::bn_locus_decision(off, b) != BnDecision::empty) {
            detail << "chi != beta with k = beta should be Empty";
            return false;
          }
        }
  std::mt19937_64 gen(quadclif::default_seed);
  auto draw = [&](Int lo, Int hi) {
    return lo + static_cast<Int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  Int tested = 0;
  while (tested < 1000) {
    ChernCharacter ch{draw(1, 5), {draw(-10, 10), draw(-10, 10)}, Rational(draw(-10, 10))};
    if (slope(ch) < Rational(-1)) continue;
    ++tested;
    Int b = beta(ch.rank, slope(ch));
    Int k = b + 1 + draw(0, 4);
    if (quadclif::bn_locus_decision(ch, k) != BnDecision::empty) {
      detail << "k > beta not Empty: rank=" << ch.rank << " c1=(" << ch.c1.a << ","
             << ch.c1.b << ") k=" << k << " beta=" << b;
      return false;
    }
  }
  return true;
}

bool check_sharpness_box(std::ostream& detail) {
  quadclif::SharpnessBox box;  // max_k 1, max_rank 3, max_c1 3
  auto witnesses = quadclif::sharpness_search(box, -5);
  if (witnesses.empty()) {
    detail << "search returned no witnesses";
    return false;
  }
  for (const auto& w : witnesses)
    if (!quadclif::check_sharpness_conditions(w.s, w.q, -5).all()) {
      detail << "witness fails re-check: k=" << w.s.k << " r=" << w.s.r;
      return false;
    }
  box.s_rank_parity = quadclif::RankParity::even;
  if (!quadclif::sharpness_search(box, -5).empty()) {
    detail << "even-rank restriction should be empty";
    return false;
  }
  return true;
}

bool check_cli_master_audit(std::ostream& detail) {
  std::string cmd = std::string(QUADCLIF_CLI_BIN) + " sweep --suite all > /dev/null 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    detail << "popen failed";
    return false;
  }
  char buf[256];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    detail << "sweep --suite all exited " << (WIFEXITED(status) ? WEXITSTATUS(status) : -1);
    return false;
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.criterion(1, "beta-table closed forms, r in [1,4], m in [0,4]", 1.0, check_beta_table);
  gate.criterion(2, "general bound sharp on balanced sums O(m,m)^r, O(m,m+1)^r", 1.0,
                 check_balanced_sharpness);
  gate.criterion(3, "unbalanced bound sharp on O(m,n)^r, m <= n <= 6, r in [1,3]", 1.0,
                 check_unbalanced_sharpness);
  gate.criterion(4, "random balanced cokernels attain beta; twisted ones match the formula",
                 30.0, check_steiner_maximality);
  gate.criterion(5, "four seeded points have deficiency alpha^2 = 4, 50 seeds", 1.0,
                 check_four_point_deficiency);
  gate.criterion(6, "beta monotonicity and theta chain sweeps, zero violations", 5.0,
                 check_monotonicity_suites);
  gate.criterion(7, "maximal characters round-trip through the long resolution", 1.0,
                 check_structure_round_trip);
  gate.criterion(8, "Brill-Noether: nonempty iff chi = beta; Empty above beta", 1.0,
                 check_bn_decisions);
  gate.criterion(9, "sharpness witnesses exist and re-verify; even ranks yield none", 10.0,
                 check_sharpness_box);
  gate.criterion(10, "command-line master audit exits clean", 60.0, check_cli_master_audit);

  if (gate.failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << gate.failures << " criteria FAILED\n";
  return 1;
}

#include "quadclif/sweep.hpp"

#include <algorithm>
#include <thread>

namespace quadclif {

namespace {

struct RowSink {
  std::vector<CheckRow>* rows;
  const char* suite;

  void add(std::string params, std::string expected, std::string actual, bool pass) {
    rows->push_back({suite, std::move(params), std::move(expected), std::move(actual), pass});
  }
  void eq_int(std::string params, Int expected, Int actual) {
    add(std::move(params), std::to_string(expected), std::to_string(actual),
        expected == actual);
  }
  void holds(std::string params, std::string law, bool ok, std::string detail = "") {
    add(std::move(params), std::move(law),
        ok ? "holds" : (detail.empty() ? "fails" : "fails: " + detail), ok);
  }
};

std::string degree_label(Int a, Int b) {
  return "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void sweep_beta_monotonicity(std::vector<CheckRow>& rows) {
  RowSink sink{&rows, "beta-monotonicity"};
  for (Int r = 1; r <= 4; ++r)
    for (Int m = 0; m <= 4; ++m) {
      std::string base = "r=" + std::to_string(r) + " m=" + std::to_string(m);
      sink.eq_int(base + " mu=m", r * (m + 1) * (m + 1), beta(r, Rational(m)));
      sink.eq_int(base + " mu=m+1/2", r * (m + 1) * (m + 2), beta(r, Rational(2 * m + 1, 2)));
    }
  for (Int r = 1; r <= 6; ++r)
    for (Int p = -2 * r; p <= 8 * r; ++p) {
      Rational mu(p, 2 * r);
      std::string base = "r=" + std::to_string(r) + " mu=" + mu.to_string();
      Int a = alpha(mu);
      Int b = beta(r, mu);
      sink.holds(base, "beta integral and >= r*alpha^2",
                 Rational(b) == beta_rational(r, mu) && b >= r * a * a,
                 "beta=" + std::to_string(b));
      for (Int rp = 1; rp < r; ++rp) {
        Rational lo = beta_rational(rp, mu);
        Rational hi = beta_rational(r, mu);
        bool ok = lo <= hi && (mu < Rational(0) || lo < hi);
        sink.holds(base + " r'=" + std::to_string(rp),
                   "beta(r') <= beta(r), strictly for mu >= 0", ok,
                   lo.to_string() + " vs " + hi.to_string());
      }
      if (p < 8 * r) {
        Rational mu2(p + 1, 2 * r);
        Rational b1 = beta_rational(r, mu);
        Rational b2 = beta_rational(r, mu2);
        bool ok = b1 <= b2 && (mu2 < Rational(0) || b1 < b2);
        sink.holds(base + " step", "beta nondecreasing in mu, strictly once mu' >= 0", ok,
                   b1.to_string() + " vs " + b2.to_string());
      }
      for (Int s = 1; s <= r; ++s) {
        bool ok = best_representable_slope(mu, s, -1).floor() == mu.floor();
        if (p >= 0) ok = ok && best_representable_slope(mu, s, 0).floor() == mu.floor();
        sink.holds(base + " s=" + std::to_string(s), "floor(mu') = floor(mu)", ok);
      }
    }
}

void sweep_theta(std::vector<CheckRow>& rows) {
  RowSink sink{&rows, "theta"};
  for (Int r = 1; r <= 4; ++r)
    for (Int a = 0; a <= 10; ++a)
      for (Int b = a; b <= 10; ++b) {
        std::string base = "r=" + std::to_string(r) + " a=" + std::to_string(a) +
                           " b=" + std::to_string(b);
        Int span = (b - a) / r;
        for (Int ell = 1; ell <= span; ++ell) {
          Int prev = theta(r, a, b, ell - 1);
          Int cur = theta(r, a, b, ell);
          sink.holds(base + " l=" + std::to_string(ell),
                     "theta strictly decreases off the exception set",
                     cur < prev || theta_exception(r, a, b, ell),
                     "theta_l=" + std::to_string(cur) +
                         " theta_prev=" + std::to_string(prev));
        }
        Int general = beta(r, Rational(a + b, 2 * r));
        for (Int j = 0; j <= span; ++j) {
          Int prev = j == 0 ? general : theta(r, a, b, j - 1);
          sink.eq_int(base + " j=" + std::to_string(j),
                      std::min(prev, theta(r, a, b, j)), unbalanced_bound(r, a, b, j).bound);
        }
      }
}

void sweep_duality(std::vector<CheckRow>& rows, bool corrupt) {
  RowSink sink{&rows, "duality"};
  for (Int a = -6; a <= 6; ++a)
    for (Int b = -6; b <= 6; ++b) {
      CohomologyTable t = line_bundle_cohomology(a, b);
      if (corrupt && a == 0 && b == 0) t.h1 += 1;  // deliberate fixture corruption
      CohomologyTable dual = line_bundle_cohomology(-2 - a, -2 - b);
      std::string base = degree_label(a, b);
      sink.holds(base, "h^i(a,b) = h^{2-i}(-2-a,-2-b)",
                 t.h0 == dual.h2 && t.h1 == dual.h1 && t.h2 == dual.h0,
                 std::to_string(t.h0) + "/" + std::to_string(t.h1) + "/" +
                     std::to_string(t.h2));
      sink.eq_int(base + " chi", euler_characteristic(line_bundle_character(a, b)), t.chi());
      if (a >= 0 && b >= 0) sink.eq_int(base + " h0", (a + 1) * (b + 1), t.h0);
    }
}

struct AuditItem {
  std::string label;
  SheafModel model;
  std::optional<Int> expected_h0;
  std::optional<Int> expected_h1;
  bool slope_semistable = false;  // deficiency at the slope must be >= 0
};

std::vector<AuditItem> build_audit_items(const SweepOptions& opt) {
  std::vector<AuditItem> items;
  auto model_seed = [&]() { return opt.seed ^ static_cast<std::uint64_t>(items.size()); };

  for (Int r = 1; r <= opt.max_rank; ++r)
    for (Int m = 0; m <= opt.max_degree; ++m)
      for (Int n = 0; n <= opt.max_degree; ++n)
        items.push_back({degree_label(m, n) + "^" + std::to_string(r),
                         DirectSum{{{{m, n}, r}}},
                         r * (m + 1) * (n + 1),
                         std::nullopt,
                         true});

  struct Mixed {
    std::vector<DirectSum::Summand> summands;
    Int h0;
    bool semistable;
  };
  const Mixed mixed[] = {
      {{{{1, 0}, 1}, {{0, 1}, 1}}, 4, true},
      {{{{0, 2}, 1}, {{2, 0}, 1}}, 6, true},
      {{{{2, 3}, 1}, {{0, 1}, 1}}, 14, false},
      {{{{1, 1}, 1}, {{-1, 3}, 1}}, 4, true},  // equal slopes, so still semistable
      {{{{0, 0}, 1}, {{0, 3}, 1}}, 5, false},
      {{{{-2, -2}, 2}}, 0, true},
  };
  for (const auto& mx : mixed) {
    std::string label;
    for (const auto& s : mx.summands) {
      if (!label.empty()) label += "+";
      label += degree_label(s.degree.a, s.degree.b);
      if (s.multiplicity > 1) label += "^" + std::to_string(s.multiplicity);
    }
    items.push_back({label, DirectSum{mx.summands}, mx.h0, std::nullopt, mx.semistable});
  }

  Int maxab = std::min<Int>(opt.max_degree, 4);
  for (Int a = 0; a <= maxab; ++a)
    for (Int b = 0; b <= maxab; ++b) {
      Int full = (a + 1) * (b + 1);
      std::vector<Int> counts{1, full, full + 2};
      counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
      for (Int count : counts) {
        auto points = random_points(count, model_seed());
        items.push_back({"I_Z(" + std::to_string(a) + "," + std::to_string(b) +
                             ") #Z=" + std::to_string(count),
                         IdealSheafTwist{std::move(points), {a, b}},
                         std::max<Int>(full - count, 0),
                         std::nullopt,
                         true});
      }
    }

  for (Int k = 0; k <= 2; ++k)
    for (Int l = k; l <= k + 1; ++l)
      for (Int r = 1; r <= std::min<Int>(opt.max_rank, 3); ++r)
        for (Int m = 0; m < 2 * r; ++m)
          for (Int n = 0; m + n < 2 * r; ++n) {
            Int chi = (r + m + n) * (k + 1) * (l + 1) - m * k * (l + 1) - n * (k + 1) * l;
            items.push_back({"steiner k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                 " r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                 " n=" + std::to_string(n),
                             SteinerLike{k, l, r, m, n, model_seed(), std::nullopt},
                             chi,
                             0,
                             k == l});  // the unbalanced cokernels need not be semistable
          }
  return items;
}

std::vector<CheckRow> audit_rows_for(const AuditItem& item) {
  std::vector<CheckRow> rows;
  RowSink sink{&rows, "audit"};
  try {
    AuditRecord rec = model_bound_audit(item.model);
    if (item.expected_h0) sink.eq_int(item.label + " h0", *item.expected_h0, rec.h0);
    if (item.expected_h1 && rec.h1) sink.eq_int(item.label + " h1", *item.expected_h1, *rec.h1);
    if (rec.vanishing_regime)
      sink.holds(item.label, "mu_max < -1 forces h0 = 0", rec.h0 == 0,
                 "h0=" + std::to_string(rec.h0));
    for (const auto& bc : rec.bounds)
      sink.add(item.label + " [" + to_string(bc.kind) + "]",
               "h0 <= " + std::to_string(bc.bound),
               "h0 = " + std::to_string(rec.h0) + (bc.sharp ? " (sharp)" : ""), bc.ok);
    if (item.slope_semistable && rec.deficiency_vs_slope)
      sink.holds(item.label + " deficiency", "beta(slope) - h0 >= 0",
                 *rec.deficiency_vs_slope >= 0,
                 std::to_string(*rec.deficiency_vs_slope));
  } catch (const std::exception& e) {
    sink.holds(item.label, "audit completes", false, e.what());
  }
  return rows;
}

void sweep_audit(std::vector<CheckRow>& rows, const SweepOptions& opt) {
  auto items = build_audit_items(opt);
  std::vector<std::vector<CheckRow>> per(items.size());
  size_t workers = static_cast<size_t>(std::max<Int>(1, opt.threads));
  if (workers <= 1) {
    for (size_t i = 0; i < items.size(); ++i) per[i] = audit_rows_for(items[i]);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < items.size(); i += workers) per[i] = audit_rows_for(items[i]);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& r : per) rows.insert(rows.end(), r.begin(), r.end());
}

}  // namespace

const std::vector<std::string>& sweep_suite_names() {
  static const std::vector<std::string> names{"beta-monotonicity", "theta", "duality",
                                              "audit"};
  return names;
}

SweepResult run_sweep(const std::string& suite, const SweepOptions& opt) {
  SweepResult res;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "beta-monotonicity") sweep_beta_monotonicity(res.rows), known = true;
  if (all || suite == "theta") sweep_theta(res.rows), known = true;
  if (all || suite == "duality") sweep_duality(res.rows, opt.corrupt_duality_fixture), known = true;
  if (all || suite == "audit") sweep_audit(res.rows, opt), known = true;
  if (!known) throw domain_error("run_sweep: unknown suite '" + suite + "'");
  for (const auto& r : res.rows)
    if (!r.pass) ++res.failures;
  return res;
}

}  // namespace quadclif

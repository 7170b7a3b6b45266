#include "quadclif/bounds.hpp"

namespace quadclif {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw domain_error(msg);
}

Rational beta_value(Int r, const Rational& mu) {
  Int a = alpha(mu);
  return Rational(r * a) * (Rational(2) * mu - Rational(a) + Rational(2));
}

}  // namespace

Int alpha(const Rational& mu) {
  require(mu >= Rational(-1), "alpha: slope below -1");
  return mu.floor() + 1;
}

Int beta(Int r, const Rational& mu) {
  require(r >= 1, "beta: rank must be >= 1");
  require((Rational(2 * r) * mu).is_integer(), "beta: 2*r*mu must be integral");
  return beta_value(r, mu).to_int();
}

Rational beta_rational(Int r, const Rational& mu) {
  require(r >= 1, "beta: rank must be >= 1");
  return beta_value(r, mu);
}

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::general: return "general";
    case BoundKind::unbalanced: return "unbalanced";
    case BoundKind::stratified: return "stratified";
    case BoundKind::non_gg: return "non-gg";
  }
  return "?";
}

BoundReport general_bound(Int r, const Rational& mu_max) {
  BoundReport rep{BoundKind::general};
  rep.bound = beta(r, mu_max);
  rep.aux["alpha"] = Rational(alpha(mu_max));
  rep.aux["mu_max"] = mu_max;
  return rep;
}

namespace {

Int theta_span(Int r, Int a, Int b) { return (b - a) / r; }

Rational theta_slope(Int r, Int a, Int b, Int ell) {
  // mu''_ell = (a+b)/(2r) - (ell+1)/2; stays >= -1/2 for 0 <= ell <= span.
  return Rational(a + b - r * (ell + 1), 2 * r);
}

}  // namespace

Int theta(Int r, Int a, Int b, Int ell) {
  require(r >= 1, "theta: rank must be >= 1");
  require(0 <= a && a <= b, "theta: need 0 <= a <= b");
  require(0 <= ell && ell <= theta_span(r, a, b), "theta: index out of range");
  return beta(r, theta_slope(r, a, b, ell)) + (ell + 1) * (r + a);
}

bool theta_exception(Int r, Int a, Int b, Int ell) {
  require(r >= 1, "theta_exception: rank must be >= 1");
  require(0 <= a && a <= b, "theta_exception: need 0 <= a <= b");
  Int span = theta_span(r, a, b);
  require(1 <= ell && ell <= span, "theta_exception: index out of range");
  if (ell == span) return true;
  return ell == span - 1 &&
         theta_slope(r, a, b, ell - 1).floor() == theta_slope(r, a, b, ell).floor();
}

BoundReport unbalanced_bound(Int r, Int a, Int b, Int j, const Rational& mu_max) {
  require(r >= 1, "unbalanced_bound: rank must be >= 1");
  require(0 <= a && a <= b, "unbalanced_bound: need 0 <= a <= b");
  require(0 <= j && j <= theta_span(r, a, b), "unbalanced_bound: j out of range");
  require(mu_max >= Rational(a + b, 2 * r), "unbalanced_bound: mu_max below the slope");
  Rational mu2 = mu_max - Rational(j + 1, 2);
  require(mu2 >= Rational(-1), "unbalanced_bound: mu'' below -1");
  Int high = beta(r, mu2 + Rational(1, 2)) + j * (r + a);        // theta_{j-1}
  Int low = beta(r, mu2) + (j + 1) * (r + a);                    // theta_j
  BoundReport rep{BoundKind::unbalanced};
  rep.bound = std::min(high, low);
  rep.aux["mu_max"] = mu_max;
  rep.aux["mu''"] = mu2;
  rep.aux["j"] = Rational(j);
  rep.aux["theta_prev"] = Rational(high);
  rep.aux["theta_j"] = Rational(low);
  return rep;
}

BoundReport unbalanced_bound(Int r, Int a, Int b, Int j) {
  return unbalanced_bound(r, a, b, j, Rational(a + b, 2 * r));
}

Rational best_representable_slope(const Rational& mu_cap, Int s, Int floor_bound) {
  require(s >= 1, "best_representable_slope: s must be >= 1");
  require(floor_bound == 0 || floor_bound == -1,
          "best_representable_slope: floor_bound must be 0 or -1");
  require(mu_cap >= Rational(floor_bound), "best_representable_slope: mu_cap below floor");
  Rational best(floor_bound);
  for (Int d = 2; d <= 2 * s; d += 2) {
    Rational cand((mu_cap * Rational(d)).floor(), d);
    if (cand > best) best = cand;
  }
  return best;
}

namespace {

BoundReport floored_beta_report(BoundKind kind, Int s, const Rational& mu_prime) {
  Rational exact = beta_rational(s, mu_prime);
  BoundReport rep{kind};
  rep.bound = exact.floor();
  rep.aux["mu'"] = mu_prime;
  rep.aux["beta_exact"] = exact;
  return rep;
}

}  // namespace

BoundReport stratified_bound(Int s, const Rational& mu_max) {
  require(s >= 1, "stratified_bound: s must be >= 1");
  require(mu_max >= Rational(0), "stratified_bound: mu_max must be >= 0");
  return floored_beta_report(BoundKind::stratified, s,
                             best_representable_slope(mu_max, s, 0));
}

BoundReport non_gg_bound(Int r, const Rational& mu_max) {
  require(r >= 2, "non_gg_bound: rank must be >= 2");
  require(mu_max >= Rational(-1), "non_gg_bound: mu_max must be >= -1");
  return floored_beta_report(BoundKind::non_gg, r - 1,
                             best_representable_slope(mu_max, r - 1, -1));
}

const char* to_string(BnDecision d) {
  switch (d) {
    case BnDecision::empty: return "Empty";
    case BnDecision::all_of_moduli: return "AllOfModuli";
    case BnDecision::indeterminate: return "Indeterminate";
  }
  return "?";
}

BnDecision bn_locus_decision(const ChernCharacter& ch, Int k) {
  require(k >= 0, "bn_locus_decision: k must be >= 0");
  Rational mu = slope(ch);
  require(mu >= Rational(-1), "bn_locus_decision: slope below -1");
  Int b = beta(ch.rank, mu);
  if (k > b) return BnDecision::empty;
  if (mu >= Rational(0) && euler_characteristic(ch) == b)
    return BnDecision::all_of_moduli;
  if (mu >= Rational(0) && k == b) return BnDecision::empty;
  return BnDecision::indeterminate;
}

Int deficiency(const ChernCharacter& ch, Int h0) {
  return beta(ch.rank, slope(ch)) - h0;
}

ChernCharacter steiner_character(Int k, Int l, Int r, Int m, Int n) {
  require(r >= 1, "steiner_character: rank must be >= 1");
  require(m >= 0 && n >= 0 && m + n < 2 * r, "steiner_character: need 0 <= m+n < 2r");
  ChernCharacter ch;
  ch.rank = r;
  ch.c1 = {r * k + m, r * l + n};
  ch.ch2 = Rational((r + m + n) * k * l - m * (k - 1) * l - n * k * (l - 1));
  return ch;
}

std::optional<MaximalStructure> maximal_structure_check(const ChernCharacter& ch) {
  require(ch.rank >= 1, "maximal_structure_check: rank must be >= 1");
  Rational mu = slope(ch);
  require(mu >= Rational(0), "maximal_structure_check: slope must be >= 0");
  Int chi = euler_characteristic(ch);
  Int b = beta(ch.rank, mu);
  if (chi != b) return std::nullopt;
  Int k = alpha(mu) - 1;
  Int m = ch.c1.a - ch.rank * k;
  Int n = ch.c1.b - ch.rank * k;
  if (m < 0 || n < 0 || m + n >= 2 * ch.rank) return std::nullopt;
  MaximalStructure s;
  s.r = ch.rank;
  s.k = k;
  s.m = m;
  s.n = n;
  s.e0 = beta(ch.rank, mu - Rational(1));
  s.e1a = ch.c1.a + s.e0;
  s.e1b = ch.c1.b + s.e0;
  s.e2 = b;
  return s;
}

Int twisted_steiner_h0_formula(Int k, Int l, Int r, Int m, Int n) {
  require(r >= 1, "twisted_steiner_h0_formula: rank must be >= 1");
  require(k >= 0 && l >= k, "twisted_steiner_h0_formula: need 0 <= k <= l");
  require(m >= 0 && n >= 0 && m + n < 2 * r,
          "twisted_steiner_h0_formula: need 0 <= m+n < 2r");
  if (l > k)
    require(0 <= n - m && n - m < r,
            "twisted_steiner_h0_formula: unbalanced case needs 0 <= n-m < r");
  return (r + m + n) * (k + 1) * (l + 1) - m * k * (l + 1) - n * (k + 1) * l;
}

}  // namespace quadclif

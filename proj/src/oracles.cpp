#include "quadclif/oracles.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>
#include <string>

namespace quadclif {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

Int h0_p1(Int n) { return std::max<Int>(n + 1, 0); }
Int h1_p1(Int n) { return std::max<Int>(-n - 1, 0); }

// Deterministic coefficient stream: mt19937_64 has a pinned sequence and the
// explicit modulo keeps the mapping independent of the standard library.
struct SmallIntSampler {
  std::mt19937_64 gen;
  std::uint64_t span;
  Int shift;
  explicit SmallIntSampler(std::uint64_t seed, Int half_width = 9)
      : gen(seed), span(static_cast<std::uint64_t>(2 * half_width + 1)), shift(half_width) {}
  Int next() { return static_cast<Int>(gen() % span) - shift; }
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + (salt + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational pow_rational(const Rational& x, Int e) {
  Rational out(1);
  for (Int i = 0; i < e; ++i) out *= x;
  return out;
}

void validate_point(const PointOnQuadric& p) {
  require(p.x[0] != Rational(0) || p.x[1] != Rational(0),
          "point with zero first-factor coordinates");
  require(p.y[0] != Rational(0) || p.y[1] != Rational(0),
          "point with zero second-factor coordinates");
}

void validate_summands(const DirectSum& ds, const char* who) {
  require(!ds.summands.empty(), std::string(who) + ": empty direct sum");
  for (const auto& s : ds.summands)
    require(s.multiplicity >= 1, std::string(who) + ": multiplicity must be >= 1");
}

bool globally_generated(const DirectSum& ds) {
  for (const auto& s : ds.summands)
    if (s.degree.a < 0 || s.degree.b < 0) return false;
  return true;
}

}  // namespace

CohomologyTable line_bundle_cohomology(Int a, Int b) {
  CohomologyTable t;
  t.h0 = h0_p1(a) * h0_p1(b);
  t.h1 = h0_p1(a) * h1_p1(b) + h1_p1(a) * h0_p1(b);
  t.h2 = h1_p1(a) * h1_p1(b);
  return t;
}

std::vector<std::pair<Int, Int>> monomial_basis(Int a, Int b) {
  std::vector<std::pair<Int, Int>> basis;
  if (a < 0 || b < 0) return basis;
  basis.reserve(static_cast<size_t>((a + 1) * (b + 1)));
  for (Int i = 0; i <= a; ++i)
    for (Int j = 0; j <= b; ++j) basis.emplace_back(i, j);
  return basis;
}

bool projectively_equal(const PointOnQuadric& p, const PointOnQuadric& q) {
  return p.x[0] * q.x[1] == p.x[1] * q.x[0] && p.y[0] * q.y[1] == p.y[1] * q.y[0];
}

std::vector<PointOnQuadric> random_points(Int count, std::uint64_t seed) {
  require(count >= 0, "random_points: negative count");
  // Pairwise-distinct classes on each factor separately: that keeps every
  // evaluation matrix the callers build from these sets in general position,
  // including the box degrees (a,0) and (0,b) where a repeated ruling would
  // silently drop the rank.
  SmallIntSampler sampler(seed, 99);
  std::vector<PointOnQuadric> points;
  points.reserve(static_cast<size_t>(count));
  while (static_cast<Int>(points.size()) < count) {
    PointOnQuadric p;
    p.x = {Rational(sampler.next()), Rational(sampler.next())};
    p.y = {Rational(sampler.next()), Rational(sampler.next())};
    if ((p.x[0] == Rational(0) && p.x[1] == Rational(0)) ||
        (p.y[0] == Rational(0) && p.y[1] == Rational(0)))
      continue;
    bool clash = false;
    for (const auto& q : points)
      clash = clash || p.x[0] * q.x[1] == p.x[1] * q.x[0] ||
              p.y[0] * q.y[1] == p.y[1] * q.y[0];
    if (!clash) points.push_back(p);
  }
  return points;
}

std::vector<PointOnQuadric> parse_points(std::istream& in) {
  std::vector<PointOnQuadric> points;
  std::string line;
  Int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    require(tokens.size() == 4, "point file line " + std::to_string(lineno) +
                                    ": expected 4 coordinates, got " +
                                    std::to_string(tokens.size()));
    PointOnQuadric p;
    p.x = {Rational::parse(tokens[0]), Rational::parse(tokens[1])};
    p.y = {Rational::parse(tokens[2]), Rational::parse(tokens[3])};
    validate_point(p);
    points.push_back(p);
  }
  return points;
}

Int ideal_sheaf_h0(const std::vector<PointOnQuadric>& points, Int a, Int b) {
  for (size_t i = 0; i < points.size(); ++i) {
    validate_point(points[i]);
    for (size_t j = i + 1; j < points.size(); ++j)
      require(!projectively_equal(points[i], points[j]), "ideal_sheaf_h0: repeated point");
  }
  auto basis = monomial_basis(a, b);
  if (basis.empty()) return 0;
  ExactMatrix ev(static_cast<Eigen::Index>(points.size()),
                 static_cast<Eigen::Index>(basis.size()));
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const PointOnQuadric& p = points[pi];
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      auto [i, j] = basis[bi];
      ev(static_cast<Eigen::Index>(pi), static_cast<Eigen::Index>(bi)) =
          pow_rational(p.x[0], i) * pow_rational(p.x[1], a - i) *
          pow_rational(p.y[0], j) * pow_rational(p.y[1], b - j);
    }
  }
  return static_cast<Int>(basis.size()) - static_cast<Int>(rank(ev));
}

DirectSum flip(const DirectSum& ds) {
  DirectSum out = ds;
  for (auto& s : out.summands) s.degree = flip(s.degree);
  return out;
}

CohomologyTable direct_sum_cohomology(const DirectSum& ds) {
  validate_summands(ds, "direct_sum_cohomology");
  CohomologyTable total;
  for (const auto& s : ds.summands) {
    CohomologyTable t = line_bundle_cohomology(s.degree.a, s.degree.b);
    total.h0 += s.multiplicity * t.h0;
    total.h1 += s.multiplicity * t.h1;
    total.h2 += s.multiplicity * t.h2;
  }
  return total;
}

ChernCharacter model_character(const SheafModel& model) {
  if (const auto* ds = std::get_if<DirectSum>(&model)) {
    validate_summands(*ds, "model_character");
    ChernCharacter total;
    for (const auto& s : ds->summands)
      for (Int c = 0; c < s.multiplicity; ++c)
        total = total + line_bundle_character(s.degree.a, s.degree.b);
    return total;
  }
  if (const auto* iz = std::get_if<IdealSheafTwist>(&model)) {
    ChernCharacter ideal{1, {0, 0}, Rational(-static_cast<Int>(iz->points.size()))};
    return twist(ideal, iz->twist.a, iz->twist.b);
  }
  const auto& st = std::get<SteinerLike>(model);
  return steiner_character(st.k, st.l, st.r, st.m, st.n);
}

MuExtremes model_mu_extremes(const SheafModel& model) {
  MuExtremes out;
  if (const auto* ds = std::get_if<DirectSum>(&model)) {
    validate_summands(*ds, "model_mu_extremes");
    bool first = true;
    for (const auto& s : ds->summands) {
      Rational mu(s.degree.a + s.degree.b, 2);
      if (first || mu < out.mu_min) out.mu_min = mu;
      if (first || mu > out.mu_max) out.mu_max = mu;
      first = false;
    }
    out.exact = true;
    return out;
  }
  Rational mu = slope(model_character(model));
  out.mu_min = out.mu_max = mu;
  out.exact = false;
  return out;
}

Int twist_index_j(const DirectSum& ds) {
  validate_summands(ds, "twist_index_j");
  require(globally_generated(ds), "twist_index_j: summand with negative component");
  Int r = 0, a = 0, b = 0;
  Int min_b = ds.summands.front().degree.b;
  for (const auto& s : ds.summands) {
    r += s.multiplicity;
    a += s.multiplicity * s.degree.a;
    b += s.multiplicity * s.degree.b;
    min_b = std::min(min_b, s.degree.b);
  }
  require(a <= b, "twist_index_j: orient with flip so that a <= b");
  return std::min(min_b, (b - a) / r);
}

ExactMatrix steiner_section_matrix(Int k, Int l, Int r, Int m, Int n,
                                   const std::vector<std::array<Rational, 2>>& forms) {
  require(k >= 0 && l >= 0, "steiner_section_matrix: need k, l >= 0");
  require(r >= 1 && m >= 0 && n >= 0, "steiner_section_matrix: invalid shape");
  const Int copies = r + m + n;
  require(static_cast<Int>(forms.size()) == copies * (m + n),
          "steiner_section_matrix: forms size mismatch");
  const Int target_dim = (k + 1) * (l + 1);
  const Int cols_x = k * (l + 1);      // sections of O(k-1,l) per column block
  const Int cols_y = (k + 1) * l;      // sections of O(k,l-1) per column block
  const Int cols = m * cols_x + n * cols_y;
  ExactMatrix mat = ExactMatrix::Constant(copies * target_dim, cols, Rational(0));
  auto target_index = [&](Int copy, Int p, Int q) { return copy * target_dim + p * (l + 1) + q; };
  Int col = 0;
  for (Int sigma = 0; sigma < m + n; ++sigma) {
    bool xblock = sigma < m;
    Int pmax = xblock ? k - 1 : k;
    Int qmax = xblock ? l : l - 1;
    for (Int p = 0; p <= pmax; ++p)
      for (Int q = 0; q <= qmax; ++q) {
        for (Int copy = 0; copy < copies; ++copy) {
          const auto& f = forms[static_cast<size_t>(copy * (m + n) + sigma)];
          if (xblock) {
            // (c0*x0 + c1*x1) * x0^p x1^(k-1-p) y0^q y1^(l-q)
            mat(target_index(copy, p + 1, q), col) += f[0];
            mat(target_index(copy, p, q), col) += f[1];
          } else {
            // (c0*y0 + c1*y1) * x0^p x1^(k-p) y0^q y1^(l-1-q)
            mat(target_index(copy, p, q + 1), col) += f[0];
            mat(target_index(copy, p, q), col) += f[1];
          }
        }
        ++col;
      }
  }
  return mat;
}

namespace {

std::vector<std::array<Rational, 2>> sample_forms(Int copies, Int m, Int n,
                                                  std::uint64_t seed) {
  SmallIntSampler sampler(seed);
  std::vector<std::array<Rational, 2>> forms(static_cast<size_t>(copies * (m + n)));
  for (auto& f : forms) f = {Rational(sampler.next()), Rational(sampler.next())};
  return forms;
}

bool pointwise_full_rank(Int copies, Int m, Int n,
                         const std::vector<std::array<Rational, 2>>& forms,
                         const std::vector<PointOnQuadric>& probes) {
  if (m + n == 0) return true;
  for (const auto& p : probes) {
    ExactMatrix at(copies, m + n);
    for (Int copy = 0; copy < copies; ++copy)
      for (Int sigma = 0; sigma < m + n; ++sigma) {
        const auto& f = forms[static_cast<size_t>(copy * (m + n) + sigma)];
        at(copy, sigma) = sigma < m ? f[0] * p.x[0] + f[1] * p.x[1]
                                    : f[0] * p.y[0] + f[1] * p.y[1];
      }
    if (rank(at) != m + n) return false;
  }
  return true;
}

}  // namespace

SteinerSample steiner_h0_random(Int k, Int l, Int r, Int m, Int n, std::uint64_t seed) {
  require(k >= 0 && l >= 0, "steiner_h0_random: need k, l >= 0");
  require(r >= 1 && m >= 0 && n >= 0 && m + n < 2 * r,
          "steiner_h0_random: need 0 <= m+n < 2r");
  const Int copies = r + m + n;
  const Int retry_limit = 8;
  const Int probe_count = 20;
  for (Int attempt = 0; attempt < retry_limit; ++attempt) {
    std::uint64_t attempt_seed = attempt == 0 ? seed : derive_seed(seed, attempt);
    auto forms = sample_forms(copies, m, n, attempt_seed);
    ExactMatrix sections = steiner_section_matrix(k, l, r, m, n, forms);
    Int section_rank = static_cast<Int>(rank(sections));
    bool section_full = section_rank == static_cast<Int>(sections.cols());
    auto probes = random_points(probe_count, derive_seed(attempt_seed, 0xA11CE));
    bool pointwise_full = pointwise_full_rank(copies, m, n, forms, probes);
    if (section_full && pointwise_full) {
      SteinerSample sample;
      sample.h0 = copies * (k + 1) * (l + 1) - section_rank;
      sample.h1 = static_cast<Int>(sections.cols()) - section_rank;
      sample.seed = seed;
      sample.genericity = {attempt + 1, probe_count, true, true};
      return sample;
    }
  }
  throw genericity_error("steiner_h0_random: no generic sample within retry limit", seed);
}

AuditRecord model_bound_audit(const SheafModel& model) {
  AuditRecord rec;
  rec.character = model_character(model);
  rec.mu = model_mu_extremes(model);

  if (const auto* ds = std::get_if<DirectSum>(&model)) {
    CohomologyTable t = direct_sum_cohomology(*ds);
    rec.h0 = t.h0;
    rec.h1 = t.h1;
  } else if (const auto* iz = std::get_if<IdealSheafTwist>(&model)) {
    rec.h0 = ideal_sheaf_h0(iz->points, iz->twist.a, iz->twist.b);
  } else {
    const auto& st = std::get<SteinerLike>(model);
    SteinerSample sample = st.forms
        ? SteinerSample{}  // explicit forms are ranked directly below
        : steiner_h0_random(st.k, st.l, st.r, st.m, st.n, st.seed);
    if (st.forms) {
      ExactMatrix sections = steiner_section_matrix(st.k, st.l, st.r, st.m, st.n, *st.forms);
      Int section_rank = static_cast<Int>(rank(sections));
      sample.h0 = (st.r + st.m + st.n) * (st.k + 1) * (st.l + 1) - section_rank;
      sample.h1 = static_cast<Int>(sections.cols()) - section_rank;
      sample.seed = st.seed;
    }
    rec.h0 = sample.h0;
    rec.h1 = sample.h1;
    if (!st.forms) rec.genericity = sample.genericity;
  }

  auto add_check = [&](const BoundReport& rep) {
    BoundCheck c{rep.kind, rep.bound, rec.h0 == rep.bound, rec.h0 <= rep.bound};
    if (!c.ok) ++rec.violations;
    rec.bounds.push_back(c);
  };

  // mu_max is certified exact for direct sums, equals the slope for rank-1
  // models, and is the slope of the balanced Steiner cokernel by the
  // classification of maximal sheaves.  An unbalanced cokernel (k != l) need
  // not be semistable, so every mu_max-conditional bound is skipped there.
  if (const auto* st = std::get_if<SteinerLike>(&model))
    rec.mu_max_certified = st->k == st->l;

  if (rec.mu_max_certified) {
    if (rec.mu.mu_max < Rational(-1)) {
      rec.vanishing_regime = true;
      if (rec.h0 > 0) ++rec.violations;
    } else {
      add_check(general_bound(rec.character.rank, rec.mu.mu_max));
    }
  }

  const auto* ds = std::get_if<DirectSum>(&model);
  bool ds_gg = ds && globally_generated(*ds);
  if (ds_gg) {
    DirectSum oriented = *ds;
    ChernCharacter och = rec.character;
    if (och.c1.a > och.c1.b) {
      oriented = flip(*ds);
      och = flip(och);
      rec.flipped = true;
    }
    Int j = twist_index_j(oriented);
    add_check(unbalanced_bound(och.rank, och.c1.a, och.c1.b, j, rec.mu.mu_max));
  }

  if (rec.mu_max_certified && rec.h0 > 0 && rec.mu.mu_max >= Rational(0)) {
    Int s = rec.character.rank;
    if (ds) {
      s = 0;
      for (const auto& sm : ds->summands)
        if (sm.degree.a >= 0 && sm.degree.b >= 0) s += sm.multiplicity;
    } else if (std::holds_alternative<IdealSheafTwist>(model)) {
      s = 1;
    }
    if (s >= 1) add_check(stratified_bound(s, rec.mu.mu_max));
  }

  bool gg = ds ? ds_gg
               : (std::holds_alternative<IdealSheafTwist>(model) ? rec.h0 > 0 : true);
  if (rec.mu_max_certified && !gg && rec.character.rank >= 2 &&
      rec.mu.mu_max >= Rational(-1))
    add_check(non_gg_bound(rec.character.rank, rec.mu.mu_max));

  if (rec.character.rank >= 1 && slope(rec.character) >= Rational(-1))
    rec.deficiency_vs_slope = deficiency(rec.character, rec.h0);

  return rec;
}

}  // namespace quadclif

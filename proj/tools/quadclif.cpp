// Command-line front end: single-query bound/BN computations, oracle runs,
// verification sweeps, and the sharpness search.  Every report is available
// as text, JSON, or CSV; JSON field names are stable and runs are
// deterministic in the seed (timestamps are suppressed under --reproducible).

#include "quadclif/oracles.hpp"
#include "quadclif/sharpness.hpp"
#include "quadclif/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using quadclif::BiDegree;
using quadclif::Int;
using quadclif::Rational;
using json = nlohmann::ordered_json;

Int parse_int(std::string_view text, const char* what) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw quadclif::domain_error(std::string(what) + ": malformed integer '" +
                                 std::string(text) + "'");
  return value;
}

BiDegree parse_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw quadclif::domain_error(std::string(what) + ": expected 'a,b', got '" + text + "'");
  return {parse_int(std::string_view(text).substr(0, comma), what),
          parse_int(std::string_view(text).substr(comma + 1), what)};
}

json character_json(const quadclif::ChernCharacter& ch) {
  json j;
  j["rank"] = ch.rank;
  j["c1"] = {ch.c1.a, ch.c1.b};
  j["ch2"] = ch.ch2.to_string();
  if (ch.ch2.is_integer()) j["chi"] = euler_characteristic(ch);
  return j;
}

json bounds_json(const quadclif::AuditRecord& rec) {
  json list = json::array();
  for (const auto& bc : rec.bounds) {
    json row;
    row["theorem"] = to_string(bc.kind);
    row["bound"] = bc.bound;
    row["sharp"] = bc.sharp;
    row["ok"] = bc.ok;
    list.push_back(std::move(row));
  }
  return list;
}

json audit_json(const quadclif::AuditRecord& rec) {
  json j;
  j["character"] = character_json(rec.character);
  j[rec.mu_max_certified ? "mu_max" : "mu"] = rec.mu.mu_max.to_string();
  if (rec.mu.exact) j["mu_min"] = rec.mu.mu_min.to_string();
  j["oracle_h0"] = rec.h0;
  if (rec.h1) j["oracle_h1"] = *rec.h1;
  if (rec.vanishing_regime) j["vanishing_regime"] = true;
  j["bounds"] = bounds_json(rec);
  if (rec.deficiency_vs_slope) j["deficiency"] = *rec.deficiency_vs_slope;
  if (rec.genericity) {
    json g;
    g["attempts"] = rec.genericity->attempts;
    g["points_checked"] = rec.genericity->points_checked;
    g["section_rank_full"] = rec.genericity->section_rank_full;
    g["pointwise_rank_full"] = rec.genericity->pointwise_rank_full;
    j["genericity"] = std::move(g);
  }
  if (rec.flipped) j["flipped"] = true;
  j["ok"] = rec.ok();
  return j;
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void render(const json& env, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << env.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (env.contains("rows")) {
      os << "suite,params,expected,actual,pass\n";
      for (const auto& row : env["rows"])
        os << csv_quote(row["suite"].get<std::string>()) << ","
           << csv_quote(row["params"].get<std::string>()) << ","
           << csv_quote(row["expected"].get<std::string>()) << ","
           << csv_quote(row["actual"].get<std::string>()) << ","
           << (row["pass"].get<bool>() ? "true" : "false") << "\n";
      return;
    }
    os << "key,value\n";
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(env, "", flat);
    for (const auto& [key, value] : flat) os << csv_quote(key) << "," << csv_quote(value) << "\n";
    return;
  }
  // text
  for (const auto& [key, value] : env.items()) {
    if (key == "rows") {
      for (const auto& row : value)
        os << (row["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
           << row["suite"].get<std::string>() << "  " << row["params"].get<std::string>()
           << "  |  expected: " << row["expected"].get<std::string>()
           << "  |  actual: " << row["actual"].get<std::string>() << "\n";
      continue;
    }
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(value, key, flat);
    for (const auto& [k, v] : flat) os << k << ": " << v << "\n";
  }
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = quadclif::default_seed;
  std::string output;
  bool reproducible = false;
};

json make_envelope(const char* command, const GlobalOptions& g) {
  json env;
  env["command"] = command;
  if (!g.reproducible) env["generated_at"] = utc_timestamp();
  return env;
}

int emit(const json& env, const GlobalOptions& g, int exit_code) {
  if (g.output.empty()) {
    render(env, g.format, std::cout);
  } else {
    std::ofstream out(g.output);
    if (!out) throw quadclif::domain_error("cannot open output file '" + g.output + "'");
    render(env, g.format, out);
  }
  return exit_code;
}

struct BoundArgs {
  std::string kind = "general";
  Int rank = 0;
  std::string mu_text;
  std::string c1_text;
  Int j = 0;
  bool has_j = false;
};

int cmd_bound(const BoundArgs& a, const GlobalOptions& g) {
  json env = make_envelope("bound", g);
  env["rank"] = a.rank;

  std::optional<BiDegree> c1;
  if (!a.c1_text.empty()) {
    c1 = parse_pair(a.c1_text, "--c1");
    env["c1"] = {c1->a, c1->b};
  }
  std::optional<Rational> mu;
  if (!a.mu_text.empty()) mu = Rational::parse(a.mu_text);

  quadclif::BoundReport report;
  if (a.kind == "unbalanced") {
    if (!c1) throw quadclif::domain_error("--kind unbalanced requires --c1 a,b");
    BiDegree d = *c1;
    bool flipped = d.a > d.b;
    if (flipped) d = flip(d);
    Int j = a.has_j ? a.j : (d.b - d.a) / a.rank;
    report = quadclif::unbalanced_bound(a.rank, d.a, d.b, j);
    env["j"] = j;
    if (flipped) env["flipped"] = true;
  } else {
    if (!mu) {
      if (!c1) throw quadclif::domain_error("--kind " + a.kind + " requires --mu or --c1");
      if (a.rank < 1) throw quadclif::domain_error("--c1 needs --rank >= 1 to derive the slope");
      mu = Rational(c1->a + c1->b, 2 * a.rank);
    }
    env["mu"] = mu->to_string();
    if (a.kind == "general") report = quadclif::general_bound(a.rank, *mu);
    else if (a.kind == "stratified") report = quadclif::stratified_bound(a.rank, *mu);
    else if (a.kind == "non-gg") report = quadclif::non_gg_bound(a.rank, *mu);
    else throw quadclif::domain_error("unknown bound kind '" + a.kind + "'");
  }

  env["theorem"] = to_string(report.kind);
  env["bound"] = report.bound;
  json aux;
  for (const auto& [name, value] : report.aux) aux[name] = value.to_string();
  env["aux"] = std::move(aux);
  return emit(env, g, 0);
}

struct BnArgs {
  Int rank = 0;
  std::string c1_text;
  Int chi = 0;
  Int k = 0;
};

int cmd_bn(const BnArgs& a, const GlobalOptions& g) {
  BiDegree c1 = parse_pair(a.c1_text, "--c1");
  quadclif::ChernCharacter ch{a.rank, c1, Rational(a.chi - a.rank - c1.a - c1.b)};
  json env = make_envelope("bn", g);
  env["character"] = character_json(ch);
  env["k"] = a.k;
  env["beta"] = quadclif::beta(a.rank, slope(ch));
  env["decision"] = to_string(quadclif::bn_locus_decision(ch, a.k));
  return emit(env, g, 0);
}

struct SteinerArgs {
  Int k = 0, l = 0, r = 1, m = 0, n = 0;
};

int cmd_steiner(const SteinerArgs& a, const GlobalOptions& g) {
  quadclif::SteinerLike model{a.k, a.l, a.r, a.m, a.n, g.seed, std::nullopt};
  quadclif::AuditRecord rec = quadclif::model_bound_audit(model);
  json env = make_envelope("steiner", g);
  env["seed"] = g.seed;
  env["k"] = a.k;
  env["l"] = a.l;
  env["r"] = a.r;
  env["m"] = a.m;
  env["n"] = a.n;
  env.update(audit_json(rec));
  return emit(env, g, rec.ok() ? 0 : 1);
}

struct IdealArgs {
  std::string points_file;
  Int random_count = -1;
  std::string twist_text;
};

int cmd_ideal(const IdealArgs& a, const GlobalOptions& g) {
  BiDegree twist = parse_pair(a.twist_text, "--twist");
  std::vector<quadclif::PointOnQuadric> points;
  json env = make_envelope("ideal", g);
  if (a.random_count >= 0) {
    points = quadclif::random_points(a.random_count, g.seed);
    env["seed"] = g.seed;
  } else if (!a.points_file.empty()) {
    std::ifstream in(a.points_file);
    if (!in) throw quadclif::domain_error("cannot open points file '" + a.points_file + "'");
    points = quadclif::parse_points(in);
    env["points_file"] = a.points_file;
  } else {
    throw quadclif::domain_error("ideal requires --points FILE or --random-points N");
  }
  env["twist"] = {twist.a, twist.b};
  json pts = json::array();
  for (const auto& p : points)
    pts.push_back({p.x[0].to_string(), p.x[1].to_string(), p.y[0].to_string(),
                   p.y[1].to_string()});
  env["points"] = std::move(pts);
  quadclif::AuditRecord rec =
      quadclif::model_bound_audit(quadclif::IdealSheafTwist{std::move(points), twist});
  env.update(audit_json(rec));
  return emit(env, g, rec.ok() ? 0 : 1);
}

struct SweepArgs {
  std::string suite = "all";
  Int max_degree = 4;
  Int max_rank = 3;
  Int threads = 1;
  bool corrupt_fixture = false;
};

int cmd_sweep(const SweepArgs& a, const GlobalOptions& g) {
  quadclif::SweepOptions opt;
  opt.seed = g.seed;
  opt.max_degree = a.max_degree;
  opt.max_rank = a.max_rank;
  opt.threads = a.threads;
  opt.corrupt_duality_fixture = a.corrupt_fixture;
  quadclif::SweepResult result = quadclif::run_sweep(a.suite, opt);

  json env = make_envelope("sweep", g);
  env["seed"] = g.seed;
  env["suite"] = a.suite;
  env["max_degree"] = a.max_degree;
  env["max_rank"] = a.max_rank;
  json rows = json::array();
  for (const auto& row : result.rows) {
    json r;
    r["suite"] = row.suite;
    r["params"] = row.params;
    r["expected"] = row.expected;
    r["actual"] = row.actual;
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  env["rows"] = std::move(rows);
  env["checks"] = result.rows.size();
  env["failures"] = result.failures;
  return emit(env, g, result.failures == 0 ? 0 : 1);
}

struct SharpnessArgs {
  Int max_k = 1;
  Int max_rank = 3;
  Int max_c1 = 3;
  Int chi_threshold = 0;
  Int chi_min = -8;
  Int chi_max = 0;
  std::string parity = "any";
};

int cmd_sharpness(const SharpnessArgs& a, const GlobalOptions& g) {
  quadclif::SharpnessBox box;
  box.max_k = a.max_k;
  box.max_rank = a.max_rank;
  box.max_c1 = a.max_c1;
  box.chi_min = a.chi_min;
  box.chi_max = a.chi_max;
  box.s_rank_parity = a.parity == "even"  ? quadclif::RankParity::even
                      : a.parity == "odd" ? quadclif::RankParity::odd
                                          : quadclif::RankParity::any;
  auto witnesses = quadclif::sharpness_search(box, a.chi_threshold);

  json env = make_envelope("sharpness-search", g);
  json jbox;
  jbox["max_k"] = a.max_k;
  jbox["max_rank"] = a.max_rank;
  jbox["max_c1"] = a.max_c1;
  jbox["chi_min"] = a.chi_min;
  jbox["chi_max"] = a.chi_max;
  jbox["s_rank_parity"] = a.parity;
  env["box"] = std::move(jbox);
  env["chi_threshold"] = a.chi_threshold;
  env["count"] = witnesses.size();
  json list = json::array();
  for (const auto& w : witnesses) {
    json jw;
    json js;
    js["k"] = w.s.k;
    js["r"] = w.s.r;
    js["m"] = w.s.m;
    js["n"] = w.s.n;
    jw["s"] = std::move(js);
    jw["q"] = character_json(w.q);
    json cond;
    cond["balanced_steiner"] = w.report.balanced_steiner;
    cond["chi_q_nonpositive"] = w.report.chi_q_nonpositive;
    cond["slope_is_best_representable"] = w.report.slope_is_best_representable;
    cond["chi_q_below_threshold"] = w.report.chi_q_below_threshold;
    cond["anticanonical_slope_increases"] = w.report.anticanonical_slope_increases;
    cond["s_pairing_coprime"] = w.report.s_pairing_coprime;
    cond["q_pairing_coprime"] = w.report.q_pairing_coprime;
    jw["conditions"] = std::move(cond);
    list.push_back(std::move(jw));
  }
  env["witnesses"] = std::move(list);
  return emit(env, g, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact section bounds and cohomology oracles on the smooth quadric"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized oracles")->capture_default_str();
  app.add_option("--output", g.output, "Write the report to a file instead of stdout");
  app.add_flag("--reproducible", g.reproducible, "Suppress the timestamp field");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate one section bound");
  bound->fallthrough();
  bound->add_option("--kind", bound_args.kind, "Bound family")
      ->check(CLI::IsMember({"general", "unbalanced", "stratified", "non-gg"}))
      ->capture_default_str();
  bound->add_option("--rank", bound_args.rank, "Rank (or stratum rank for stratified)")
      ->required();
  bound->add_option("--mu", bound_args.mu_text, "Slope as p/q or integer");
  bound->add_option("--c1", bound_args.c1_text, "First Chern class a,b");
  auto* bound_j = bound->add_option("--j", bound_args.j, "Twist index for the unbalanced bound");

  BnArgs bn_args;
  auto* bn = app.add_subcommand("bn", "Decide a Brill-Noether locus");
  bn->fallthrough();
  bn->add_option("--rank", bn_args.rank)->required();
  bn->add_option("--c1", bn_args.c1_text, "First Chern class a,b")->required();
  bn->add_option("--chi", bn_args.chi, "Euler characteristic")->required();
  bn->add_option("--k", bn_args.k, "Requested number of sections")->required();

  SteinerArgs steiner_args;
  auto* steiner = app.add_subcommand("steiner", "Rank a random Steiner-like sample");
  steiner->fallthrough();
  steiner->add_option("--k", steiner_args.k)->required();
  steiner->add_option("--l", steiner_args.l)->required();
  steiner->add_option("--r", steiner_args.r)->required();
  steiner->add_option("--m", steiner_args.m)->required();
  steiner->add_option("--n", steiner_args.n)->required();

  IdealArgs ideal_args;
  auto* ideal = app.add_subcommand("ideal", "Ideal sheaf of a point set, twisted");
  ideal->fallthrough();
  auto* points_opt = ideal->add_option("--points", ideal_args.points_file, "Point-set file");
  ideal->add_option("--random-points", ideal_args.random_count, "Number of seeded points")
      ->excludes(points_opt);
  ideal->add_option("--twist", ideal_args.twist_text, "Twist a,b")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run verification suites");
  sweep->fallthrough();
  sweep->add_option("--suite", sweep_args.suite, "beta-monotonicity|theta|duality|audit|all")
      ->capture_default_str();
  sweep->add_option("--max-degree", sweep_args.max_degree, "Audit degree box")
      ->capture_default_str();
  sweep->add_option("--max-rank", sweep_args.max_rank, "Audit rank box")->capture_default_str();
  sweep->add_option("--threads", sweep_args.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_flag("--corrupt-fixture", sweep_args.corrupt_fixture)->group("");

  SharpnessArgs sharp_args;
  auto* sharp = app.add_subcommand("sharpness-search", "Enumerate sharpness witnesses");
  sharp->fallthrough();
  sharp->add_option("--max-k", sharp_args.max_k)->capture_default_str();
  sharp->add_option("--max-rank", sharp_args.max_rank)->capture_default_str();
  sharp->add_option("--max-c1", sharp_args.max_c1)->capture_default_str();
  sharp->add_option("--chi-threshold", sharp_args.chi_threshold)->capture_default_str();
  sharp->add_option("--chi-min", sharp_args.chi_min)->capture_default_str();
  sharp->add_option("--chi-max", sharp_args.chi_max)->capture_default_str();
  sharp->add_option("--s-rank-parity", sharp_args.parity, "any|even|odd")
      ->check(CLI::IsMember({"any", "even", "odd"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(bound)) {
      bound_args.has_j = bound_j->count() > 0;
      return cmd_bound(bound_args, g);
    }
    if (app.got_subcommand(bn)) return cmd_bn(bn_args, g);
    if (app.got_subcommand(steiner)) return cmd_steiner(steiner_args, g);
    if (app.got_subcommand(ideal)) return cmd_ideal(ideal_args, g);
    if (app.got_subcommand(sweep)) return cmd_sweep(sweep_args, g);
    if (app.got_subcommand(sharp)) return cmd_sharpness(sharp_args, g);
  } catch (const quadclif::genericity_error& e) {
    std::cerr << "genericity failure: " << e.what() << " (seed " << e.seed << ")" << std::endl;
    return 3;
  } catch (const quadclif::domain_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}

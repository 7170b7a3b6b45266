#include "quadclif/sweep.hpp"

#include <doctest.h>

using quadclif::CheckRow;
using quadclif::SweepOptions;
using quadclif::SweepResult;

namespace {

bool same_rows(const std::vector<CheckRow>& x, const std::vector<CheckRow>& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i].suite != y[i].suite || x[i].params != y[i].params ||
        x[i].expected != y[i].expected || x[i].actual != y[i].actual ||
        x[i].pass != y[i].pass)
      return false;
  return true;
}

}  // namespace

TEST_CASE("suite roster") {
  const auto& names = quadclif::sweep_suite_names();
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "beta-monotonicity");
  CHECK(names[1] == "theta");
  CHECK(names[2] == "duality");
  CHECK(names[3] == "audit");
  CHECK_THROWS_AS(quadclif::run_sweep("nonsense", SweepOptions{}), quadclif::domain_error);
}

TEST_CASE("all suites pass with pinned row counts") {
  SweepOptions opt;
  SweepResult beta = quadclif::run_sweep("beta-monotonicity", opt);
  CHECK(beta.rows.size() == 2112);
  CHECK(beta.failures == 0);

  SweepResult theta = quadclif::run_sweep("theta", opt);
  CHECK(theta.rows.size() == 1070);
  CHECK(theta.failures == 0);

  SweepResult duality = quadclif::run_sweep("duality", opt);
  CHECK(duality.rows.size() == 387);
  CHECK(duality.failures == 0);

  SweepResult audit = quadclif::run_sweep("audit", opt);
  CHECK(audit.rows.size() == 1360);
  CHECK(audit.failures == 0);

  SweepResult all = quadclif::run_sweep("all", opt);
  CHECK(all.rows.size() ==
        beta.rows.size() + theta.rows.size() + duality.rows.size() + audit.rows.size());
  CHECK(all.failures == 0);
  CHECK(all.rows.front().suite == "beta-monotonicity");
  CHECK(all.rows.back().suite == "audit");
}

TEST_CASE("corrupted fixture is caught") {
  SweepOptions opt;
  opt.corrupt_duality_fixture = true;
  SweepResult res = quadclif::run_sweep("duality", opt);
  CHECK(res.failures == 2);
  for (const auto& row : res.rows)
    if (!row.pass) {
      CHECK(row.suite == "duality");
      CHECK(row.params.substr(0, 6) == "O(0,0)");
    }
}

TEST_CASE("audit rows are independent of the worker count") {
  SweepOptions opt;
  opt.max_degree = 2;
  opt.max_rank = 2;
  SweepResult one = quadclif::run_sweep("audit", opt);
  CHECK(one.failures == 0);

  SweepOptions again = opt;
  SweepResult rerun = quadclif::run_sweep("audit", again);
  CHECK(same_rows(one.rows, rerun.rows));

  SweepOptions threaded = opt;
  threaded.threads = 4;
  SweepResult four = quadclif::run_sweep("audit", threaded);
  CHECK(same_rows(one.rows, four.rows));
}

TEST_CASE("audit rows depend on the seed only through the samples") {
  SweepOptions opt;
  opt.max_degree = 1;
  opt.max_rank = 1;
  opt.seed = 777;
  SweepResult res = quadclif::run_sweep("audit", opt);
  CHECK(res.failures == 0);  // every seed must still satisfy every bound
}

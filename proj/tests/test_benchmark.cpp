#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "arseg/benchmark.hpp"
#include "arseg/errors.hpp"
#include "json.hpp"

using namespace arseg;

namespace {

std::string csv_of(const BenchmarkReport& report) {
  std::ostringstream out;
  write_benchmark_csv(report, out);
  return out.str();
}

std::string json_of(const BenchmarkReport& report) {
  std::ostringstream out;
  write_benchmark_json(report, out);
  return out.str();
}

BenchConfig config_from(const std::string& text) {
  std::istringstream in(text);
  return parse_bench_config(in);
}

}  // namespace

TEST_CASE("method labels parse into their configurations") {
  const BenchMethod robust = parse_bench_method("robust-p");
  CHECK(robust.rho_source == BenchRho::Robust);
  CHECK(robust.apply_postprocess);
  CHECK_FALSE(robust.bardet);

  const BenchMethod ls = parse_bench_method("ls-np");
  CHECK(ls.rho_source == BenchRho::Zero);
  CHECK_FALSE(ls.apply_postprocess);

  CHECK(parse_bench_method("oracle-p").rho_source == BenchRho::Oracle);
  CHECK(parse_bench_method("mg-np").rho_source == BenchRho::MG);
  CHECK(parse_bench_method("cauchy-np").rho_source == BenchRho::Cauchy);

  const BenchMethod bardet = parse_bench_method("bardet");
  CHECK(bardet.bardet);
  CHECK_FALSE(bardet.apply_postprocess);

  for (const char* bad : {"foo", "robust", "robust-x", "-p"}) {
    try {
      parse_bench_method(bad);
      FAIL("expected InvalidConfig for " << bad);
    } catch (const Error& err) {
      CHECK(err.code() == "InvalidConfig");
    }
  }
}

TEST_CASE("config text parses and expands to a grid") {
  const BenchConfig cfg = config_from(
      "# comment line\n"
      "n = 100, 200\n"
      "rho = 0 0.3 0.6\n"
      "sigma = 0.5\n"
      "methods = robust-p ls-np\n"
      "selector = beta_n:0.01\n"
      "replications = 4\n"
      "seed = 99\n");
  CHECK(cfg.n_values == std::vector<int>{100, 200});
  CHECK(cfg.rho_values == std::vector<double>{0.0, 0.3, 0.6});
  CHECK(cfg.sigma_values == std::vector<double>{0.5});
  CHECK(cfg.method_labels == std::vector<std::string>{"robust-p", "ls-np"});
  CHECK_FALSE(cfg.use_mbic);
  REQUIRE(cfg.penalty.beta_n.has_value());
  CHECK(*cfg.penalty.beta_n == 0.01);
  CHECK(cfg.replications == 4);
  CHECK(cfg.seed == 99);

  const std::vector<BenchCell> cells = expand_grid(cfg);
  REQUIRE(cells.size() == 6);
  CHECK(cells[0].n == 100);
  CHECK(cells[0].rho_star == 0.0);
  CHECK(cells[2].rho_star == 0.6);
  CHECK(cells[3].n == 200);
  // Paper design fills taus/means/changepoints per n.
  CHECK(cells[0].true_changepoints ==
        std::vector<int>{13, 19, 44, 55, 75, 91});
  CHECK(cells[3].true_changepoints ==
        std::vector<int>{27, 38, 88, 111, 150, 183});
  CHECK(cells[0].means.size() == 7);
}

TEST_CASE("config rejects malformed input") {
  try {
    config_from("bogus_key = 1\n");
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    config_from("n 100\n");
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    config_from("n =\n");
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    expand_grid(config_from("n = 100\ndesign = custom\ntaus = 0.5\n"));
    FAIL("expected InvalidConfig (means/taus mismatch)");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    expand_grid(config_from("design = paper\n"));
    FAIL("expected InvalidConfig (missing n)");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
}

TEST_CASE("benchmark runs are deterministic and worker-count independent") {
  const BenchConfig cfg = config_from(
      "n = 100\n"
      "rho = 0.3\n"
      "sigma = 0.2\n"
      "replications = 3\n");
  const std::vector<BenchMethod> methods = {parse_bench_method("robust-p"),
                                            parse_bench_method("ls-np"),
                                            parse_bench_method("bardet")};
  const BenchmarkReport serial =
      run_benchmark(expand_grid(cfg), methods, 3, 42, 1);
  const BenchmarkReport parallel =
      run_benchmark(expand_grid(cfg), methods, 3, 42, 4);
  const BenchmarkReport again =
      run_benchmark(expand_grid(cfg), methods, 3, 42, 1);

  REQUIRE(serial.records.size() == 3);
  for (const ReplicationRecord& r : serial.records) {
    CHECK(r.outcomes.size() == 3);
  }
  CHECK(serial.records[1].seed == derive_seed(42, 0, 1));

  const std::string c1 = csv_of(serial);
  CHECK(c1 == csv_of(parallel));
  CHECK(c1 == csv_of(again));
  CHECK(json_of(serial) == json_of(parallel));

  // One aggregate per (cell, method); everything completed.
  REQUIRE(serial.aggregates.size() == 3);
  for (const CellMethodAggregate& agg : serial.aggregates) {
    CHECK(agg.completed == 3);
    CHECK(agg.failed == 0);
  }
}

TEST_CASE("every CSV row has the full column set") {
  const BenchConfig cfg = config_from(
      "n = 100\n"
      "rho = 0.3\n"
      "sigma = 0.2\n");
  const std::vector<BenchMethod> methods = {parse_bench_method("robust-p"),
                                            parse_bench_method("bardet")};
  const BenchmarkReport report =
      run_benchmark(expand_grid(cfg), methods, 2, 7, 1);
  std::istringstream lines(csv_of(report));
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 14);
  }
  CHECK(rows == 1 + 2 * 2);
}

TEST_CASE("noiseless oracle run recovers the design exactly") {
  const BenchConfig cfg = config_from(
      "n = 360\n"
      "rho = 0.3\n"
      "sigma = 0\n"
      "selector = beta_n:1e-8\n"
      "methods = oracle-p\n");
  const BenchmarkReport report = run_benchmark(
      expand_grid(cfg), {parse_bench_method("oracle-p")}, 1, 11, 1);
  REQUIRE(report.records.size() == 1);
  const MethodOutcome& out = report.records[0].outcomes[0];
  REQUIRE_FALSE(out.failed);
  // Each true jump leaves a one-point artifact in the decorrelated series,
  // so the raw fit needs two change-points per jump; post-processing then
  // collapses every pair onto the true location.
  CHECK(out.m_raw == 12);
  CHECK(out.m_final == 6);
  CHECK(out.changepoints == std::vector<int>{50, 70, 160, 200, 270, 330});
  CHECK(out.d1 == 0.0);
  CHECK(out.d2 == 0.0);
}

TEST_CASE("failures are flagged per record and excluded from aggregates") {
  // sigma = 0 makes the sample path piecewise constant, so the ratio
  // estimator's lag-1 median difference is zero.
  const BenchConfig cfg = config_from(
      "n = 100\n"
      "rho = 0\n"
      "sigma = 0\n");
  const BenchmarkReport report = run_benchmark(
      expand_grid(cfg), {parse_bench_method("robust-np")}, 3, 5, 1);
  for (const ReplicationRecord& r : report.records) {
    REQUIRE(r.outcomes.size() == 1);
    CHECK(r.outcomes[0].failed);
    CHECK(r.outcomes[0].error_code == "DegenerateMedian");
  }
  REQUIRE(report.aggregates.size() == 1);
  CHECK(report.aggregates[0].failed == 3);
  CHECK(report.aggregates[0].completed == 0);

  // Failed rows still carry the full CSV shape.
  std::istringstream lines(csv_of(report));
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 14);
    CHECK(line.find("DegenerateMedian") != std::string::npos);
  }
}

TEST_CASE("benchmark JSON is well-formed and complete") {
  const BenchConfig cfg = config_from(
      "n = 100\n"
      "rho = 0.2\n"
      "sigma = 0.3\n");
  const std::vector<BenchMethod> methods = {parse_bench_method("robust-p"),
                                            parse_bench_method("ls-p")};
  const BenchmarkReport report =
      run_benchmark(expand_grid(cfg), methods, 2, 3, 1);
  const nlohmann::json doc = nlohmann::json::parse(json_of(report));
  CHECK(doc.at("replications") == 2);
  CHECK(doc.at("base_seed") == 3);
  REQUIRE(doc.at("cells").size() == 1);
  CHECK(doc["cells"][0]["true_changepoints"].size() == 6);
  CHECK(doc.at("methods").size() == 2);
  REQUIRE(doc.at("records").size() == 2);
  CHECK(doc["records"][0]["outcomes"].size() == 2);
  REQUIRE(doc.at("aggregates").size() == 2);
  const auto& agg = doc["aggregates"][0];
  CHECK(agg.contains("rho_bias_quartiles"));
  CHECK(agg["d1_quartiles"].size() == 3);
  // ls-p carries a fixed rho of zero, so its bias quartiles are present;
  // every outcome of both methods reports rho here.
  CHECK(doc["records"][0]["outcomes"][0]["rho"].is_object());
}

TEST_CASE("run_benchmark validates its inputs") {
  const std::vector<BenchMethod> methods = {parse_bench_method("ls-p")};
  const BenchConfig cfg = config_from("n = 100\n");
  try {
    run_benchmark({}, methods, 1, 0, 1);
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    run_benchmark(expand_grid(cfg), {}, 1, 0, 1);
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    run_benchmark(expand_grid(cfg), methods, 0, 0, 1);
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
}

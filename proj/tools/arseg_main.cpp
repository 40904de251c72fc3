// Command-line front end: detect / rho / simulate / bench.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arseg/arseg.hpp"

namespace {

// Writes either to stdout ("-") or to a file.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw arseg::errors::parse_error("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::uint64_t apply_seed_override(std::uint64_t seed) {
  const char* env = std::getenv("ARSEG_SEED");
  if (env == nullptr || *env == '\0') return seed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw arseg::errors::invalid_config(
        std::string("ARSEG_SEED is not an integer: \"") + env + "\"");
  return v;
}

void write_rho_json(arseg::JsonWriter& json, const arseg::RhoEstimate& est) {
  json.begin_object();
  json.kv("value", est.value);
  json.kv("method", arseg::rho_method_name(est.method));
  json.kv("clamped_value", est.clamped_value);
  json.kv("was_clamped", est.was_clamped);
  json.end_object();
}

void write_int_array(arseg::JsonWriter& json, const std::vector<int>& values) {
  json.begin_array();
  for (int v : values) json.value(v);
  json.end_array();
}

void write_double_array(arseg::JsonWriter& json,
                        const std::vector<double>& values) {
  json.begin_array();
  for (double v : values) json.value(v);
  json.end_array();
}

void write_detect_report(const arseg::DetectReport& report, std::ostream& out,
                         bool include_timing) {
  arseg::JsonWriter json(out);
  json.begin_object();
  json.kv("n", report.n);
  json.key("rho");
  if (report.rho.has_value()) {
    write_rho_json(json, *report.rho);
  } else {
    json.null_value();
  }
  json.key("selection");
  json.begin_object();
  if (report.criterion_values.empty()) {
    json.kv("criterion", "Fixed");
  } else {
    json.kv("criterion", arseg::criterion_name(report.criterion));
  }
  json.kv("chosen_m", report.chosen_m);
  json.key("criterion_values");
  write_double_array(json, report.criterion_values);
  json.end_object();
  json.key("changepoints_raw");
  write_int_array(json, report.changepoints_raw);
  json.key("changepoints_pp");
  write_int_array(json, report.changepoints_pp);
  json.key("changepoints");
  write_int_array(json, report.changepoints_pp);
  json.key("deltas");
  write_double_array(json, report.deltas);
  json.key("means");
  if (report.means.has_value()) {
    write_double_array(json, *report.means);
  } else {
    json.null_value();
  }
  json.kv("means_suppressed", !report.means.has_value());
  json.kv("ss", report.ss);
  if (!report.bardet_fits.empty()) {
    json.key("bardet_segments");
    json.begin_array();
    for (const arseg::BardetSegmentFit& f : report.bardet_fits) {
      json.begin_object();
      json.kv("rho", f.rho_k);
      json.kv("delta", f.delta_k);
      json.kv("sigma2", f.sigma2_k);
      json.kv("cost", f.cost);
      json.end_object();
    }
    json.end_array();
  }
  if (report.diagnostics.has_value()) {
    const arseg::DiagnosticsReport& d = *report.diagnostics;
    json.key("diagnostics");
    json.begin_object();
    json.kv("ljung_box_stat", d.ljung_box_stat);
    json.kv("ljung_box_lags", d.ljung_box_lags);
    json.kv("ljung_box_pvalue", d.ljung_box_pvalue);
    json.kv("jarque_bera_stat", d.jarque_bera_stat);
    json.kv("jarque_bera_pvalue", d.jarque_bera_pvalue);
    json.end_object();
  }
  if (include_timing) {
    json.key("timing_ms");
    json.begin_object();
    json.kv("rho", report.timings.rho_ms);
    json.kv("segmentation", report.timings.segmentation_ms);
    json.kv("selection", report.timings.selection_ms);
    json.kv("total", report.timings.total_ms);
    json.end_object();
  }
  json.end_object();
  json.finish();
}

struct DetectArgs {
  std::string input;
  std::string method = "robust";
  std::string criterion = "mbic";
  int m = -1;
  int m_max = -1;
  int min_seg = 1;
  bool no_postprocess = false;
  bool diagnostics = false;
  int lags = 20;
  bool no_timing = false;
  std::string output = "-";
};

int run_detect(const DetectArgs& args) {
  const arseg::Series series = arseg::load_series(args.input);
  arseg::DetectOptions options;
  if (args.method == "robust") {
    options.method = arseg::DetectMethod::Robust;
  } else if (args.method == "mg") {
    options.method = arseg::DetectMethod::MG;
  } else if (args.method == "zero") {
    options.method = arseg::DetectMethod::Zero;
  } else if (args.method == "bardet") {
    options.method = arseg::DetectMethod::Bardet;
    options.bardet_m = args.m;
  } else if (args.method.rfind("fixed:", 0) == 0) {
    options.method = arseg::DetectMethod::Fixed;
    char* end = nullptr;
    const std::string value = args.method.substr(6);
    options.fixed_rho = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
      throw arseg::errors::invalid_config("--method fixed:<rho> needs a number");
  } else {
    throw arseg::errors::invalid_config(
        "--method must be robust, mg, fixed:<rho>, zero or bardet");
  }
  arseg::parse_selector(args.criterion, options.use_mbic, options.penalty);
  options.m_max = args.m_max;
  options.min_segment_length = args.min_seg;
  options.apply_postprocess = !args.no_postprocess;
  options.with_diagnostics = args.diagnostics;
  options.lags = args.lags;

  const arseg::DetectReport report = arseg::detect(series, options);
  OutputTarget out(args.output);
  write_detect_report(report, out.stream(), !args.no_timing);
  return 0;
}

struct RhoArgs {
  std::string input;
  std::string method = "robust";
  bool test_zero = false;
  int mc = 1000;
  std::uint64_t seed = 0;
  std::string output = "-";
};

int run_rho(const RhoArgs& args) {
  const arseg::Series series = arseg::load_series(args.input);
  arseg::RhoEstimate est;
  if (args.method == "robust") {
    est = arseg::estimate_rho_tilde(series);
  } else if (args.method == "mg") {
    est = arseg::estimate_rho_mg(series);
  } else if (args.method == "cauchy") {
    est = arseg::estimate_rho_cauchy(series);
  } else {
    throw arseg::errors::invalid_config("--method must be robust, mg or cauchy");
  }
  std::optional<arseg::RhoTestResult> test;
  if (args.test_zero) {
    test = arseg::test_rho_zero(series, args.mc, apply_seed_override(args.seed));
  }
  OutputTarget out(args.output);
  arseg::JsonWriter json(out.stream());
  json.begin_object();
  json.kv("value", est.value);
  json.kv("method", arseg::rho_method_name(est.method));
  json.kv("clamped", est.clamped_value);
  json.kv("was_clamped", est.was_clamped);
  if (test.has_value()) {
    json.key("test");
    json.begin_object();
    json.kv("statistic", test->statistic);
    json.kv("sigma_tilde_sq", test->sigma_tilde_sq);
    json.kv("p_value", test->p_value);
    json.kv("mc_replications", test->mc_replications);
    json.end_object();
  }
  json.end_object();
  json.finish();
  return 0;
}

struct SimulateArgs {
  int n = 0;
  double rho = 0.0;
  double sigma = 1.0;
  std::string design = "paper";
  std::string noise = "ar1";
  std::uint64_t seed = 0;
  std::string output = "-";
};

int run_simulate(const SimulateArgs& args) {
  arseg::SimulationConfig cfg;
  cfg.n = args.n;
  cfg.rho_star = args.rho;
  cfg.sigma_star = args.sigma;
  cfg.noise = arseg::parse_noise_spec(args.noise);
  cfg.seed = apply_seed_override(args.seed);
  if (args.design == "paper") {
    const arseg::PaperDesign d = arseg::paper_design(args.n);
    cfg.true_taus = d.true_taus;
    cfg.means = d.means;
    cfg.true_changepoints = d.changepoints;
  } else {
    std::ifstream in(args.design);
    if (!in)
      throw arseg::errors::parse_error("cannot open design file: " +
                                       args.design);
    // Custom design files reuse the bench config syntax, keys taus and means.
    const arseg::BenchConfig design = [&in]() {
      arseg::BenchConfig d;
      std::string line;
      std::ostringstream filtered;
      while (std::getline(in, line)) filtered << line << '\n';
      std::istringstream stream(filtered.str());
      d = arseg::parse_bench_config(stream);
      return d;
    }();
    cfg.true_taus = design.custom_taus;
    cfg.means = design.custom_means;
  }
  const arseg::Series series = arseg::simulate(cfg);

  const bool to_stdout = args.output == "-";
  {
    OutputTarget out(args.output);
    arseg::write_values(out.stream(), series.values);
  }
  std::ofstream truth_file;
  std::ostream* truth_out = &std::cerr;
  if (!to_stdout) {
    truth_file.open(args.output + ".truth.json");
    if (!truth_file)
      throw arseg::errors::parse_error("cannot open truth output file: " +
                                       args.output + ".truth.json");
    truth_out = &truth_file;
  }
  arseg::JsonWriter json(*truth_out);
  json.begin_object();
  json.kv("n", cfg.n);
  json.kv("rho_star", cfg.rho_star);
  json.kv("sigma_star", cfg.sigma_star);
  json.kv("noise", args.noise);
  json.kv("seed", cfg.seed);
  json.key("true_taus");
  write_double_array(json, cfg.true_taus);
  json.key("changepoints");
  write_int_array(json, arseg::resolve_changepoints(cfg));
  json.key("means");
  write_double_array(json, cfg.means);
  json.end_object();
  json.finish();
  return 0;
}

struct BenchArgs {
  std::string config;
  int replications = -1;
  std::int64_t seed = -1;
  int jobs = 1;
  std::vector<std::string> methods;
  std::string output_dir = ".";
};

int run_bench(const BenchArgs& args) {
  std::ifstream in(args.config);
  if (!in)
    throw arseg::errors::parse_error("cannot open config file: " + args.config);
  arseg::BenchConfig cfg = arseg::parse_bench_config(in);
  if (args.replications > 0) cfg.replications = args.replications;
  if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
  cfg.seed = apply_seed_override(cfg.seed);
  if (!args.methods.empty()) cfg.method_labels = args.methods;
  if (cfg.method_labels.empty())
    throw arseg::errors::invalid_config(
        "bench: no methods given (config key \"methods\" or --methods)");

  std::vector<arseg::BenchMethod> methods;
  for (const std::string& label : cfg.method_labels) {
    methods.push_back(arseg::parse_bench_method(label));
  }
  const arseg::BenchmarkReport report =
      arseg::run_benchmark(arseg::expand_grid(cfg), methods, cfg.replications,
                           cfg.seed, args.jobs);

  std::filesystem::create_directories(args.output_dir);
  const std::string csv_path = args.output_dir + "/bench_records.csv";
  const std::string json_path = args.output_dir + "/bench_report.json";
  {
    std::ofstream csv(csv_path);
    if (!csv)
      throw arseg::errors::parse_error("cannot open output file: " + csv_path);
    arseg::write_benchmark_csv(report, csv);
  }
  {
    std::ofstream jsonf(json_path);
    if (!jsonf)
      throw arseg::errors::parse_error("cannot open output file: " + json_path);
    arseg::write_benchmark_json(report, jsonf);
  }
  std::cout << csv_path << '\n' << json_path << '\n';
  return 0;
}

int write_error_json(const arseg::Error& e, const std::string& output) {
  try {
    OutputTarget out(output);
    arseg::JsonWriter json(out.stream());
    json.begin_object();
    json.key("error");
    json.begin_object();
    json.kv("code", e.code());
    json.kv("message", e.what());
    json.end_object();
    json.end_object();
    json.finish();
  } catch (...) {
    std::cerr << "error [" << e.code() << "] " << e.what() << '\n';
  }
  return e.code() == "InfeasibleConstraints" ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Change-point detection in the mean of an AR(1) time series"};
  app.require_subcommand(1);

  DetectArgs detect_args;
  CLI::App* detect = app.add_subcommand(
      "detect", "Detect change-points in a series read from a file");
  detect->add_option("input", detect_args.input, "Input series file")
      ->required();
  detect->add_option("--method", detect_args.method,
                     "robust | mg | fixed:<rho> | zero | bardet");
  detect->add_option("--criterion", detect_args.criterion,
                     "mbic | beta:<exponent> | beta_n:<value>");
  detect->add_option("--m", detect_args.m,
                     "Fixed change-point count (required for bardet)");
  detect->add_option("--mmax", detect_args.m_max, "Candidate ceiling for m");
  detect->add_option("--min-seg", detect_args.min_seg,
                     "Minimum segment length");
  detect->add_flag("--no-postprocess", detect_args.no_postprocess,
                   "Skip adjacent-pair removal");
  detect->add_flag("--diagnostics", detect_args.diagnostics,
                   "Ljung-Box and Jarque-Bera residual tests");
  detect->add_option("--lags", detect_args.lags, "Ljung-Box lag count");
  detect->add_flag("--no-timing", detect_args.no_timing,
                   "Omit timings from the report");
  detect->add_option("--output", detect_args.output, "Output path or -");

  RhoArgs rho_args;
  CLI::App* rho = app.add_subcommand(
      "rho", "Estimate the AR(1) coefficient of a series");
  rho->add_option("input", rho_args.input, "Input series file")->required();
  rho->add_option("--method", rho_args.method, "robust | mg | cauchy");
  rho->add_flag("--test-zero", rho_args.test_zero,
                "Test H0: rho = 0 with Monte Carlo calibration");
  rho->add_option("--mc", rho_args.mc, "Monte Carlo replications");
  rho->add_option("--seed", rho_args.seed, "Monte Carlo seed");
  rho->add_option("--output", rho_args.output, "Output path or -");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Generate a series with piecewise-constant mean");
  simulate->add_option("--n", sim_args.n, "Transition count n")->required();
  simulate->add_option("--rho", sim_args.rho, "AR(1) coefficient");
  simulate->add_option("--sigma", sim_args.sigma, "Innovation scale");
  simulate->add_option("--design", sim_args.design,
                       "paper | path to a custom design file");
  simulate->add_option("--noise", sim_args.noise,
                       "ar1 | ar2:<phi1>,<phi2> | cauchy");
  simulate->add_option("--seed", sim_args.seed, "RNG seed");
  simulate->add_option("--output", sim_args.output,
                       "Series output path or - (truth JSON goes to "
                       "<path>.truth.json, or stderr for -)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run a Monte Carlo benchmark grid from a config file");
  bench->add_option("config", bench_args.config, "Config file")->required();
  bench->add_option("--replications", bench_args.replications,
                    "Override the config's replication count");
  bench->add_option("--seed", bench_args.seed, "Override the config's seed");
  bench->add_option("--jobs", bench_args.jobs, "Worker thread count");
  bench->add_option("--methods", bench_args.methods,
                    "Override the config's method list");
  bench->add_option("--output-dir", bench_args.output_dir,
                    "Directory for bench_records.csv and bench_report.json");

  CLI11_PARSE(app, argc, argv);

  std::string error_output = "-";
  try {
    if (detect->parsed()) {
      error_output = detect_args.output;
      return run_detect(detect_args);
    }
    if (rho->parsed()) {
      error_output = rho_args.output;
      return run_rho(rho_args);
    }
    if (simulate->parsed()) {
      return run_simulate(sim_args);
    }
    if (bench->parsed()) {
      return run_bench(bench_args);
    }
  } catch (const arseg::Error& e) {
    return write_error_json(e, error_output);
  }
  return 0;
}

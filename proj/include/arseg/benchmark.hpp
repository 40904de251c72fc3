#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "arseg/bardet.hpp"
#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/evaluation.hpp"
#include "arseg/io.hpp"
#include "arseg/robust_rho.hpp"
#include "arseg/segmentation.hpp"
#include "arseg/selection.hpp"
#include "arseg/simulation.hpp"
#include "arseg/stats.hpp"

namespace arseg {

// How a benchmark method obtains the plug-in autocorrelation.
enum class BenchRho { Zero, Robust, Oracle, MG, Cauchy };

struct BenchMethod {
  std::string label;
  bool bardet = false;
  BenchRho rho_source = BenchRho::Robust;
  bool apply_postprocess = true;
};

// One grid point: a simulation setting plus the detection configuration
// applied to every replication drawn from it.
struct BenchCell {
  int n = 0;
  double rho_star = 0.0;
  double sigma_star = 1.0;
  NoiseSpec noise;
  std::string design = "paper";
  std::vector<double> true_taus;
  std::vector<double> means;
  std::vector<int> true_changepoints;
  bool use_mbic = true;
  PenaltyConfig penalty;
  int m_max = -1;    // -1 selects default_m_max(n)
  int min_seg = 1;
  int fixed_m = -1;  // >= 0 skips selection; bardet defaults to the true m
};

struct MethodOutcome {
  std::string method;
  bool failed = false;
  std::string error_code;
  bool has_rho = false;
  double rho_value = 0.0;
  double rho_clamped = 0.0;
  bool rho_was_clamped = false;
  int m_raw = 0;
  int m_final = 0;
  std::vector<int> changepoints;
  double d1 = 0.0;
  double d2 = 0.0;
  double d = 0.0;
};

struct ReplicationRecord {
  int cell = 0;
  int replication = 0;
  std::uint64_t seed = 0;
  std::vector<MethodOutcome> outcomes;
};

struct Quartiles {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

struct CellMethodAggregate {
  int cell = 0;
  std::string method;
  int completed = 0;
  int failed = 0;
  bool has_rho = false;
  Quartiles rho_bias;
  Quartiles d1;
  Quartiles d2;
  std::map<int, int> m_histogram;              // final m -> count
  std::map<int, int> changepoint_frequency;    // location -> count
};

struct BenchmarkReport {
  std::vector<BenchCell> cells;
  std::vector<BenchMethod> methods;
  int replications = 0;
  std::uint64_t base_seed = 0;
  std::vector<ReplicationRecord> records;
  std::vector<CellMethodAggregate> aggregates;
};

inline BenchMethod parse_bench_method(std::string token) {
  for (char& c : token) c = static_cast<char>(std::tolower(c));
  BenchMethod m;
  m.label = token;
  if (token == "bardet") {
    m.bardet = true;
    m.apply_postprocess = false;
    return m;
  }
  const std::size_t dash = token.rfind('-');
  if (dash == std::string::npos)
    throw errors::invalid_config(
        "unknown method \"" + token +
        "\" (expected ls|robust|oracle|mg with -p/-np suffix, or bardet)");
  const std::string base = token.substr(0, dash);
  const std::string suffix = token.substr(dash + 1);
  if (suffix == "p") {
    m.apply_postprocess = true;
  } else if (suffix == "np") {
    m.apply_postprocess = false;
  } else {
    throw errors::invalid_config("unknown method suffix in \"" + token +
                                 "\" (expected -p or -np)");
  }
  if (base == "ls") {
    m.rho_source = BenchRho::Zero;
  } else if (base == "robust") {
    m.rho_source = BenchRho::Robust;
  } else if (base == "oracle") {
    m.rho_source = BenchRho::Oracle;
  } else if (base == "mg") {
    m.rho_source = BenchRho::MG;
  } else if (base == "cauchy") {
    m.rho_source = BenchRho::Cauchy;
  } else {
    throw errors::invalid_config("unknown method \"" + token + "\"");
  }
  return m;
}

namespace detail {

inline MethodOutcome run_bench_method(const Series& y, const BenchCell& cell,
                                      const BenchMethod& method) {
  MethodOutcome out;
  out.method = method.label;
  try {
    Segmentation raw_seg;
    DecorrelatedSeries w;
    bool have_w = false;
    if (method.bardet) {
      const int m = cell.fixed_m >= 0
                        ? cell.fixed_m
                        : static_cast<int>(cell.true_changepoints.size());
      raw_seg = bardet_segment(y, m, std::max(3, cell.min_seg));
    } else {
      RhoEstimate est;
      switch (method.rho_source) {
        case BenchRho::Zero:
          est = make_rho_estimate(0.0, RhoMethod::Fixed);
          break;
        case BenchRho::Oracle:
          est = make_rho_estimate(cell.rho_star, RhoMethod::Fixed);
          break;
        case BenchRho::Robust:
          est = estimate_rho_tilde(y);
          break;
        case BenchRho::MG:
          est = estimate_rho_mg(y);
          break;
        case BenchRho::Cauchy:
          est = estimate_rho_cauchy(y);
          break;
      }
      out.has_rho = true;
      out.rho_value = est.value;
      out.rho_clamped = est.clamped_value;
      out.rho_was_clamped = est.was_clamped;
      w = decorrelate(y, est.clamped_value);
      have_w = true;
      SegmentationConstraints constraints;
      constraints.min_segment_length = cell.min_seg;
      if (cell.fixed_m >= 0) {
        constraints.m_max = cell.fixed_m;
        raw_seg = dp_segment(w, cell.fixed_m, constraints).segmentation;
      } else {
        constraints.m_max = cell.m_max >= 0 ? cell.m_max : default_m_max(w.n());
        const std::vector<FitResult> fits = dp_segment_all(w, constraints);
        const SelectionTrace trace = cell.use_mbic
                                         ? select_mbic(fits, w.n())
                                         : select_beta(fits, w.n(), cell.penalty);
        raw_seg = trace.chosen_fit.segmentation;
      }
    }
    out.m_raw = raw_seg.m();
    const Segmentation final_seg =
        method.apply_postprocess ? postprocess(raw_seg) : raw_seg;
    out.m_final = final_seg.m();
    out.changepoints = final_seg.changepoints;
    std::vector<double> est_taus;
    est_taus.reserve(out.changepoints.size());
    for (int t : out.changepoints) {
      est_taus.push_back(static_cast<double>(t) / static_cast<double>(y.n));
    }
    const HausdorffResult h = hausdorff(cell.true_taus, est_taus);
    out.d1 = h.d1;
    out.d2 = h.d2;
    out.d = h.d;
    (void)have_w;
  } catch (const Error& e) {
    out.failed = true;
    out.error_code = e.code();
  }
  return out;
}

inline ReplicationRecord run_bench_replication(
    const std::vector<BenchCell>& cells, const std::vector<BenchMethod>& methods,
    int cell_index, int replication, std::uint64_t base_seed) {
  const BenchCell& cell = cells[cell_index];
  ReplicationRecord record;
  record.cell = cell_index;
  record.replication = replication;
  record.seed = derive_seed(base_seed, static_cast<std::uint64_t>(cell_index),
                            static_cast<std::uint64_t>(replication));
  SimulationConfig sim;
  sim.n = cell.n;
  sim.rho_star = cell.rho_star;
  sim.sigma_star = cell.sigma_star;
  sim.means = cell.means;
  sim.true_taus = cell.true_taus;
  sim.true_changepoints = cell.true_changepoints;
  sim.noise = cell.noise;
  sim.seed = record.seed;
  record.outcomes.reserve(methods.size());
  try {
    const Series y = simulate(sim);
    for (const BenchMethod& method : methods) {
      record.outcomes.push_back(run_bench_method(y, cell, method));
    }
  } catch (const Error& e) {
    for (const BenchMethod& method : methods) {
      MethodOutcome out;
      out.method = method.label;
      out.failed = true;
      out.error_code = e.code();
      record.outcomes.push_back(out);
    }
  }
  return record;
}

inline Quartiles quartiles_of(std::vector<double> values) {
  Quartiles q;
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  q.q1 = quantile_sorted(values, 0.25);
  q.median = quantile_sorted(values, 0.5);
  q.q3 = quantile_sorted(values, 0.75);
  return q;
}

}  // namespace detail

// Runs the full grid.  Replications are independent tasks indexed by
// (cell, replication); each derives its own seed, so the report is
// bit-identical for any worker count.
inline BenchmarkReport run_benchmark(std::vector<BenchCell> cells,
                                     std::vector<BenchMethod> methods,
                                     int replications, std::uint64_t base_seed,
                                     int jobs = 1) {
  if (cells.empty()) throw errors::invalid_config("run_benchmark: no cells");
  if (methods.empty()) throw errors::invalid_config("run_benchmark: no methods");
  if (replications < 1)
    throw errors::invalid_config("run_benchmark: replications must be >= 1");
  BenchmarkReport report;
  report.cells = std::move(cells);
  report.methods = std::move(methods);
  report.replications = replications;
  report.base_seed = base_seed;
  const std::size_t total = report.cells.size() * replications;
  report.records.resize(total);

  const auto worker = [&report, replications](std::atomic<std::size_t>& next) {
    const std::size_t total_records = report.records.size();
    for (std::size_t idx = next.fetch_add(1); idx < total_records;
         idx = next.fetch_add(1)) {
      const int cell_index = static_cast<int>(idx / replications);
      const int replication = static_cast<int>(idx % replications);
      report.records[idx] = detail::run_bench_replication(
          report.cells, report.methods, cell_index, replication,
          report.base_seed);
    }
  };

  std::atomic<std::size_t> next{0};
  if (jobs <= 1) {
    worker(next);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
      threads.emplace_back([&worker, &next]() { worker(next); });
    }
    for (std::thread& t : threads) t.join();
  }

  for (std::size_t c = 0; c < report.cells.size(); ++c) {
    for (std::size_t mi = 0; mi < report.methods.size(); ++mi) {
      CellMethodAggregate agg;
      agg.cell = static_cast<int>(c);
      agg.method = report.methods[mi].label;
      std::vector<double> bias, d1s, d2s;
      for (int r = 0; r < replications; ++r) {
        const MethodOutcome& out =
            report.records[c * replications + r].outcomes[mi];
        if (out.failed) {
          ++agg.failed;
          continue;
        }
        ++agg.completed;
        if (out.has_rho) {
          agg.has_rho = true;
          bias.push_back(out.rho_value - report.cells[c].rho_star);
        }
        d1s.push_back(out.d1);
        d2s.push_back(out.d2);
        ++agg.m_histogram[out.m_final];
        for (int t : out.changepoints) ++agg.changepoint_frequency[t];
      }
      agg.rho_bias = detail::quartiles_of(std::move(bias));
      agg.d1 = detail::quartiles_of(std::move(d1s));
      agg.d2 = detail::quartiles_of(std::move(d2s));
      report.aggregates.push_back(std::move(agg));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Plain-text configuration (key = value; lists are whitespace or comma
// separated; # starts a comment).  Keys n, rho and sigma may be lists and
// expand to their cross product.

struct BenchConfig {
  std::vector<int> n_values;
  std::vector<double> rho_values{0.0};
  std::vector<double> sigma_values{1.0};
  NoiseSpec noise;
  std::string design = "paper";
  std::vector<double> custom_taus;
  std::vector<double> custom_means;
  std::vector<std::string> method_labels;
  bool use_mbic = true;
  PenaltyConfig penalty;
  int replications = 10;
  int m_max = -1;
  int min_seg = 1;
  int fixed_m = -1;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

inline double parse_double(const std::string& token, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0')
    throw errors::invalid_config("config key \"" + key +
                                 "\": expected a number, got \"" + token + "\"");
  return v;
}

inline long long parse_int(const std::string& token, const std::string& key) {
  char* end = nullptr;
  const long long v = std::strtoll(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0')
    throw errors::invalid_config("config key \"" + key +
                                 "\": expected an integer, got \"" + token +
                                 "\"");
  return v;
}

}  // namespace detail

inline NoiseSpec parse_noise_spec(const std::string& token) {
  NoiseSpec noise;
  if (token == "ar1") {
    noise.kind = NoiseKind::GaussianAR1;
  } else if (token == "cauchy") {
    noise.kind = NoiseKind::CauchyAR1;
  } else if (token.rfind("ar2:", 0) == 0) {
    noise.kind = NoiseKind::GaussianAR2;
    const std::string params = token.substr(4);
    const std::size_t comma = params.find(',');
    if (comma == std::string::npos)
      throw errors::invalid_config(
          "noise ar2 needs two parameters, e.g. ar2:0.5,0.2");
    noise.phi1 = detail::parse_double(params.substr(0, comma), "noise");
    noise.phi2 = detail::parse_double(params.substr(comma + 1), "noise");
  } else {
    throw errors::invalid_config("unknown noise \"" + token +
                                 "\" (expected ar1, ar2:<p1>,<p2> or cauchy)");
  }
  return noise;
}

// Parses "mbic", "beta:<exponent>" or "beta_n:<value>" into the selector
// configuration shared by the CLI and the benchmark config file.
inline void parse_selector(const std::string& token, bool& use_mbic,
                           PenaltyConfig& penalty) {
  if (token == "mbic") {
    use_mbic = true;
    return;
  }
  if (token.rfind("beta:", 0) == 0) {
    use_mbic = false;
    penalty = PenaltyConfig{};
    penalty.beta_exponent = detail::parse_double(token.substr(5), "selector");
    return;
  }
  if (token.rfind("beta_n:", 0) == 0) {
    use_mbic = false;
    penalty = PenaltyConfig{};
    penalty.beta_n = detail::parse_double(token.substr(7), "selector");
    return;
  }
  throw errors::invalid_config("unknown selector \"" + token +
                               "\" (expected mbic, beta:<exp> or beta_n:<val>)");
}

inline BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      if (!detail::split_tokens(line).empty())
        throw errors::invalid_config("config line " +
                                     std::to_string(line_number) +
                                     ": expected key = value");
      continue;
    }
    const std::vector<std::string> key_tokens =
        detail::split_tokens(line.substr(0, eq));
    const std::vector<std::string> values =
        detail::split_tokens(line.substr(eq + 1));
    if (key_tokens.size() != 1)
      throw errors::invalid_config("config line " + std::to_string(line_number) +
                                   ": malformed key");
    const std::string& key = key_tokens[0];
    if (values.empty())
      throw errors::invalid_config("config key \"" + key + "\" has no value");
    const std::string& first = values[0];
    if (key == "n") {
      cfg.n_values.clear();
      for (const std::string& v : values)
        cfg.n_values.push_back(static_cast<int>(detail::parse_int(v, key)));
    } else if (key == "rho") {
      cfg.rho_values.clear();
      for (const std::string& v : values)
        cfg.rho_values.push_back(detail::parse_double(v, key));
    } else if (key == "sigma") {
      cfg.sigma_values.clear();
      for (const std::string& v : values)
        cfg.sigma_values.push_back(detail::parse_double(v, key));
    } else if (key == "noise") {
      cfg.noise = parse_noise_spec(first);
    } else if (key == "design") {
      cfg.design = first;
    } else if (key == "taus") {
      cfg.custom_taus.clear();
      for (const std::string& v : values)
        cfg.custom_taus.push_back(detail::parse_double(v, key));
    } else if (key == "means") {
      cfg.custom_means.clear();
      for (const std::string& v : values)
        cfg.custom_means.push_back(detail::parse_double(v, key));
    } else if (key == "methods") {
      cfg.method_labels = values;
    } else if (key == "selector") {
      parse_selector(first, cfg.use_mbic, cfg.penalty);
    } else if (key == "replications") {
      cfg.replications = static_cast<int>(detail::parse_int(first, key));
    } else if (key == "mmax") {
      cfg.m_max = static_cast<int>(detail::parse_int(first, key));
    } else if (key == "minseg") {
      cfg.min_seg = static_cast<int>(detail::parse_int(first, key));
    } else if (key == "m") {
      cfg.fixed_m = static_cast<int>(detail::parse_int(first, key));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(detail::parse_int(first, key));
    } else {
      throw errors::invalid_config("unknown config key \"" + key + "\"");
    }
  }
  return cfg;
}

inline std::vector<BenchCell> expand_grid(const BenchConfig& cfg) {
  if (cfg.n_values.empty())
    throw errors::invalid_config("bench config: key n is required");
  if (cfg.design != "paper" && cfg.design != "custom")
    throw errors::invalid_config("bench config: design must be paper or custom");
  std::vector<BenchCell> cells;
  for (int n : cfg.n_values) {
    for (double rho : cfg.rho_values) {
      for (double sigma : cfg.sigma_values) {
        BenchCell cell;
        cell.n = n;
        cell.rho_star = rho;
        cell.sigma_star = sigma;
        cell.noise = cfg.noise;
        cell.design = cfg.design;
        if (cfg.design == "paper") {
          const PaperDesign d = paper_design(n);
          cell.true_taus = d.true_taus;
          cell.means = d.means;
          cell.true_changepoints = d.changepoints;
        } else {
          cell.true_taus = cfg.custom_taus;
          cell.means = cfg.custom_means;
          if (cell.means.size() != cell.true_taus.size() + 1)
            throw errors::invalid_config(
                "bench config: means must have one more entry than taus");
        }
        cell.use_mbic = cfg.use_mbic;
        cell.penalty = cfg.penalty;
        cell.m_max = cfg.m_max;
        cell.min_seg = cfg.min_seg;
        cell.fixed_m = cfg.fixed_m;
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Emission

inline void write_benchmark_csv(const BenchmarkReport& report,
                                std::ostream& out) {
  out << "cell,replication,seed,method,failed,error_code,rho_value,"
         "rho_clamped,rho_was_clamped,m_raw,m_final,changepoints,d1,d2,d\n";
  for (const ReplicationRecord& record : report.records) {
    for (const MethodOutcome& o : record.outcomes) {
      out << record.cell << ',' << record.replication << ',' << record.seed
          << ',' << o.method << ',' << (o.failed ? 1 : 0) << ','
          << o.error_code << ',';
      if (o.failed) {
        out << ",,,,,,,,\n";
        continue;
      }
      if (o.has_rho) {
        out << format_double(o.rho_value) << ','
            << format_double(o.rho_clamped) << ',' << (o.rho_was_clamped ? 1 : 0);
      } else {
        out << ",,";
      }
      out << ',' << o.m_raw << ',' << o.m_final << ',';
      for (std::size_t i = 0; i < o.changepoints.size(); ++i) {
        if (i > 0) out << ';';
        out << o.changepoints[i];
      }
      out << ',' << format_double(o.d1) << ',' << format_double(o.d2) << ','
          << format_double(o.d) << '\n';
    }
  }
}

namespace detail {

inline void write_quartiles(JsonWriter& json, const char* name,
                            const Quartiles& q) {
  json.key(name);
  json.begin_array().value(q.q1).value(q.median).value(q.q3).end_array();
}

}  // namespace detail

inline void write_benchmark_json(const BenchmarkReport& report,
                                 std::ostream& out) {
  JsonWriter json(out);
  json.begin_object();
  json.kv("replications", report.replications);
  json.kv("base_seed", report.base_seed);

  json.key("cells");
  json.begin_array();
  for (std::size_t c = 0; c < report.cells.size(); ++c) {
    const BenchCell& cell = report.cells[c];
    json.begin_object();
    json.kv("index", static_cast<long long>(c));
    json.kv("n", cell.n);
    json.kv("rho_star", cell.rho_star);
    json.kv("sigma_star", cell.sigma_star);
    json.key("noise");
    json.begin_object();
    switch (cell.noise.kind) {
      case NoiseKind::GaussianAR1: json.kv("kind", "ar1"); break;
      case NoiseKind::GaussianAR2:
        json.kv("kind", "ar2");
        json.kv("phi1", cell.noise.phi1);
        json.kv("phi2", cell.noise.phi2);
        break;
      case NoiseKind::CauchyAR1: json.kv("kind", "cauchy"); break;
    }
    json.end_object();
    json.kv("design", cell.design);
    json.key("true_taus");
    json.begin_array();
    for (double tau : cell.true_taus) json.value(tau);
    json.end_array();
    json.key("true_changepoints");
    json.begin_array();
    for (int t : resolve_changepoints([&] {
           SimulationConfig sim;
           sim.n = cell.n;
           sim.true_taus = cell.true_taus;
           sim.true_changepoints = cell.true_changepoints;
           return sim;
         }())) {
      json.value(t);
    }
    json.end_array();
    json.key("means");
    json.begin_array();
    for (double mu : cell.means) json.value(mu);
    json.end_array();
    json.kv("selector", cell.use_mbic ? "mbic" : "beta");
    json.kv("m_max", cell.m_max);
    json.kv("min_seg", cell.min_seg);
    json.kv("fixed_m", cell.fixed_m);
    json.end_object();
  }
  json.end_array();

  json.key("methods");
  json.begin_array();
  for (const BenchMethod& m : report.methods) json.value(m.label);
  json.end_array();

  json.key("records");
  json.begin_array();
  for (const ReplicationRecord& record : report.records) {
    json.begin_object();
    json.kv("cell", record.cell);
    json.kv("replication", record.replication);
    json.kv("seed", record.seed);
    json.key("outcomes");
    json.begin_array();
    for (const MethodOutcome& o : record.outcomes) {
      json.begin_object();
      json.kv("method", o.method);
      json.kv("failed", o.failed);
      if (o.failed) {
        json.kv("error_code", o.error_code);
      } else {
        json.key("rho");
        if (o.has_rho) {
          json.begin_object();
          json.kv("value", o.rho_value);
          json.kv("clamped_value", o.rho_clamped);
          json.kv("was_clamped", o.rho_was_clamped);
          json.end_object();
        } else {
          json.null_value();
        }
        json.kv("m_raw", o.m_raw);
        json.kv("m_final", o.m_final);
        json.key("changepoints");
        json.begin_array();
        for (int t : o.changepoints) json.value(t);
        json.end_array();
        json.kv("d1", o.d1);
        json.kv("d2", o.d2);
        json.kv("d", o.d);
      }
      json.end_object();
    }
    json.end_array();
    json.end_object();
  }
  json.end_array();

  json.key("aggregates");
  json.begin_array();
  for (const CellMethodAggregate& agg : report.aggregates) {
    json.begin_object();
    json.kv("cell", agg.cell);
    json.kv("method", agg.method);
    json.kv("completed", agg.completed);
    json.kv("failed", agg.failed);
    json.key("rho_bias_quartiles");
    if (agg.has_rho) {
      json.begin_array()
          .value(agg.rho_bias.q1)
          .value(agg.rho_bias.median)
          .value(agg.rho_bias.q3)
          .end_array();
    } else {
      json.null_value();
    }
    detail::write_quartiles(json, "d1_quartiles", agg.d1);
    detail::write_quartiles(json, "d2_quartiles", agg.d2);
    json.key("m_histogram");
    json.begin_array();
    for (const auto& [m, count] : agg.m_histogram) {
      json.begin_object();
      json.kv("m", m);
      json.kv("count", count);
      json.end_object();
    }
    json.end_array();
    json.key("changepoint_frequency");
    json.begin_array();
    for (const auto& [t, count] : agg.changepoint_frequency) {
      json.begin_object();
      json.kv("t", t);
      json.kv("count", count);
      json.end_object();
    }
    json.end_array();
    json.end_object();
  }
  json.end_array();

  json.end_object();
  json.finish();
}

}  // namespace arseg

// Command-line front end: graph generation, spectra, deviation and sweep
// experiments, block-model recovery, and bound tables. Every run is fully
// determined by its flags, or by a key=value config file; flags win.
//
// Exit codes: 0 success, 2 invalid configuration, 3 numeric failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lapcon/clustering.hpp"
#include "lapcon/errors.hpp"
#include "lapcon/harness.hpp"
#include "lapcon/rng.hpp"

namespace {

using lapcon::ExperimentConfig;
using lapcon::ExperimentKind;
using lapcon::MetricSelect;

constexpr int kExitInvalidConfig = 2;
constexpr int kExitNumericFailure = 3;

// All options take the last occurrence, so config-file tokens injected
// ahead of the command line lose to explicit flags.
template <typename T>
CLI::Option* opt(CLI::App& app, const std::string& name, T& var,
                 const std::string& desc) {
  return app.add_option(name, var, desc)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat key=value lines become --key=value tokens placed right after the
// subcommand, before the user's own flags.
std::vector<std::string> tokens_from_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lapcon::io_error("cannot read config file: " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw lapcon::invalid_parameter_error("config line is not key=value: " + t);
    tokens.push_back("--" + trim(t.substr(0, eq)) + "=" + trim(t.substr(eq + 1)));
  }
  return tokens;
}

std::vector<std::string> expand_argv(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    else if (args[i].starts_with("--config=")) config_path = args[i].substr(9);
  }
  if (config_path.empty() || args.size() < 2 || args[1].starts_with("-")) return args;
  const std::vector<std::string> injected = tokens_from_config(config_path);
  std::vector<std::string> out;
  out.reserve(args.size() + injected.size());
  out.push_back(args[0]);
  out.push_back(args[1]);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 2, args.end());
  return out;
}

MetricSelect parse_metrics(const std::string& name) {
  if (name == "all") return MetricSelect::all();
  if (name == "dev") return MetricSelect::deviation_only();
  if (name == "devl") return MetricSelect::dev_l_only();
  if (name == "plain") return MetricSelect::plain_only();
  throw lapcon::invalid_parameter_error("unknown metric set: " + name);
}

void write_or_print(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lapcon::io_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw lapcon::io_error("write failed: " + path);
}

struct CommandState {
  ExperimentConfig config;
  std::string metrics = "all";
  std::string sweep_kind = "sweep";
  double tau = 0.0;
  int bins = 0;
  double lo = 0.0;
  double hi = 2.0;
  std::string model_json_path;
  std::string report_json_path;
  std::string matrix_out_path;
  std::string config_path;
  std::optional<double> c_eps;
};

void add_model_flags(CLI::App& app, CommandState& s) {
  opt(app, "--p", s.config.p, "Homogeneous edge probability");
  opt(app, "--a", s.config.a, "Within-community expected degree (two-block model)");
  opt(app, "--b", s.config.b, "Cross-community expected degree (two-block model)");
  app.add_flag("--fig1", s.config.fig1_model, "Two-tier product-form degree profile");
  opt(app, "--low-deg", s.config.low_deg, "Profile: low expected degree");
  opt(app, "--high-deg", s.config.high_deg, "Profile: high expected degree");
  opt(app, "--high-frac", s.config.high_frac, "Profile: fraction of high-degree vertices");
}

void add_common_flags(CLI::App& app, CommandState& s) {
  opt(app, "--n", s.config.n, "Vertex count")->required();
  opt(app, "--tau", s.tau, "Single regularization value");
  opt(app, "--tau-grid", s.config.tau_grid, "Comma-separated regularization grid")
      ->delimiter(',');
  opt(app, "--p-grid", s.config.p_grid, "Comma-separated probability grid")
      ->delimiter(',');
  opt(app, "--trials", s.config.trials, "Monte Carlo trials");
  opt(app, "--r", s.config.r, "Tail parameter (>= 1)");
  opt(app, "--alpha", s.config.alpha, "Degree-concentration exponent, in (0,1/2)");
  opt(app, "--beta", s.config.beta, "Tail-tradeoff exponent, in (0,1/4)");
  opt(app, "--C", s.config.C, "Bound constant");
  opt(app, "--quantile", s.config.quantile, "Summary quantile, in (0,1]");
  opt(app, "--seed", s.config.seed, "Master seed (fixed default; never wall clock)");
  opt(app, "--out", s.config.out, "Raw CSV output path");
  opt(app, "--threads", s.config.threads, "Worker threads");
  opt(app, "--config", s.config_path,
      "key=value config file; command-line flags win");
}

// --tau is sugar for a one-point grid.
void fold_tau(CommandState& s, const CLI::App& app) {
  if (app.count("--tau") > 0) {
    if (!s.config.tau_grid.empty())
      throw lapcon::invalid_parameter_error("give either --tau or --tau-grid, not both");
    s.config.tau_grid = {s.tau};
  }
}

int run_experiment(CommandState& s) {
  const lapcon::RunResult result = lapcon::run(s.config);
  if (s.config.out.empty()) {
    std::cout << result.raw_csv;
  } else {
    for (const std::string& f : result.written_files) std::cout << f << '\n';
  }
  return 0;
}

int cmd_gen(CommandState& s) {
  const lapcon::ProbMatrix P = lapcon::make_model(s.config);
  const lapcon::Adjacency A =
      lapcon::threshold(lapcon::sample_uniforms(s.config.n, s.config.seed), P);
  std::ostringstream edges;
  A.write_edge_list(edges);
  write_or_print(s.config.out, edges.str());
  if (!s.model_json_path.empty())
    write_or_print(s.model_json_path, P.to_json() + "\n");
  return 0;
}

int cmd_spectrum(CommandState& s) {
  const lapcon::ProbMatrix P = lapcon::make_model(s.config);
  const lapcon::Adjacency A =
      lapcon::threshold(lapcon::sample_uniforms(s.config.n, s.config.seed), P);
  const lapcon::Vec d = lapcon::degrees(A).array() + s.tau;
  const lapcon::Mat L = lapcon::laplacian(lapcon::regularize(A, s.tau), d);
  if (!s.matrix_out_path.empty()) {
    std::ostringstream dense;
    lapcon::write_matrix_csv(L, dense);
    write_or_print(s.matrix_out_path, dense.str());
  }
  const lapcon::Spectrum spec = lapcon::eig_sym(L);
  std::ostringstream out;
  if (s.bins > 0) {
    out << "bin_left,bin_right,count\n";
    for (const auto& row :
         lapcon::spectrum_histogram(spec.eigenvalues, s.bins, s.lo, s.hi)) {
      out << lapcon::format_double(row.left) << ','
          << lapcon::format_double(row.right) << ',' << row.count << '\n';
    }
  } else {
    lapcon::write_spectrum_csv(spec.eigenvalues, out);
  }
  write_or_print(s.config.out, out.str());
  return 0;
}

int cmd_sbm(CommandState& s) {
  s.config.kind = ExperimentKind::sbm;
  s.config.c_eps = s.c_eps;
  const int exit_code = run_experiment(s);
  if (!s.report_json_path.empty()) {
    // One JSON report per line, trial order.
    const lapcon::ProbMatrix P =
        lapcon::ProbMatrix::sbm(s.config.n, *s.config.a, *s.config.b);
    std::optional<double> tau_fixed;
    if (!s.config.tau_grid.empty()) tau_fixed = s.config.tau_grid[0];
    std::string lines;
    for (int t = 0; t < s.config.trials; ++t) {
      const auto seed = lapcon::derive_seed(s.config.seed, t);
      const lapcon::Adjacency A =
          lapcon::threshold(lapcon::sample_uniforms(s.config.n, seed), P);
      lines += lapcon::recover(A, P, tau_fixed, s.c_eps).to_json() + "\n";
    }
    write_or_print(s.report_json_path, lines);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-graph Laplacian concentration laboratory"};
  app.require_subcommand(1);

  CommandState s;
  std::function<int()> action;

  CLI::App* gen = app.add_subcommand("gen", "Sample a graph and emit its edge list");
  add_common_flags(*gen, s);
  add_model_flags(*gen, s);
  opt(*gen, "--model-json", s.model_json_path, "Also write the model as JSON");
  gen->callback([&] { action = [&] { return cmd_gen(s); }; });

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues or spectral histogram of L(A_tau) for one sample");
  add_common_flags(*spectrum, s);
  add_model_flags(*spectrum, s);
  opt(*spectrum, "--bins", s.bins, "Histogram bins (0 emits raw eigenvalues)");
  opt(*spectrum, "--matrix-out", s.matrix_out_path,
      "Also write the dense Laplacian as CSV");
  opt(*spectrum, "--lo", s.lo, "Histogram lower edge");
  opt(*spectrum, "--hi", s.hi, "Histogram upper edge");
  spectrum->callback([&] { action = [&] { return cmd_spectrum(s); }; });

  CLI::App* deviation = app.add_subcommand(
      "deviation", "Deviation of the regularized Laplacian from its expectation");
  add_common_flags(*deviation, s);
  add_model_flags(*deviation, s);
  opt(*deviation, "--metrics", s.metrics, "Metric set: all|dev|devl|plain");
  deviation->callback([&, deviation] {
    action = [&, deviation] {
      fold_tau(s, *deviation);
      s.config.kind = ExperimentKind::deviation;
      s.config.metrics = parse_metrics(s.metrics);
      return run_experiment(s);
    };
  });

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Uniform-in-p metrics on a shared coupled sample");
  add_common_flags(*sweep_cmd, s);
  add_model_flags(*sweep_cmd, s);
  opt(*sweep_cmd, "--kind", s.sweep_kind,
      "sweep (regularized deviations) or normgap (plain-Laplacian metrics)");
  opt(*sweep_cmd, "--metrics", s.metrics, "Metric set: all|dev|devl|plain");
  sweep_cmd->callback([&, sweep_cmd] {
    action = [&, sweep_cmd] {
      fold_tau(s, *sweep_cmd);
      if (s.sweep_kind == "sweep") {
        s.config.kind = ExperimentKind::sweep;
      } else if (s.sweep_kind == "normgap") {
        s.config.kind = ExperimentKind::normgap;
      } else {
        throw lapcon::invalid_parameter_error("unknown sweep kind: " + s.sweep_kind);
      }
      s.config.metrics = parse_metrics(s.metrics);
      return run_experiment(s);
    };
  });

  CLI::App* sbm = app.add_subcommand(
      "sbm", "Regularized spectral recovery on the two-block model");
  add_common_flags(*sbm, s);
  opt(*sbm, "--a", s.config.a, "Within-community expected degree")->required();
  opt(*sbm, "--b", s.config.b, "Cross-community expected degree")->required();
  opt(*sbm, "--c-eps", s.c_eps, "Recovery threshold constant to compare against");
  opt(*sbm, "--json", s.report_json_path, "Write one JSON report per trial");
  sbm->callback([&, sbm] {
    action = [&, sbm] {
      fold_tau(s, *sbm);
      return cmd_sbm(s);
    };
  });

  CLI::App* bounds = app.add_subcommand("bounds", "Tabulate the deviation bounds");
  add_common_flags(*bounds, s);
  add_model_flags(*bounds, s);
  bounds->callback([&, bounds] {
    action = [&, bounds] {
      fold_tau(s, *bounds);
      s.config.kind = ExperimentKind::bounds;
      return run_experiment(s);
    };
  });

  CLI::App* fig1 = app.add_subcommand(
      "repro-fig1", "Spectral histograms of the two-tier profile across a tau grid");
  add_common_flags(*fig1, s);
  add_model_flags(*fig1, s);
  opt(*fig1, "--bins", s.bins, "Histogram bins");
  opt(*fig1, "--lo", s.lo, "Histogram lower edge");
  opt(*fig1, "--hi", s.hi, "Histogram upper edge");
  fig1->callback([&, fig1] {
    action = [&, fig1] {
      fold_tau(s, *fig1);
      s.config.kind = ExperimentKind::fig1;
      if (!s.config.p && !s.config.a && !s.config.b) s.config.fig1_model = true;
      if (fig1->count("--bins") > 0) s.config.bins = s.bins;
      s.config.hist_lo = s.lo;
      s.config.hist_hi = s.hi;
      if (s.config.out.empty())
        throw lapcon::invalid_parameter_error("repro-fig1 requires --out");
      return run_experiment(s);
    };
  });

  try {
    const std::vector<std::string> args = expand_argv(argc, argv);
    std::vector<const char*> ptrs;
    ptrs.reserve(args.size());
    for (const std::string& a : args) ptrs.push_back(a.c_str());
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    return action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  } catch (const lapcon::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const lapcon::zero_degree_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const lapcon::degenerate_gap_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const lapcon::error& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumericFailure;
  }
}

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridstab.h"

namespace {

// Process exit codes; documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCounterexample = 4;

int exit_code_for(gs_status s) {
  switch (s) {
    case GS_OK:
      return kExitOk;
    case GS_ERR_PARSE:
    case GS_ERR_IO:
      return kExitParse;
    case GS_ERR_SINGULAR_MATRIX:
    case GS_ERR_NOT_SYMMETRIC:
    case GS_ERR_NO_CONVERGENCE:
    case GS_ERR_SINGULAR_LOAD_BLOCK:
    case GS_ERR_SINGULAR_PIVOT:
    case GS_ERR_NON_SYMMETRIC_RESULT:
    case GS_ERR_MULTIPLE_ZERO_MODES:
    case GS_ERR_NO_ZERO_MODE:
    case GS_ERR_RANK_DEFICIENT:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

// Failure helper: report and translate the status.  Usage:
//   if (gs_status s = call(); s != GS_OK) return report(s);
int report(gs_status s) {
  std::cerr << "error: " << gs_last_error() << "\n";
  return exit_code_for(s);
}

struct StringFree {
  void operator()(char* p) const { gs_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

template <typename T, void (*F)(T*)>
struct HandleFree {
  void operator()(T* p) const { F(p); }
};
using GridPtr = std::unique_ptr<gs_grid, HandleFree<gs_grid, gs_grid_free>>;
using AnalysisPtr =
    std::unique_ptr<gs_analysis, HandleFree<gs_analysis, gs_analysis_free>>;
using SweepPtr = std::unique_ptr<gs_sweep, HandleFree<gs_sweep, gs_sweep_free>>;
using FitPtr = std::unique_ptr<gs_fit, HandleFree<gs_fit, gs_fit_free>>;
using TrajectoryPtr =
    std::unique_ptr<gs_trajectory,
                    HandleFree<gs_trajectory, gs_trajectory_free>>;
using TreeReportPtr =
    std::unique_ptr<gs_tree_report,
                    HandleFree<gs_tree_report, gs_tree_report_free>>;
using CycleReportPtr =
    std::unique_ptr<gs_cycle_report,
                    HandleFree<gs_cycle_report, gs_cycle_report_free>>;
using JoinReportPtr =
    std::unique_ptr<gs_join_report,
                    HandleFree<gs_join_report, gs_join_report_free>>;

// Writes to the path when given, stdout otherwise.  Returns an exit code.
int emit(const std::string& out_path, const char* content) {
  if (out_path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open for writing: " << out_path << "\n";
    return kExitParse;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return kExitParse;
  }
  return kExitOk;
}

int load_grid(const std::string& path, GridPtr& grid) {
  gs_grid* raw = nullptr;
  if (gs_status s = gs_grid_load_file(path.c_str(), &raw); s != GS_OK)
    return report(s);
  grid.reset(raw);
  size_t n_warn = 0;
  gs_grid_warning_count(grid.get(), &n_warn);
  for (size_t i = 0; i < n_warn; ++i) {
    char* msg = nullptr;
    if (gs_grid_warning(grid.get(), i, &msg) == GS_OK) {
      std::cerr << "warning: " << msg << "\n";
      gs_string_free(msg);
    }
  }
  return kExitOk;
}

struct AnalyzeOpts {
  std::string path;
  std::string format = "text";
  std::string out;
  double kappa = 1.0;
};

int cmd_analyze(const AnalyzeOpts& o) {
  GridPtr grid;
  if (int rc = load_grid(o.path, grid); rc != kExitOk) return rc;
  gs_analysis* raw = nullptr;
  if (gs_status s = gs_analyze(grid.get(), o.kappa, nullptr, &raw); s != GS_OK)
    return report(s);
  AnalysisPtr analysis(raw);
  char* text = nullptr;
  if (gs_status s = gs_analysis_render(analysis.get(), o.format.c_str(), &text);
      s != GS_OK)
    return report(s);
  OwnedString owned(text);
  return emit(o.out, owned.get());
}

struct GenOpts {
  std::string kind;
  size_t n = 0;
  size_t k = 1;
  double susceptance = -1.0;
  double conductance = 0.0;
  double shunt_b = 0.0;
  double shunt_g = 0.0;
  std::string out;
};

int cmd_gen(const GenOpts& o) {
  gs_grid* raw = nullptr;
  if (gs_status s = gs_grid_generate_named(o.kind.c_str(), o.n, o.k,
                                           o.susceptance, o.conductance,
                                           o.shunt_b, o.shunt_g, &raw);
      s != GS_OK)
    return report(s);
  GridPtr grid(raw);
  char* text = nullptr;
  if (gs_status s = gs_grid_to_json(grid.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  return emit(o.out, owned.get());
}

struct CirculantOpts {
  size_t n_max = 19;
  std::string out;
};

int cmd_circulant(const CirculantOpts& o) {
  gs_sweep* raw = nullptr;
  if (gs_status s = gs_circulant_sweep(o.n_max, &raw); s != GS_OK)
    return report(s);
  SweepPtr sweep(raw);
  char* text = nullptr;
  if (gs_status s = gs_sweep_to_csv(sweep.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  return emit(o.out, owned.get());
}

struct FitOpts {
  std::string in;
  std::string out;
};

int cmd_fit(const FitOpts& o) {
  std::ifstream in(o.in, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open for reading: " << o.in << "\n";
    return kExitParse;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  gs_fit* raw = nullptr;
  if (gs_status s = gs_fit_from_sweep_csv(ss.str().c_str(), &raw); s != GS_OK)
    return report(s);
  FitPtr fit(raw);
  char* text = nullptr;
  if (gs_status s = gs_fit_to_json(fit.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  return emit(o.out, owned.get());
}

struct TreesOpts {
  size_t n = 7;
  std::string out;
};

int cmd_trees(const TreesOpts& o) {
  gs_tree_report* raw = nullptr;
  if (gs_status s = gs_tree_experiment(o.n, &raw); s != GS_OK)
    return report(s);
  TreeReportPtr rep(raw);
  char* text = nullptr;
  if (gs_status s = gs_tree_report_to_csv(rep.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  if (int rc = emit(o.out, owned.get()); rc != kExitOk) return rc;
  int counterexample = 0;
  gs_tree_report_counterexample(rep.get(), &counterexample);
  if (counterexample) {
    size_t violations = 0;
    gs_tree_report_violation_count(rep.get(), &violations);
    std::cerr << "counterexample: " << violations
              << " tree pair(s) violate the diameter ordering\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

struct CyclesOpts {
  std::string tree;
  std::string out;
};

int cmd_cycles(const CyclesOpts& o) {
  GridPtr tree;
  if (int rc = load_grid(o.tree, tree); rc != kExitOk) return rc;
  gs_cycle_report* raw = nullptr;
  if (gs_status s = gs_cycle_experiment(tree.get(), &raw); s != GS_OK)
    return report(s);
  CycleReportPtr rep(raw);
  char* text = nullptr;
  if (gs_status s = gs_cycle_report_to_csv(rep.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  if (int rc = emit(o.out, owned.get()); rc != kExitOk) return rc;
  int counterexample = 0;
  gs_cycle_report_counterexample(rep.get(), &counterexample);
  if (counterexample) {
    size_t violations = 0;
    gs_cycle_report_violation_count(rep.get(), &violations);
    std::cerr << "counterexample: " << violations
              << " edge pair(s) violate the cycle-length ordering\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

struct JoinOpts {
  std::string first;
  std::string second;
  std::string out;
};

int cmd_join(const JoinOpts& o) {
  GridPtr t1, t2;
  if (int rc = load_grid(o.first, t1); rc != kExitOk) return rc;
  if (int rc = load_grid(o.second, t2); rc != kExitOk) return rc;
  gs_join_report* raw = nullptr;
  if (gs_status s = gs_join_experiment(t1.get(), t2.get(), &raw); s != GS_OK)
    return report(s);
  JoinReportPtr rep(raw);
  char* text = nullptr;
  if (gs_status s = gs_join_report_to_csv(rep.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  return emit(o.out, owned.get());
}

struct SimulateOpts {
  std::string grid;
  double gamma = 0.2;
  double dt = 1e-3;
  double t_end = 13.0;
  size_t pulse_target = 0;
  double pulse_magnitude = 1.0;
  double t_on = 3.0;
  double t_off = 3.1;
  double window_start = -1.0; // < 0: default to pulse end
  std::string out;
};

int cmd_simulate(const SimulateOpts& o) {
  GridPtr grid;
  if (int rc = load_grid(o.grid, grid); rc != kExitOk) return rc;
  gs_trajectory* raw = nullptr;
  if (gs_status s =
          gs_simulate(grid.get(), o.gamma, o.dt, o.t_end, o.pulse_target,
                      o.pulse_magnitude, o.t_on, o.t_off, &raw);
      s != GS_OK)
    return report(s);
  TrajectoryPtr traj(raw);

  char* text = nullptr;
  if (gs_status s = gs_trajectory_to_csv(traj.get(), &text); s != GS_OK)
    return report(s);
  OwnedString owned(text);
  if (int rc = emit(o.out, owned.get()); rc != kExitOk) return rc;

  // Summary goes to stderr so stdout stays machine-readable.
  int diverged = 0;
  double when = 0.0;
  gs_trajectory_diverged(traj.get(), &diverged, &when);
  if (diverged) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", when);
    std::cerr << "integration aborted: state overflow at t=" << buf << "\n";
  }

  gs_response cls;
  if (gs_status s = gs_trajectory_response(traj.get(), &cls); s != GS_OK)
    return report(s);
  std::cerr << "response: " << gs_response_name(cls) << "\n";

  const double window = o.window_start >= 0.0 ? o.window_start : o.t_off;
  double ripple = 0.0;
  if (gs_status s = gs_trajectory_ripple(traj.get(), window, &ripple);
      s != GS_OK) {
    if (s == GS_ERR_EMPTY_WINDOW && diverged) {
      std::cerr << "ripple: unavailable (trajectory ended before the window)\n";
      return kExitOk;
    }
    return report(s);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", ripple);
  std::cerr << "ripple: " << buf << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state stability analysis of synchronous grids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(gs_version()); });

  AnalyzeOpts analyze_opts;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Run the full stability pipeline on a grid file");
  analyze->add_option("grid", analyze_opts.path, "grid JSON file")->required();
  analyze->add_option("--format", analyze_opts.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  analyze->add_option("--kappa", analyze_opts.kappa,
                      "coupling scale (default 1)");
  analyze->add_option("--out", analyze_opts.out, "write to file");

  GenOpts gen_opts;
  CLI::App* gen =
      app.add_subcommand("gen", "Generate a named topology as a grid file");
  gen->add_option("--kind", gen_opts.kind,
                  "star, path, ring, complete or circulant")
      ->required()
      ->check(CLI::IsMember({"star", "path", "ring", "complete", "circulant"}));
  gen->add_option("--n", gen_opts.n, "node count")->required();
  gen->add_option("--k", gen_opts.k, "circulant hop count (default 1)");
  gen->add_option("--susceptance", gen_opts.susceptance,
                  "branch susceptance (default -1)");
  gen->add_option("--conductance", gen_opts.conductance,
                  "branch conductance (default 0)");
  gen->add_option("--shunt-b", gen_opts.shunt_b,
                  "per-node shunt susceptance (default 0)");
  gen->add_option("--shunt-g", gen_opts.shunt_g,
                  "per-node shunt conductance (default 0)");
  gen->add_option("--out", gen_opts.out, "write to file");

  CirculantOpts circ_opts;
  CLI::App* circ = app.add_subcommand(
      "circulant", "Closed-form vs numeric stability sweep (CSV)");
  circ->add_option("--n-max", circ_opts.n_max,
                   "largest odd ring size (default 19)");
  circ->add_option("--out", circ_opts.out, "write to file");

  FitOpts fit_opts;
  CLI::App* fit = app.add_subcommand(
      "fit", "Quadratic surface fit over a sweep CSV (JSON)");
  fit->add_option("--in", fit_opts.in, "sweep CSV file")->required();
  fit->add_option("--out", fit_opts.out, "write to file");

  TreesOpts trees_opts;
  CLI::App* trees = app.add_subcommand(
      "trees", "Exhaustive diameter-vs-stability check over labeled trees");
  trees->add_option("--n", trees_opts.n, "tree size (default 7, max 8)");
  trees->add_option("--out", trees_opts.out, "write to file");

  CyclesOpts cycles_opts;
  CLI::App* cycles = app.add_subcommand(
      "cycles", "Single-edge additions to a tree, grouped by cycle length");
  cycles->add_option("--tree", cycles_opts.tree, "tree grid JSON file")
      ->required();
  cycles->add_option("--out", cycles_opts.out, "write to file");

  JoinOpts join_opts;
  CLI::App* join = app.add_subcommand(
      "join", "Best single edge joining two trees, ranked by stability");
  join->add_option("--t1", join_opts.first, "first tree grid file")
      ->required();
  join->add_option("--t2", join_opts.second, "second tree grid file")
      ->required();
  join->add_option("--out", join_opts.out, "write to file");

  SimulateOpts sim_opts;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Pulse-response simulation of the linearized dynamics");
  sim->add_option("--grid", sim_opts.grid, "grid JSON file")->required();
  sim->add_option("--gamma", sim_opts.gamma, "damping (default 0.2)");
  sim->add_option("--dt", sim_opts.dt, "time step (default 1e-3)");
  sim->add_option("--t-end", sim_opts.t_end, "horizon (default 13)");
  sim->add_option("--pulse-gen", sim_opts.pulse_target,
                  "pulsed generator index (default 0)");
  sim->add_option("--pulse-mag", sim_opts.pulse_magnitude,
                  "pulse acceleration (default 1)");
  sim->add_option("--t-on", sim_opts.t_on, "pulse start (default 3)");
  sim->add_option("--t-off", sim_opts.t_off, "pulse end (default 3.1)");
  sim->add_option("--window-start", sim_opts.window_start,
                  "ripple window start (default: pulse end)");
  sim->add_option("--out", sim_opts.out, "write trajectory CSV to file");

  int rc = kExitOk;
  analyze->callback([&] { rc = cmd_analyze(analyze_opts); });
  gen->callback([&] { rc = cmd_gen(gen_opts); });
  circ->callback([&] { rc = cmd_circulant(circ_opts); });
  fit->callback([&] { rc = cmd_fit(fit_opts); });
  trees->callback([&] { rc = cmd_trees(trees_opts); });
  cycles->callback([&] { rc = cmd_cycles(cycles_opts); });
  join->callback([&] { rc = cmd_join(join_opts); });
  sim->callback([&] { rc = cmd_simulate(sim_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}

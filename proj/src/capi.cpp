#include "gridstab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "gridstab/analysis.hpp"
#include "gridstab/circulant.hpp"
#include "gridstab/experiments.hpp"
#include "gridstab/gridfile.hpp"
#include "gridstab/swing.hpp"
#include "gridstab/textio.hpp"

using namespace gridstab;

struct gs_grid {
  GridSpec grid;
  std::vector<std::string> warnings;
};
struct gs_analysis {
  AnalysisResult result;
  Y0Diagnostics diagnostics;
};
struct gs_sweep {
  std::vector<CirculantPoint> points;
};
struct gs_fit {
  QuadraticSurface surface;
};
struct gs_trajectory {
  Trajectory traj;
};
struct gs_tree_report {
  TreeExperimentReport rep;
};
struct gs_cycle_report {
  CycleExperimentReport rep;
};
struct gs_join_report {
  JoinReport rep;
};

namespace {

thread_local std::string g_last_error;

gs_status status_from(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return GS_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return GS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::SingularMatrix: return GS_ERR_SINGULAR_MATRIX;
    case ErrorCode::NotSymmetric: return GS_ERR_NOT_SYMMETRIC;
    case ErrorCode::NoConvergence: return GS_ERR_NO_CONVERGENCE;
    case ErrorCode::Disconnected: return GS_ERR_DISCONNECTED;
    case ErrorCode::Unreachable: return GS_ERR_UNREACHABLE;
    case ErrorCode::NotATree: return GS_ERR_NOT_A_TREE;
    case ErrorCode::AlreadyAdjacent: return GS_ERR_ALREADY_ADJACENT;
    case ErrorCode::InvalidCode: return GS_ERR_INVALID_CODE;
    case ErrorCode::SingularLoadBlock: return GS_ERR_SINGULAR_LOAD_BLOCK;
    case ErrorCode::SingularPivot: return GS_ERR_SINGULAR_PIVOT;
    case ErrorCode::NotUniform: return GS_ERR_NOT_UNIFORM;
    case ErrorCode::NonSymmetricResult: return GS_ERR_NON_SYMMETRIC_RESULT;
    case ErrorCode::MultipleZeroModes: return GS_ERR_MULTIPLE_ZERO_MODES;
    case ErrorCode::NoZeroMode: return GS_ERR_NO_ZERO_MODE;
    case ErrorCode::ZeroAdmittance: return GS_ERR_ZERO_ADMITTANCE;
    case ErrorCode::OddRequired: return GS_ERR_ODD_REQUIRED;
    case ErrorCode::HopOutOfRange: return GS_ERR_HOP_OUT_OF_RANGE;
    case ErrorCode::RankDeficient: return GS_ERR_RANK_DEFICIENT;
    case ErrorCode::NTooLarge: return GS_ERR_N_TOO_LARGE;
    case ErrorCode::EmptyWindow: return GS_ERR_EMPTY_WINDOW;
    case ErrorCode::ParseError: return GS_ERR_PARSE;
    case ErrorCode::IoError: return GS_ERR_IO;
  }
  return GS_ERR_UNKNOWN;
}

template <typename F>
gs_status guarded(F&& f) {
  try {
    f();
    return GS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GS_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GS_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return GS_ERR_UNKNOWN;
  }
}

gs_status invalid(const char* msg) {
  g_last_error = msg;
  return GS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gs_verdict to_c(Verdict v) {
  switch (v) {
    case Verdict::Stable: return GS_VERDICT_STABLE;
    case Verdict::Unstable: return GS_VERDICT_UNSTABLE;
    case Verdict::Marginal: return GS_VERDICT_MARGINAL;
  }
  return GS_VERDICT_MARGINAL;
}

gs_response to_c(ResponseClass c) {
  switch (c) {
    case ResponseClass::Decayed: return GS_RESPONSE_DECAYED;
    case ResponseClass::Oscillating: return GS_RESPONSE_OSCILLATING;
    case ResponseClass::Diverged: return GS_RESPONSE_DIVERGED;
  }
  return GS_RESPONSE_OSCILLATING;
}

} // namespace

extern "C" {

const char* gs_version(void) { return "1.0.0"; }

const char* gs_last_error(void) { return g_last_error.c_str(); }

const char* gs_status_name(gs_status s) {
  switch (s) {
    case GS_OK: return "ok";
    case GS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GS_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case GS_ERR_SINGULAR_MATRIX: return "singular matrix";
    case GS_ERR_NOT_SYMMETRIC: return "not symmetric";
    case GS_ERR_NO_CONVERGENCE: return "no convergence";
    case GS_ERR_DISCONNECTED: return "disconnected grid";
    case GS_ERR_UNREACHABLE: return "unreachable node";
    case GS_ERR_NOT_A_TREE: return "not a tree";
    case GS_ERR_ALREADY_ADJACENT: return "edge already present";
    case GS_ERR_INVALID_CODE: return "invalid tree code";
    case GS_ERR_SINGULAR_LOAD_BLOCK: return "singular load block";
    case GS_ERR_SINGULAR_PIVOT: return "singular pivot";
    case GS_ERR_NOT_UNIFORM: return "not uniform";
    case GS_ERR_NON_SYMMETRIC_RESULT: return "non-symmetric result";
    case GS_ERR_MULTIPLE_ZERO_MODES: return "multiple zero modes";
    case GS_ERR_NO_ZERO_MODE: return "no zero mode";
    case GS_ERR_ZERO_ADMITTANCE: return "zero admittance";
    case GS_ERR_ODD_REQUIRED: return "odd size required";
    case GS_ERR_HOP_OUT_OF_RANGE: return "hop count out of range";
    case GS_ERR_RANK_DEFICIENT: return "rank-deficient fit";
    case GS_ERR_N_TOO_LARGE: return "size above enumeration cap";
    case GS_ERR_EMPTY_WINDOW: return "empty window";
    case GS_ERR_PARSE: return "parse error";
    case GS_ERR_IO: return "io error";
    case GS_ERR_UNKNOWN: return "unknown error";
  }
  return "unknown status";
}

const char* gs_verdict_name(gs_verdict v) {
  switch (v) {
    case GS_VERDICT_STABLE: return "stable";
    case GS_VERDICT_UNSTABLE: return "unstable";
    case GS_VERDICT_MARGINAL: return "marginal";
  }
  return "unknown";
}

const char* gs_response_name(gs_response r) {
  switch (r) {
    case GS_RESPONSE_DECAYED: return "decayed";
    case GS_RESPONSE_OSCILLATING: return "oscillating";
    case GS_RESPONSE_DIVERGED: return "diverged";
  }
  return "unknown";
}

void gs_string_free(char* s) { std::free(s); }

/* ---- grids ---------------------------------------------------------- */

gs_status gs_grid_parse_json(const char* text, gs_grid** out) {
  if (!text || !out) return invalid("gs_grid_parse_json: null argument");
  return guarded([&] {
    ParsedGrid parsed = parse_grid_json(text);
    *out = new gs_grid{std::move(parsed.grid), std::move(parsed.warnings)};
  });
}

gs_status gs_grid_load_file(const char* path, gs_grid** out) {
  if (!path || !out) return invalid("gs_grid_load_file: null argument");
  return guarded([&] {
    ParsedGrid parsed = load_grid_file(path);
    *out = new gs_grid{std::move(parsed.grid), std::move(parsed.warnings)};
  });
}

gs_status gs_grid_generate_named(const char* kind, size_t n, size_t k_hops,
                                 double susceptance, double conductance,
                                 double shunt_b, double shunt_g,
                                 gs_grid** out) {
  if (!kind || !out) return invalid("gs_grid_generate_named: null argument");
  return guarded([&] {
    const NamedTopology topo = named_topology_from_string(kind);
    GridSpec g = generate_named(topo, n, k_hops, Cx{conductance, susceptance},
                                Cx{shunt_g, shunt_b});
    *out = new gs_grid{std::move(g), {}};
  });
}

gs_status gs_grid_from_tree_code(const size_t* code, size_t len,
                                 double susceptance, gs_grid** out) {
  if ((!code && len > 0) || !out)
    return invalid("gs_grid_from_tree_code: null argument");
  return guarded([&] {
    const std::vector<std::size_t> vec(code, code + len);
    GridSpec g = tree_from_pruefer(vec, Cx{0.0, susceptance});
    *out = new gs_grid{std::move(g), {}};
  });
}

void gs_grid_free(gs_grid* g) { delete g; }

gs_status gs_grid_to_json(const gs_grid* g, char** out) {
  if (!g || !out) return invalid("gs_grid_to_json: null argument");
  return guarded([&] { *out = dup_string(grid_to_json(g->grid)); });
}

gs_status gs_grid_node_count(const gs_grid* g, size_t* out) {
  if (!g || !out) return invalid("gs_grid_node_count: null argument");
  *out = g->grid.node_count();
  return GS_OK;
}

gs_status gs_grid_generator_count(const gs_grid* g, size_t* out) {
  if (!g || !out) return invalid("gs_grid_generator_count: null argument");
  *out = g->grid.generator_count();
  return GS_OK;
}

gs_status gs_grid_edge_count(const gs_grid* g, size_t* out) {
  if (!g || !out) return invalid("gs_grid_edge_count: null argument");
  *out = g->grid.edge_count();
  return GS_OK;
}

gs_status gs_grid_warning_count(const gs_grid* g, size_t* out) {
  if (!g || !out) return invalid("gs_grid_warning_count: null argument");
  *out = g->warnings.size();
  return GS_OK;
}

gs_status gs_grid_warning(const gs_grid* g, size_t index, char** out) {
  if (!g || !out) return invalid("gs_grid_warning: null argument");
  if (index >= g->warnings.size())
    return invalid("gs_grid_warning: index out of range");
  return guarded([&] { *out = dup_string(g->warnings[index]); });
}

gs_status gs_grid_is_tree(const gs_grid* g, int* out) {
  if (!g || !out) return invalid("gs_grid_is_tree: null argument");
  return guarded([&] { *out = is_tree(g->grid) ? 1 : 0; });
}

gs_status gs_grid_distance(const gs_grid* g, size_t a, size_t b, size_t* out) {
  if (!g || !out) return invalid("gs_grid_distance: null argument");
  return guarded([&] { *out = distance(g->grid, a, b); });
}

gs_status gs_grid_diameter(const gs_grid* g, size_t* out) {
  if (!g || !out) return invalid("gs_grid_diameter: null argument");
  return guarded([&] { *out = diameter(g->grid); });
}

gs_status gs_grid_cycle_length(const gs_grid* g, size_t a, size_t b,
                               size_t* out) {
  if (!g || !out) return invalid("gs_grid_cycle_length: null argument");
  return guarded([&] { *out = cycle_length_of_edge(g->grid, a, b); });
}

gs_status gs_classify_uniform(const gs_grid* g, double c, gs_verdict* out) {
  if (!g || !out) return invalid("gs_classify_uniform: null argument");
  return guarded([&] { *out = to_c(gershgorin_classify_uniform(g->grid, c)); });
}

/* ---- stability analysis --------------------------------------------- */

gs_status gs_analyze(const gs_grid* g, double kappa, const double* phases,
                     gs_analysis** out) {
  if (!g || !out) return invalid("gs_analyze: null argument");
  return guarded([&] {
    CouplingConstants constants;
    constants.kappa = kappa;
    if (phases)
      constants.phases.emplace(phases, phases + g->grid.generator_count());
    gs_analysis* a = new gs_analysis{analyze_grid(g->grid, constants), {}};
    a->diagnostics = validate_y0(a->result.y0);
    *out = a;
  });
}

void gs_analysis_free(gs_analysis* a) { delete a; }

gs_status gs_analysis_node_count(const gs_analysis* a, size_t* out) {
  if (!a || !out) return invalid("gs_analysis_node_count: null argument");
  *out = a->result.y0.matrix.rows();
  return GS_OK;
}

gs_status gs_analysis_generator_count(const gs_analysis* a, size_t* out) {
  if (!a || !out) return invalid("gs_analysis_generator_count: null argument");
  *out = a->result.y0.n_generators;
  return GS_OK;
}

gs_status gs_analysis_alpha2(const gs_analysis* a, double* out) {
  if (!a || !out) return invalid("gs_analysis_alpha2: null argument");
  *out = a->result.report.alpha2;
  return GS_OK;
}

gs_status gs_analysis_zero_mode(const gs_analysis* a, double* out) {
  if (!a || !out) return invalid("gs_analysis_zero_mode: null argument");
  *out = a->result.report.zero_mode_value;
  return GS_OK;
}

gs_status gs_analysis_verdict(const gs_analysis* a, gs_verdict* out) {
  if (!a || !out) return invalid("gs_analysis_verdict: null argument");
  *out = to_c(a->result.report.verdict);
  return GS_OK;
}

gs_status gs_analysis_eigenvalue(const gs_analysis* a, size_t index,
                                 double* out) {
  if (!a || !out) return invalid("gs_analysis_eigenvalue: null argument");
  const auto& vals = a->result.report.spectrum.eigenvalues;
  if (index >= vals.size())
    return invalid("gs_analysis_eigenvalue: index out of range");
  *out = vals[index];
  return GS_OK;
}

gs_status gs_analysis_y0_entry(const gs_analysis* a, size_t r, size_t c,
                               double* re, double* im) {
  if (!a || !re || !im) return invalid("gs_analysis_y0_entry: null argument");
  const CxMatrix& m = a->result.y0.matrix;
  if (r >= m.rows() || c >= m.cols())
    return invalid("gs_analysis_y0_entry: index out of range");
  *re = m(r, c).real();
  *im = m(r, c).imag();
  return GS_OK;
}

gs_status gs_analysis_y_entry(const gs_analysis* a, size_t r, size_t c,
                              double* re, double* im) {
  if (!a || !re || !im) return invalid("gs_analysis_y_entry: null argument");
  const CxMatrix& m = a->result.y.matrix;
  if (r >= m.rows() || c >= m.cols())
    return invalid("gs_analysis_y_entry: index out of range");
  *re = m(r, c).real();
  *im = m(r, c).imag();
  return GS_OK;
}

gs_status gs_analysis_p_entry(const gs_analysis* a, size_t r, size_t c,
                              double* out) {
  if (!a || !out) return invalid("gs_analysis_p_entry: null argument");
  const RealSymMatrix& m = a->result.p.matrix;
  if (r >= m.size() || c >= m.size())
    return invalid("gs_analysis_p_entry: index out of range");
  *out = m(r, c);
  return GS_OK;
}

gs_status gs_analysis_y0_diagnostics(const gs_analysis* a, double* symmetry,
                                     double* row_sum, int* dominant) {
  if (!a || !symmetry || !row_sum || !dominant)
    return invalid("gs_analysis_y0_diagnostics: null argument");
  *symmetry = a->diagnostics.symmetry_residual;
  *row_sum = a->diagnostics.row_sum_residual;
  *dominant = a->diagnostics.diagonally_dominant ? 1 : 0;
  return GS_OK;
}

gs_status gs_analysis_render(const gs_analysis* a, const char* format,
                             char** out) {
  if (!a || !format || !out) return invalid("gs_analysis_render: null argument");
  return guarded([&] {
    const std::string fmt = format;
    std::string text;
    if (fmt == "text")
      text = analysis_to_text(a->result);
    else if (fmt == "json")
      text = analysis_to_json(a->result);
    else if (fmt == "csv")
      text = analysis_to_csv(a->result);
    else
      fail(ErrorCode::InvalidArgument,
           "render: format must be text, json or csv, got '" + fmt + "'");
    *out = dup_string(text);
  });
}

/* ---- circulant closed form ------------------------------------------ */

gs_status gs_circulant_alpha2_closed(size_t n, size_t k_hops, double* out) {
  if (!out) return invalid("gs_circulant_alpha2_closed: null argument");
  return guarded([&] { *out = alpha2_closed_form(n, k_hops); });
}

gs_status gs_circulant_sweep(size_t n_max, gs_sweep** out) {
  if (!out) return invalid("gs_circulant_sweep: null argument");
  return guarded([&] { *out = new gs_sweep{circulant_sweep(n_max)}; });
}

void gs_sweep_free(gs_sweep* s) { delete s; }

gs_status gs_sweep_count(const gs_sweep* s, size_t* out) {
  if (!s || !out) return invalid("gs_sweep_count: null argument");
  *out = s->points.size();
  return GS_OK;
}

gs_status gs_sweep_row(const gs_sweep* s, size_t index, size_t* n,
                       size_t* k_hops, size_t* degree, double* alpha2_closed,
                       double* alpha2_numeric, double* abs_err) {
  if (!s) return invalid("gs_sweep_row: null argument");
  if (index >= s->points.size())
    return invalid("gs_sweep_row: index out of range");
  const CirculantPoint& p = s->points[index];
  if (n) *n = p.n;
  if (k_hops) *k_hops = p.k;
  if (degree) *degree = p.degree;
  if (alpha2_closed) *alpha2_closed = p.alpha2_closed;
  if (alpha2_numeric) *alpha2_numeric = p.alpha2_numeric;
  if (abs_err) *abs_err = p.abs_err;
  return GS_OK;
}

gs_status gs_sweep_to_csv(const gs_sweep* s, char** out) {
  if (!s || !out) return invalid("gs_sweep_to_csv: null argument");
  return guarded([&] { *out = dup_string(sweep_to_csv(s->points)); });
}

gs_status gs_fit_from_sweep_csv(const char* csv_text, gs_fit** out) {
  if (!csv_text || !out) return invalid("gs_fit_from_sweep_csv: null argument");
  return guarded([&] {
    const std::vector<CirculantPoint> pts = parse_sweep_csv(csv_text);
    std::vector<FitPoint> fit_pts;
    fit_pts.reserve(pts.size());
    for (const CirculantPoint& p : pts)
      fit_pts.push_back(FitPoint{static_cast<double>(p.n),
                                 static_cast<double>(p.degree),
                                 p.alpha2_closed});
    *out = new gs_fit{quadratic_fit(fit_pts)};
  });
}

void gs_fit_free(gs_fit* f) { delete f; }

gs_status gs_fit_coefficient(const gs_fit* f, size_t index, double* out) {
  if (!f || !out) return invalid("gs_fit_coefficient: null argument");
  if (index >= f->surface.coefficients.size())
    return invalid("gs_fit_coefficient: index out of range");
  *out = f->surface.coefficients[index];
  return GS_OK;
}

gs_status gs_fit_r2(const gs_fit* f, double* out) {
  if (!f || !out) return invalid("gs_fit_r2: null argument");
  *out = f->surface.r2;
  return GS_OK;
}

gs_status gs_fit_to_json(const gs_fit* f, char** out) {
  if (!f || !out) return invalid("gs_fit_to_json: null argument");
  return guarded([&] { *out = dup_string(fit_to_json(f->surface)); });
}

/* ---- pulse response simulation --------------------------------------- */

gs_status gs_simulate(const gs_grid* g, double gamma, double dt, double t_end,
                      size_t pulse_target, double pulse_magnitude,
                      double t_on, double t_off, gs_trajectory** out) {
  if (!g || !out) return invalid("gs_simulate: null argument");
  return guarded([&] {
    const AnalysisResult analysis = analyze_grid(g->grid);
    SimConfig cfg;
    cfg.gamma = gamma;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.pulse = PulseSpec{pulse_target, pulse_magnitude, t_on, t_off};
    *out = new gs_trajectory{simulate(analysis.p, cfg)};
  });
}

void gs_trajectory_free(gs_trajectory* t) { delete t; }

gs_status gs_trajectory_generator_count(const gs_trajectory* t, size_t* out) {
  if (!t || !out) return invalid("gs_trajectory_generator_count: null argument");
  *out = t->traj.n;
  return GS_OK;
}

gs_status gs_trajectory_sample_count(const gs_trajectory* t, size_t* out) {
  if (!t || !out) return invalid("gs_trajectory_sample_count: null argument");
  *out = t->traj.samples();
  return GS_OK;
}

gs_status gs_trajectory_sample(const gs_trajectory* t, size_t index,
                               double* time, double* delta, double* omega,
                               double* accel) {
  if (!t) return invalid("gs_trajectory_sample: null argument");
  if (index >= t->traj.samples())
    return invalid("gs_trajectory_sample: index out of range");
  if (time) *time = t->traj.times[index];
  for (size_t i = 0; i < t->traj.n; ++i) {
    if (delta) delta[i] = t->traj.delta_at(index, i);
    if (omega) omega[i] = t->traj.omega_at(index, i);
    if (accel) accel[i] = t->traj.accel_at(index, i);
  }
  return GS_OK;
}

gs_status gs_trajectory_diverged(const gs_trajectory* t, int* diverged,
                                 double* when) {
  if (!t || !diverged) return invalid("gs_trajectory_diverged: null argument");
  *diverged = t->traj.diverged_at.has_value() ? 1 : 0;
  if (t->traj.diverged_at && when) *when = *t->traj.diverged_at;
  return GS_OK;
}

gs_status gs_trajectory_ripple(const gs_trajectory* t, double window_start,
                               double* out) {
  if (!t || !out) return invalid("gs_trajectory_ripple: null argument");
  return guarded([&] { *out = ripple_metric(t->traj, window_start); });
}

gs_status gs_trajectory_response(const gs_trajectory* t, gs_response* out) {
  if (!t || !out) return invalid("gs_trajectory_response: null argument");
  return guarded([&] { *out = to_c(divergence_detect(t->traj)); });
}

gs_status gs_trajectory_to_csv(const gs_trajectory* t, char** out) {
  if (!t || !out) return invalid("gs_trajectory_to_csv: null argument");
  return guarded([&] { *out = dup_string(trajectory_to_csv(t->traj)); });
}

/* ---- topology experiments -------------------------------------------- */

gs_status gs_tree_experiment(size_t n, gs_tree_report** out) {
  if (!out) return invalid("gs_tree_experiment: null argument");
  return guarded([&] { *out = new gs_tree_report{tree_diameter_experiment(n)}; });
}

void gs_tree_report_free(gs_tree_report* r) { delete r; }

gs_status gs_tree_report_instance_count(const gs_tree_report* r, size_t* out) {
  if (!r || !out) return invalid("gs_tree_report_instance_count: null argument");
  *out = r->rep.records.size();
  return GS_OK;
}

gs_status gs_tree_report_violation_count(const gs_tree_report* r, size_t* out) {
  if (!r || !out)
    return invalid("gs_tree_report_violation_count: null argument");
  *out = r->rep.violation_count;
  return GS_OK;
}

gs_status gs_tree_report_counterexample(const gs_tree_report* r, int* out) {
  if (!r || !out) return invalid("gs_tree_report_counterexample: null argument");
  *out = r->rep.counterexample_found ? 1 : 0;
  return GS_OK;
}

gs_status gs_tree_report_to_csv(const gs_tree_report* r, char** out) {
  if (!r || !out) return invalid("gs_tree_report_to_csv: null argument");
  return guarded([&] { *out = dup_string(trees_to_csv(r->rep)); });
}

gs_status gs_cycle_experiment(const gs_grid* tree, gs_cycle_report** out) {
  if (!tree || !out) return invalid("gs_cycle_experiment: null argument");
  return guarded(
      [&] { *out = new gs_cycle_report{cycle_addition_experiment(tree->grid)}; });
}

void gs_cycle_report_free(gs_cycle_report* r) { delete r; }

gs_status gs_cycle_report_finding_count(const gs_cycle_report* r, size_t* out) {
  if (!r || !out) return invalid("gs_cycle_report_finding_count: null argument");
  *out = r->rep.findings.size();
  return GS_OK;
}

gs_status gs_cycle_report_finding(const gs_cycle_report* r, size_t index,
                                  size_t* a, size_t* b, size_t* cycle_length,
                                  double* alpha2) {
  if (!r) return invalid("gs_cycle_report_finding: null argument");
  if (index >= r->rep.findings.size())
    return invalid("gs_cycle_report_finding: index out of range");
  const CycleFinding& f = r->rep.findings[index];
  if (a) *a = f.a;
  if (b) *b = f.b;
  if (cycle_length) *cycle_length = f.cycle_length;
  if (alpha2) *alpha2 = f.alpha2;
  return GS_OK;
}

gs_status gs_cycle_report_violation_count(const gs_cycle_report* r,
                                          size_t* out) {
  if (!r || !out)
    return invalid("gs_cycle_report_violation_count: null argument");
  *out = r->rep.violation_count;
  return GS_OK;
}

gs_status gs_cycle_report_counterexample(const gs_cycle_report* r, int* out) {
  if (!r || !out)
    return invalid("gs_cycle_report_counterexample: null argument");
  *out = r->rep.counterexample_found ? 1 : 0;
  return GS_OK;
}

gs_status gs_cycle_report_to_csv(const gs_cycle_report* r, char** out) {
  if (!r || !out) return invalid("gs_cycle_report_to_csv: null argument");
  return guarded([&] { *out = dup_string(cycles_to_csv(r->rep)); });
}

gs_status gs_join_experiment(const gs_grid* t1, const gs_grid* t2,
                             gs_join_report** out) {
  if (!t1 || !t2 || !out) return invalid("gs_join_experiment: null argument");
  return guarded(
      [&] { *out = new gs_join_report{best_join_edge(t1->grid, t2->grid)}; });
}

void gs_join_report_free(gs_join_report* r) { delete r; }

gs_status gs_join_report_best(const gs_join_report* r, size_t* a, size_t* b,
                              double* alpha2, size_t* diameter) {
  if (!r) return invalid("gs_join_report_best: null argument");
  if (a) *a = r->rep.best.a;
  if (b) *b = r->rep.best.b;
  if (alpha2) *alpha2 = r->rep.best.alpha2;
  if (diameter) *diameter = r->rep.best.diameter;
  return GS_OK;
}

gs_status gs_join_report_flags(const gs_join_report* r,
                               int* best_is_center_center,
                               int* argmax_minimizes_diameter) {
  if (!r) return invalid("gs_join_report_flags: null argument");
  if (best_is_center_center)
    *best_is_center_center = r->rep.best_is_center_center ? 1 : 0;
  if (argmax_minimizes_diameter)
    *argmax_minimizes_diameter = r->rep.alpha2_argmax_minimizes_diameter ? 1 : 0;
  return GS_OK;
}

gs_status gs_join_report_to_csv(const gs_join_report* r, char** out) {
  if (!r || !out) return invalid("gs_join_report_to_csv: null argument");
  return guarded([&] { *out = dup_string(join_to_csv(r->rep)); });
}

} /* extern "C" */

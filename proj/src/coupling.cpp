#include "gridstab/coupling.hpp"

#include <algorithm>
#include <cmath>

namespace gridstab {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Marginal: return "marginal";
  }
  return "unknown";
}

CouplingMatrix build_coupling(const ReducedAdmittance& y,
                              const CouplingConstants& constants) {
  const std::size_t n = y.matrix.rows();
  if (y.matrix.cols() != n)
    fail(ErrorCode::DimensionMismatch, "coupling: matrix must be square");
  if (n == 0) fail(ErrorCode::InvalidArgument, "coupling: empty matrix");
  if (!(std::isfinite(constants.kappa)) || constants.kappa <= 0.0)
    fail(ErrorCode::InvalidArgument, "coupling: kappa must be positive");

  std::vector<double> phases(n, 0.0);
  if (constants.phases) {
    if (constants.phases->size() != n)
      fail(ErrorCode::InvalidArgument,
           "coupling: need one phase per generator");
    phases = *constants.phases;
    for (double p : phases)
      if (!std::isfinite(p))
        fail(ErrorCode::InvalidArgument, "coupling: non-finite phase");
  }

  std::vector<double> p(n * n, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return p[r * n + c]; };
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = phases[i] - phases[j];
      const double g = y.matrix(i, j).real();
      const double b = y.matrix(i, j).imag();
      at(i, j) = constants.kappa * (g * std::sin(d) - b * std::cos(d));
      scale = std::max(scale, std::abs(at(i, j)));
    }

  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(at(i, j) - at(j, i)) > tol)
        fail(ErrorCode::NonSymmetricResult,
             "coupling: entries (" + std::to_string(i) + "," +
                 std::to_string(j) +
                 ") and transpose disagree; asymmetric operating point");
      at(j, i) = at(i, j); // collapse roundoff-level disagreement exactly
    }

  // Diagonal closes each row to an exactly zero sum.
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row += at(i, j);
    at(i, i) = -row;
  }

  return CouplingMatrix{RealSymMatrix(n, std::move(p))};
}

std::size_t pick_zero_mode(const std::vector<double>& ascending, double tau0) {
  std::size_t count = 0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < ascending.size(); ++i)
    if (std::abs(ascending[i]) < tau0) {
      ++count;
      idx = i;
    }
  if (count == 0)
    fail(ErrorCode::NoZeroMode,
         "stability: no eigenvalue inside the zero band (grid likely has a "
         "nonzero row sum)");
  if (count > 1)
    fail(ErrorCode::MultipleZeroModes,
         "stability: " + std::to_string(count) +
             " eigenvalues inside the zero band (grid likely disconnected)");
  return idx;
}

Verdict classify_alpha2(double alpha2, double tau0) noexcept {
  if (alpha2 > tau0) return Verdict::Stable;
  if (alpha2 < -tau0) return Verdict::Unstable;
  return Verdict::Marginal;
}

StabilityReport stability_value(const RealSymMatrix& p) {
  const std::size_t n = p.size();
  if (n < 2)
    fail(ErrorCode::InvalidArgument,
         "stability: need at least two generators");
  const double tau0 = 1e-8 * std::max(1.0, p.norm_inf());

  StabilityReport rep;
  rep.spectrum = eig_symmetric(p);
  const std::size_t zidx = pick_zero_mode(rep.spectrum.eigenvalues, tau0);
  rep.zero_mode_value = rep.spectrum.eigenvalues[zidx];
  rep.alpha2 = (zidx == 0) ? rep.spectrum.eigenvalues[1]
                           : rep.spectrum.eigenvalues[0];
  rep.verdict = classify_alpha2(rep.alpha2, tau0);
  return rep;
}

StabilityReport stability_value(const CouplingMatrix& p) {
  return stability_value(p.matrix);
}

Verdict gershgorin_classify_uniform(const GridSpec& g, double c) {
  if (c == 0.0)
    fail(ErrorCode::ZeroAdmittance, "classify: susceptance must be nonzero");
  if (!std::isfinite(c))
    fail(ErrorCode::InvalidArgument, "classify: susceptance must be finite");
  if (g.node_count() < 2)
    fail(ErrorCode::InvalidArgument, "classify: need at least two nodes");
  if (g.load_count() != 0)
    fail(ErrorCode::NotUniform, "classify: loads present");
  if (!is_connected(g))
    fail(ErrorCode::Disconnected, "classify: grid is not connected");

  const double tol = 1e-12 * std::max(1.0, std::abs(c));
  for (const Edge& e : g.edges())
    if (std::abs(e.admittance.real()) > tol ||
        std::abs(e.admittance.imag() - c) > tol)
      fail(ErrorCode::NotUniform,
           "classify: branch " + std::to_string(e.a) + "-" +
               std::to_string(e.b) + " deviates from the common susceptance");
  for (const Node& node : g.nodes())
    if (std::abs(node.shunt) > tol)
      fail(ErrorCode::NotUniform,
           "classify: node " + std::to_string(node.id) + " has a shunt");

  // Coupling is (-c) times the graph Laplacian: every Gershgorin disc sits on
  // the nonnegative side for c < 0 and the nonpositive side for c > 0, and
  // connectivity pins a single zero mode, so the sign of c decides directly.
  return c < 0.0 ? Verdict::Stable : Verdict::Unstable;
}

TransparencyReport load_transparency_check(const ReducedAdmittance& core) {
  const std::size_t n = core.matrix.rows();
  if (core.matrix.cols() != n)
    fail(ErrorCode::DimensionMismatch, "transparency: matrix must be square");
  if (n < 2)
    fail(ErrorCode::InvalidArgument,
         "transparency: need at least two generators");

  const Cx j{0.0, 1.0};
  AdmittanceMatrix aug;
  aug.n_generators = n;
  aug.matrix = CxMatrix(2 * n, 2 * n);
  aug.shunts.assign(2 * n, Cx{});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.matrix(r, c) = core.matrix(r, c);
    aug.matrix(r, r) -= j;
    aug.matrix(r, n + r) = j;
    aug.matrix(n + r, r) = j;
    aug.matrix(n + r, n + r) = -j;
  }

  const ReducedAdmittance back = schur_reduce(aug);

  TransparencyReport rep;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      rep.max_deviation = std::max(
          rep.max_deviation, std::abs(back.matrix(r, c) - core.matrix(r, c)));

  const CouplingMatrix p_core = build_coupling(core);
  const CouplingMatrix p_back = build_coupling(back);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      rep.coupling_deviation =
          std::max(rep.coupling_deviation,
                   std::abs(p_back.matrix(r, c) - p_core.matrix(r, c)));

  const double tol = 1e-12 * std::max(1.0, core.matrix.max_abs());
  rep.passed = rep.max_deviation <= tol && rep.coupling_deviation <= tol;
  return rep;
}

} // namespace gridstab

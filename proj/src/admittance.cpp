#include "gridstab/admittance.hpp"

#include <algorithm>
#include <cmath>

namespace gridstab {

AdmittanceMatrix build_y0(const GridSpec& g) {
  if (!is_connected(g))
    fail(ErrorCode::Disconnected, "admittance: grid is not connected");
  const std::size_t v = g.node_count();
  AdmittanceMatrix out;
  out.matrix = CxMatrix(v, v);
  out.n_generators = g.generator_count();
  out.shunts.resize(v);
  for (const Node& node : g.nodes()) {
    out.shunts[node.id] = node.shunt;
    out.matrix(node.id, node.id) = node.shunt;
  }
  for (const Edge& e : g.edges()) {
    out.matrix(e.a, e.a) += e.admittance;
    out.matrix(e.b, e.b) += e.admittance;
    out.matrix(e.a, e.b) -= e.admittance;
    out.matrix(e.b, e.a) -= e.admittance;
  }
  return out;
}

Y0Diagnostics validate_y0(const AdmittanceMatrix& y0) {
  const CxMatrix& y = y0.matrix;
  const std::size_t v = y.rows();
  if (y.cols() != v || y0.shunts.size() != v)
    fail(ErrorCode::DimensionMismatch, "validate: inconsistent matrix/shunts");
  Y0Diagnostics d;
  const double tol = 1e-12 * std::max(1.0, y.max_abs());
  for (std::size_t r = 0; r < v; ++r) {
    Cx row_sum{};
    double off_mass = 0.0;
    for (std::size_t s = 0; s < v; ++s) {
      row_sum += y(r, s);
      if (s != r) {
        off_mass += std::abs(y(r, s));
        d.symmetry_residual =
            std::max(d.symmetry_residual, std::abs(y(r, s) - y(s, r)));
      }
    }
    d.row_sum_residual =
        std::max(d.row_sum_residual, std::abs(row_sum - y0.shunts[r]));
    if (std::abs(y(r, r)) + tol < off_mass) d.diagonally_dominant = false;
  }
  return d;
}

} // namespace gridstab

#pragma once

#include "gridstab/grid.hpp"
#include "gridstab/numerics.hpp"

namespace gridstab {

// Full nodal admittance matrix of a grid, generators occupying the leading
// rows/columns.  The per-node shunt admittances are carried along so the
// row-sum diagnostic can be evaluated without the originating grid.
struct AdmittanceMatrix {
  CxMatrix matrix;          // v x v, v = node count
  std::size_t n_generators = 0;
  std::vector<Cx> shunts;   // length v, indexed like the matrix
};

// Assemble the nodal matrix: diagonal (r, r) = shunt_r + sum of admittances of
// branches at r; off-diagonal (r, s) = minus the branch admittance between r
// and s (0 when absent).  Throws Disconnected for a non-connected grid.
AdmittanceMatrix build_y0(const GridSpec& g);

struct Y0Diagnostics {
  double symmetry_residual = 0.0;  // max |Y(r,s) - Y(s,r)|
  double row_sum_residual = 0.0;   // max |row sum - shunt_r|
  bool diagonally_dominant = true; // |Y(r,r)| >= sum_{s != r} |Y(r,s)| per row
};

Y0Diagnostics validate_y0(const AdmittanceMatrix& y0);

} // namespace gridstab

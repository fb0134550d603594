#pragma once

#include <optional>

#include "gridstab/admittance.hpp"

namespace gridstab {

// Generator-only effective admittance matrix obtained by eliminating all load
// nodes from the full nodal matrix.
struct ReducedAdmittance {
  CxMatrix matrix; // n x n, n = generator count
};

// Block elimination in one shot: with Y0 = [[A, B], [C, D]] partitioned at the
// generator/load boundary, the result is A - B D^{-1} C.  Throws
// SingularLoadBlock when D is not invertible.
ReducedAdmittance schur_reduce(const AdmittanceMatrix& y0);

// Equivalent elimination one load at a time; load_order (indices into the load
// block, a permutation of 0..l-1) selects the elimination sequence, default
// 0,1,2,...  Throws SingularPivot naming the load whose diagonal vanished.
ReducedAdmittance iterative_reduce(
    const AdmittanceMatrix& y0,
    std::optional<std::vector<std::size_t>> load_order = std::nullopt);

// Structure checks for a reduced matrix coming from a grid whose branches all
// share one admittance A and whose shunts are nonnegative real multiples of A.
// Every entry of both matrices is divided by A; the resulting coefficients
// must be real, with off-diagonals in {0, -1} for the full matrix (NotUniform
// otherwise).  The five properties below are then evaluated on the reduced
// coefficient matrix at 1e-9 tolerance.
struct PreservationReport {
  bool symmetric = false;
  bool invertible = false;
  bool offdiag_nonpositive = false;   // reduced off-diagonal coefficients <= 0
  bool diagonally_dominant = false;   // |K_ii| >= sum_{j != i} |K_ij| per row
  bool diagonal_positive = false;     // reduced diagonal coefficients > 0
  bool all() const {
    return symmetric && invertible && offdiag_nonpositive &&
           diagonally_dominant && diagonal_positive;
  }
};

PreservationReport preservation_report(const AdmittanceMatrix& y0,
                                       const ReducedAdmittance& reduced,
                                       Cx common_admittance);

} // namespace gridstab

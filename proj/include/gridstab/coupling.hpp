#pragma once

#include <optional>
#include <vector>

#include "gridstab/grid.hpp"
#include "gridstab/kron.hpp"
#include "gridstab/numerics.hpp"

namespace gridstab {

// Operating-point data for building the coupling matrix.  kappa is the common
// inertia/rating scale; phases (one steady-state angle per generator) default
// to all-zero, under which the coupling reduces to minus the susceptance.
struct CouplingConstants {
  double kappa = 1.0;
  std::optional<std::vector<double>> phases;
};

// Symmetric generator-to-generator coupling with exactly zero row sums by
// construction (diagonal = minus the off-diagonal row sum).
struct CouplingMatrix {
  RealSymMatrix matrix;
};

// P(i,j) = kappa * (G_ij sin(d_i - d_j) - B_ij cos(d_i - d_j)) for i != j,
// where G + jB is the reduced admittance entry; P(i,i) closes the row to zero.
// Throws NonSymmetricResult if the off-diagonal part comes out asymmetric
// beyond 1e-12 relative (possible only for asymmetric input).
CouplingMatrix build_coupling(const ReducedAdmittance& y,
                              const CouplingConstants& constants = {});

enum class Verdict { Stable, Unstable, Marginal };

const char* verdict_name(Verdict v) noexcept;

struct StabilityReport {
  Spectrum spectrum;            // all eigenvalues, ascending
  double zero_mode_value = 0.0; // the eigenvalue identified as the drift mode
  double alpha2 = 0.0;          // smallest remaining eigenvalue
  Verdict verdict = Verdict::Marginal;
};

// Zero-mode band: tau0 = 1e-8 * max(1, inf-norm of the matrix).  Exactly one
// eigenvalue with |lambda| < tau0 must exist (MultipleZeroModes / NoZeroMode
// otherwise); it is removed and the smallest survivor is the stability value.
// Verdict: Stable above +tau0, Unstable below -tau0, Marginal in the closed
// band between.
StabilityReport stability_value(const RealSymMatrix& p);
StabilityReport stability_value(const CouplingMatrix& p);

// Pure pieces of the above, factored out so the band edges are testable with
// exact inputs.  pick_zero_mode returns the index into the ascending spectrum.
std::size_t pick_zero_mode(const std::vector<double>& ascending, double tau0);
Verdict classify_alpha2(double alpha2, double tau0) noexcept;

// Eigensolve-free screen for grids whose branches all have admittance j*c
// (pure susceptance c) and zero shunts: Gershgorin discs of the coupling lie
// in [0, 2*max_degree*(-c)], so c < 0 certifies Stable and c > 0 Unstable.
// Errors: ZeroAdmittance (c == 0), NotUniform (branch deviates from j*c or a
// shunt is present), Disconnected.
Verdict gershgorin_classify_uniform(const GridSpec& g, double c);

// A load attached to each generator through a pure-susceptance branch chosen
// so the load block is -jI is invisible after reduction: the augmented matrix
// [[A, jI], [jI, -jI]] with A = core - jI reduces exactly back to the core.
// The check performs that augmentation + reduction and reports the largest
// entrywise deviation plus the deviation of the two coupling matrices.
struct TransparencyReport {
  bool passed = false;
  double max_deviation = 0.0;          // reduced matrix vs core matrix
  double coupling_deviation = 0.0;     // coupling built from each
};

TransparencyReport load_transparency_check(const ReducedAdmittance& core);

} // namespace gridstab

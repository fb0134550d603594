#pragma once

#include "gridstab/admittance.hpp"
#include "gridstab/coupling.hpp"
#include "gridstab/grid.hpp"
#include "gridstab/kron.hpp"

namespace gridstab {

// Full pipeline: nodal matrix -> load elimination -> coupling -> spectrum.
struct AnalysisResult {
  AdmittanceMatrix y0;
  ReducedAdmittance y;
  CouplingMatrix p;
  StabilityReport report;
};

AnalysisResult analyze_grid(const GridSpec& g,
                            const CouplingConstants& constants = {});

// Renderings used by the CLI.  All floats go through the fixed 12-digit
// formatter, so identical inputs give byte-identical output.
std::string analysis_to_text(const AnalysisResult& r);
std::string analysis_to_json(const AnalysisResult& r);
// Long-format CSV: quantity,i,j,value with empty i/j where not applicable;
// complex matrices appear as separate _re/_im quantities.
std::string analysis_to_csv(const AnalysisResult& r);

} // namespace gridstab

#pragma once

#include <string>
#include <vector>

#include "parkinglot/config.hpp"

namespace parkinglot {

struct ExperimentResult {
  bool passed = false;
  std::vector<std::string> files;
  std::string summary;
};

// Figure-2 style refutation: a long verified chain of strips meeting both
// members of a radial-dual strip pair.
ExperimentResult exp_fig2(const ExperimentConfig& cfg);

// Pairwise curtain-model upper bounds among {(0, 2^i)}: bounded while the
// underlying distances diverge.
ExperimentResult exp_quasipoint(const ExperimentConfig& cfg);

// Conditional curtain-model lower bounds between (0,1) and (theta,1) via fan
// chains, with the empirical separation estimate and the crossing past the
// radial diameter bound.
ExperimentResult exp_quasiline(const ExperimentConfig& cfg);

// Attach-point contrast between the glued spaces W and Z, plus the QI fit
// for the shear map between them.
ExperimentResult exp_wz(const ExperimentConfig& cfg);

// Grid-graph oracle agreement suite for the exact distance formula.
ExperimentResult exp_oracle_validation(const ExperimentConfig& cfg);

// QI fits for the shear self-map and the source/image distortion table with
// its crossover row.
ExperimentResult exp_qi(const ExperimentConfig& cfg);

// name in {fig2, quasipoint, quasiline, wz, oracle, qi}
ExperimentResult run_experiment(const std::string& name,
                                const ExperimentConfig& cfg);
std::vector<std::string> experiment_names();

}  // namespace parkinglot

#pragma once

#include <cstdint>
#include <string>

namespace parkinglot {

// Flat key=value experiment configuration; every field has a desk-scale
// default so experiments run out of the box.
struct ExperimentConfig {
  double rho = 0.5;
  int lmax = 30;
  uint64_t seed = 20260815;

  int fig2_k = 50;
  int refute_budget = 30000;
  int meets_budget = 200;
  int disjoint_budget = 500;

  int oracle_pairs = 200;
  double oracle_resolution = 0.01;
  double window_theta_lo = -9.42477796076938;  // -3*pi
  double window_theta_hi = 9.42477796076938;
  double window_r_lo = 1.0;
  double window_r_hi = 10.0;

  int attach_max = 40;
  int qi_pairs = 10000;

  std::string out_dir = "out";
  bool plots = false;
};

// Parses `key=value` lines; '#' starts a comment; blank lines ignored.
// Unknown keys or malformed values raise a domain error.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& c);

}  // namespace parkinglot

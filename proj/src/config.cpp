#include "parkinglot/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "parkinglot/csv.hpp"

namespace parkinglot {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("config line " + std::to_string(lineno) +
                              ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "rho") c.rho = std::stod(val);
      else if (key == "lmax") c.lmax = std::stoi(val);
      else if (key == "seed") c.seed = std::stoull(val);
      else if (key == "fig2_k") c.fig2_k = std::stoi(val);
      else if (key == "refute_budget") c.refute_budget = std::stoi(val);
      else if (key == "meets_budget") c.meets_budget = std::stoi(val);
      else if (key == "disjoint_budget") c.disjoint_budget = std::stoi(val);
      else if (key == "oracle_pairs") c.oracle_pairs = std::stoi(val);
      else if (key == "oracle_resolution") c.oracle_resolution = std::stod(val);
      else if (key == "window_theta_lo") c.window_theta_lo = std::stod(val);
      else if (key == "window_theta_hi") c.window_theta_hi = std::stod(val);
      else if (key == "window_r_lo") c.window_r_lo = std::stod(val);
      else if (key == "window_r_hi") c.window_r_hi = std::stod(val);
      else if (key == "attach_max") c.attach_max = std::stoi(val);
      else if (key == "qi_pairs") c.qi_pairs = std::stoi(val);
      else if (key == "out_dir") c.out_dir = val;
      else if (key == "plots") c.plots = (val == "true" || val == "1");
      else
        throw std::domain_error("config line " + std::to_string(lineno) +
                                ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw std::domain_error("config line " + std::to_string(lineno) +
                              ": bad value for '" + key + "'");
    }
  }
  if (!(c.rho > 0.0 && c.rho < 1.0))
    throw std::domain_error("config: rho must lie in (0,1)");
  if (c.lmax < 1) throw std::domain_error("config: lmax must be >= 1");
  if (c.fig2_k < 0 || c.refute_budget < 0 || c.meets_budget < 0 ||
      c.disjoint_budget < 0 || c.oracle_pairs < 0 || c.qi_pairs < 0)
    throw std::domain_error("config: budgets must be >= 0");
  if (!(c.oracle_resolution > 0.0))
    throw std::domain_error("config: oracle_resolution must be > 0");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::domain_error("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "rho=" << fmt12(c.rho) << "\n";
  out << "lmax=" << c.lmax << "\n";
  out << "seed=" << c.seed << "\n";
  out << "fig2_k=" << c.fig2_k << "\n";
  out << "refute_budget=" << c.refute_budget << "\n";
  out << "meets_budget=" << c.meets_budget << "\n";
  out << "disjoint_budget=" << c.disjoint_budget << "\n";
  out << "oracle_pairs=" << c.oracle_pairs << "\n";
  out << "oracle_resolution=" << fmt12(c.oracle_resolution) << "\n";
  out << "window_theta_lo=" << fmt12(c.window_theta_lo) << "\n";
  out << "window_theta_hi=" << fmt12(c.window_theta_hi) << "\n";
  out << "window_r_lo=" << fmt12(c.window_r_lo) << "\n";
  out << "window_r_hi=" << fmt12(c.window_r_hi) << "\n";
  out << "attach_max=" << c.attach_max << "\n";
  out << "qi_pairs=" << c.qi_pairs << "\n";
  out << "out_dir=" << c.out_dir << "\n";
  out << "plots=" << (c.plots ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace parkinglot

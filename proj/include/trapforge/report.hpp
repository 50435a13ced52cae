#pragma once

#include <string>
#include <vector>

#include "trapforge/config.hpp"

// Subcommand drivers shared by the CLI and the test suites. Every driver
// writes CSV/key-value files under out_dir and returns the paths written.
// Output formatting is fixed (9 significant digits) so identical configs
// produce byte-identical files.

namespace trapforge {

extern const char* const kToolVersion;

// "%.9g" formatting used for all report values.
std::string format_value(double v);

std::vector<std::string> run_geometry(const RunConfig& config,
                                      const std::string& out_dir);
std::vector<std::string> run_stability(const RunConfig& config,
                                       const std::string& out_dir);
std::vector<std::string> run_dynamics(const RunConfig& config,
                                      const std::string& out_dir);
std::vector<std::string> run_spectrum(const RunConfig& config,
                                      const std::string& out_dir);
std::vector<std::string> run_noise(const RunConfig& config,
                                   const std::string& out_dir,
                                   bool table2 = false);

}  // namespace trapforge

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "simplicity/ambiguity.hpp"
#include "simplicity/profile.hpp"

namespace simplicity::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kNumericRange = 3 };

struct IsingSource {
    double J = 1.0;
    double b = 0.0;
};

struct RunConfig {
    std::string subcommand;  ///< analyze | sweep | diagram | witness
    std::vector<std::filesystem::path> machines;
    std::optional<IsingSource> ising;
    std::optional<double> T;  ///< analyze with --ising
    double t_min = 0.05;
    double t_max = 5.0;
    std::size_t steps = 991;
    std::size_t L = 1;
    DiagramMode mode = DiagramMode::plain;
    std::size_t resolution = 250;
    std::optional<std::filesystem::path> out;
    std::string format;  ///< csv | json | svg; empty selects the subcommand default
    double tol = kTieTolerance;
    Measure f1 = Measure::C_mu;
    Measure f2 = Measure::C_q;
};

/// Parses "J,b". Returns nullopt on malformed input.
std::optional<IsingSource> parse_ising(const std::string& text);

/// Runs one subcommand; writes results to config.out (or `out`) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_diagram(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_witness(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line front end: parses argv and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplicity::cli

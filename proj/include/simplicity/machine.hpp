#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplicity/error.hpp"

namespace simplicity {

inline constexpr double kProbabilityTolerance = 1e-12;

struct Edge {
    std::size_t to;
    double probability;
};

/// Finite unifilar hidden Markov model presented by its causal states.
///
/// Transitions are keyed by (state, symbol), so at most one successor exists
/// per key and the presentation is unifilar by construction. Stochasticity
/// and ergodicity are not enforced on construction; see validate_machine().
class EpsilonMachine {
public:
    EpsilonMachine(std::vector<std::string> states, std::vector<std::string> alphabet);

    /// Throws std::invalid_argument on out-of-range indices or when the key is already set.
    void set_transition(std::size_t from, std::size_t symbol, std::size_t to, double probability);

    [[nodiscard]] const std::optional<Edge>& transition(std::size_t from, std::size_t symbol) const {
        return table_[from * alphabet_.size() + symbol];
    }

    [[nodiscard]] std::size_t num_states() const { return states_.size(); }
    [[nodiscard]] std::size_t num_symbols() const { return alphabet_.size(); }
    [[nodiscard]] const std::vector<std::string>& states() const { return states_; }
    [[nodiscard]] const std::vector<std::string>& alphabet() const { return alphabet_; }

    [[nodiscard]] std::optional<std::size_t> state_index(std::string_view name) const;
    [[nodiscard]] std::optional<std::size_t> symbol_index(std::string_view name) const;

    /// Dense state-to-state matrix, row-major, T[i][j] = sum of edge probabilities i -> j.
    [[nodiscard]] std::vector<double> state_transition_matrix() const;

    /// Next-symbol distribution of one state (zeros for absent edges).
    [[nodiscard]] std::vector<double> symbol_distribution(std::size_t state) const;

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<std::optional<Edge>> table_;
};

struct Violation {
    enum class Kind { empty, probability, row_sum, unifilarity, unknown_name, not_strongly_connected, parse };
    Kind kind;
    std::string message;
};

/// Stable label used in reports and on the error stream ("row-sum", ...).
std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] bool has(Violation::Kind kind) const;
};

ValidationReport validate_machine(const EpsilonMachine& m);

/// Thrown by the loaders; carries every violation that was found.
struct InvalidMachine : Error {
    explicit InvalidMachine(ValidationReport r);
    ValidationReport report;
};

/// Parses the JSON machine format:
///   {"alphabet": [...], "states": [...],
///    "transitions": [{"from": s, "symbol": a, "to": s', "p": x}, ...]}
/// and enforces every machine invariant. Duplicate (from, symbol) pairs are
/// reported as unifilarity violations.
EpsilonMachine parse_machine(std::string_view json_text);
EpsilonMachine load_machine(const std::filesystem::path& path);
std::string machine_to_json(const EpsilonMachine& m);

struct StationaryDistribution {
    std::vector<double> probs;
    std::size_t iterations = 0;
};

inline constexpr double kStationaryTolerance = 1e-14;
inline constexpr std::size_t kStationaryMaxIterations = 1'000'000;

/// Left fixed point of the state transition matrix by lazy power iteration
/// started from the uniform vector. Throws ConvergenceError at the iteration cap.
StationaryDistribution stationary_distribution(const EpsilonMachine& m);

/// hmu = sum_s pi_s H[Pr(.|s)], exact for unifilar presentations.
double entropy_rate(const EpsilonMachine& m);
double entropy_rate(const EpsilonMachine& m, const StationaryDistribution& pi);

}  // namespace simplicity

#pragma once

#include <cstddef>
#include <optional>

#include "simplicity/machine.hpp"

namespace simplicity {

/// Per-process simplicity record, all values in bits.
struct ComplexityProfile {
    double h_mu = 0.0;
    double C_mu = 0.0;
    std::optional<double> E;
    std::optional<double> C_q;
    std::size_t L_used = 0;
};

inline constexpr double kSandwichTolerance = 1e-9;

/// E <= C_q <= C_mu within kSandwichTolerance. False if E or C_q is missing.
bool satisfies_sandwich(const ComplexityProfile& p, double tol = kSandwichTolerance);

/// C_mu = H[pi]. Assumes a minimal presentation.
double statistical_complexity(const EpsilonMachine& m);
double statistical_complexity(const StationaryDistribution& pi);

/// Merges states whose next-symbol distributions agree within tol and whose
/// successors (per symbol) are themselves merged, by partition refinement.
/// Each class keeps its lowest-index member's name; its row is the member average.
EpsilonMachine merge_iid_degenerate(const EpsilonMachine& m, double tol = kProbabilityTolerance);

/// True when the successor state depends on the emitted symbol alone, so the
/// presentation is an order-1 Markov chain over its symbols.
bool is_order1_markov(const EpsilonMachine& m);

/// E = I[X0; X1], exact for order-1 Markov presentations.
/// Throws StructureError when is_order1_markov(m) is false.
double excess_entropy_markov1(const EpsilonMachine& m);
double excess_entropy_markov1(const EpsilonMachine& m, const StationaryDistribution& pi);

struct ExcessEntropyEstimate {
    double value = 0.0;
    std::size_t length = 0;        ///< L* at which the estimate was taken
    double achieved_tolerance = 0.0;  ///< |E(L*) - E(L*-1)|
    bool converged = false;
};

inline constexpr double kExcessEntropyTolerance = 1e-9;
inline constexpr std::size_t kExcessEntropyMaxLength = 20;

/// E(L) = H(L) - L hmu taken at the smallest L with |E(L) - E(L-1)| < tol.
/// L_max is clipped to the word cap for the machine's alphabet. When tol is
/// not reached the last estimate is returned with converged = false.
ExcessEntropyEstimate excess_entropy_block(const EpsilonMachine& m, double tol = kExcessEntropyTolerance,
                                           std::size_t L_max = kExcessEntropyMaxLength);
ExcessEntropyEstimate excess_entropy_block(const EpsilonMachine& m, const StationaryDistribution& pi, double tol,
                                           std::size_t L_max);

/// Closed form for order-1 presentations, block extrapolation otherwise.
double excess_entropy(const EpsilonMachine& m, const StationaryDistribution& pi);

}  // namespace simplicity

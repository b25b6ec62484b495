#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplicity/machine.hpp"
#include "simplicity/profile.hpp"

namespace simplicity {

/// Nearest-neighbour spin chain H = -sum (J s_i s_j + b s_i), k_B = 1.
/// beta = 0 is the infinite-temperature limit.
struct IsingParams {
    double J = 1.0;
    double b = 0.0;
    double beta = 1.0;

    /// Throws std::invalid_argument unless T > 0 and all values are finite.
    static IsingParams at_temperature(double J, double b, double T);
    [[nodiscard]] double temperature() const { return 1.0 / beta; }
};

/// Self-transition probabilities of the spin chain. The complements are
/// evaluated directly rather than as 1 - p so that they keep full relative
/// precision when p or q is close to one.
struct TransitionPair {
    double p = 0.5;             ///< Pr(up | up)
    double q = 0.5;             ///< Pr(down | down)
    double p_complement = 0.5;  ///< Pr(down | up)
    double q_complement = 0.5;  ///< Pr(up | down)
};

/// p = N+/D, q = N-/D with N+- = exp(beta (J +- b)) and
/// D = exp(beta J) cosh(beta b) + sqrt(exp(-2 beta J) + exp(2 beta J) sinh^2(beta b)),
/// all in the log domain. Throws RangeError if any probability underflows.
TransitionPair ising_transition_probs(const IsingParams& params);

/// Two-state presentation: s1 = last spin up, s2 = last spin down.
EpsilonMachine two_state_machine(const TransitionPair& pq);
EpsilonMachine two_state_machine(double p, double q);

/// two_state_machine() followed by merge_iid_degenerate().
EpsilonMachine ising_machine(const IsingParams& params);

struct SweepPoint {
    double T = 0.0;
    std::optional<TransitionPair> probs;
    std::optional<ComplexityProfile> profile;
    std::string error;          ///< non-empty when the point failed
    bool sandwich_ok = false;   ///< E <= C_q <= C_mu within kSandwichTolerance
};

/// `steps` uniformly spaced temperatures from T_min to T_max inclusive.
/// Failed points are recorded and the sweep continues.
std::vector<SweepPoint> temperature_sweep(double J, double b, double T_min, double T_max, std::size_t steps,
                                          std::size_t L = 1);

struct Extremum {
    double T = 0.0;
    double value = 0.0;
    std::size_t index = 0;  ///< grid argmax
    bool boundary = false;  ///< argmax at the first or last grid point; no refinement
};

/// Grid argmax of a measure, refined by the vertex of the parabola through
/// the argmax and its two neighbours.
Extremum find_extremum(std::span<const SweepPoint> sweep, Measure field);

}  // namespace simplicity

#pragma once

#include <cstddef>
#include <vector>

#include "simplicity/jacobi.hpp"
#include "simplicity/machine.hpp"

namespace simplicity {

/// Pure signal states, one per causal state, encoding length-L futures.
///
/// overlaps(i, j) = <eta_i(L)|eta_j(L)>
///                = sum_w sqrt(Pr(w|s_i) Pr(w|s_j)) over words whose end
///                  states from s_i and s_j coincide (all ones at L = 0).
struct SignalEnsemble {
    std::size_t length = 0;
    std::vector<double> weights;  ///< stationary pi
    SquareMatrix overlaps;
};

inline constexpr double kEigenvalueSlack = 1e-12;

/// Exact overlaps by word enumeration with end-state tracking.
SignalEnsemble signal_overlaps(const EpsilonMachine& m, std::size_t length);
SignalEnsemble signal_overlaps(const EpsilonMachine& m, const StationaryDistribution& pi, std::size_t length);

/// G(i, j) = sqrt(pi_i pi_j) c(i, j). Shares its nonzero spectrum with rho.
SquareMatrix gram_matrix(const SignalEnsemble& ens);

/// Eigenvalues of the Gram matrix, descending. Values in [-kEigenvalueSlack, 0)
/// are clamped to zero; anything more negative throws ConvergenceError.
std::vector<double> gram_spectrum(const SignalEnsemble& ens);

/// C_q = -sum lambda log2 lambda over the Gram spectrum.
double quantum_complexity(const SignalEnsemble& ens);

/// Largest |A|^L |S| accepted by the explicit construction.
inline constexpr std::size_t kMaxHilbertDimension = 4096;

/// Spectrum (descending, clamped) of rho = sum_i pi_i |eta_i><eta_i| built
/// from explicit amplitude vectors in H_w (x) H_s.
std::vector<double> brute_force_spectrum(const EpsilonMachine& m, std::size_t length);

/// von Neumann entropy in bits of the explicitly constructed rho.
double brute_force_cq(const EpsilonMachine& m, std::size_t length);

struct CqPoint {
    std::size_t length;
    double C_q;
    double delta;  ///< C_q(L) - C_q(L-1); zero for the first entry
};

/// C_q(L) for L = 1..L_max.
std::vector<CqPoint> cq_convergence(const EpsilonMachine& m, std::size_t L_max);

}  // namespace simplicity

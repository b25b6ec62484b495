#include "simplicity/quantum.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "simplicity/entropy.hpp"
#include "simplicity/words.hpp"

namespace simplicity {

SignalEnsemble signal_overlaps(const EpsilonMachine& m, const StationaryDistribution& pi, std::size_t length) {
    const auto words = word_distribution(m, length);
    const std::size_t n = m.num_states();

    SignalEnsemble ens;
    ens.length = length;
    ens.weights = pi.probs;
    ens.overlaps = SquareMatrix(n);
    std::vector<double> terms;
    for (std::size_t i = 0; i < n; ++i) {
        // Signal states are normalised: sum_w Pr(w|s) = 1.
        ens.overlaps(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            terms.clear();
            for (std::size_t w = 0; w < words.size(); ++w) {
                const auto ei = words.end_state(w, i);
                const auto ej = words.end_state(w, j);
                // With no symbols emitted every signal state is the same empty encoding.
                if (length > 0 && (!ei || !ej || *ei != *ej)) continue;
                terms.push_back(std::sqrt(words.probability(w, i) * words.probability(w, j)));
            }
            const double c = std::min(canonical_sum(terms), 1.0);
            ens.overlaps(i, j) = c;
            ens.overlaps(j, i) = c;
        }
    }
    return ens;
}

SignalEnsemble signal_overlaps(const EpsilonMachine& m, std::size_t length) {
    return signal_overlaps(m, stationary_distribution(m), length);
}

SquareMatrix gram_matrix(const SignalEnsemble& ens) {
    const std::size_t n = ens.overlaps.size();
    SquareMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = i == j ? ens.weights[i] : std::sqrt(ens.weights[i] * ens.weights[j]) * ens.overlaps(i, j);
    return g;
}

namespace {

// Relabeling-independent ordering of the Gram matrix: by diagonal, then by the
// sorted off-diagonal row. Permuted machines then hand identical matrices to
// the eigensolver.
SquareMatrix canonical_form(const SquareMatrix& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<double>> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys[i].push_back(g(i, i));
        std::vector<double> row;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) row.push_back(g(i, j));
        std::sort(row.begin(), row.end());
        keys[i].insert(keys[i].end(), row.begin(), row.end());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = g(order[i], order[j]);
    return out;
}

std::vector<double> clamp_spectrum(std::vector<double> values) {
    for (double& v : values) {
        if (v < -kEigenvalueSlack)
            throw ConvergenceError("density spectrum has eigenvalue " + std::to_string(v) + " below clamp slack");
        v = std::max(v, 0.0);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace

std::vector<double> gram_spectrum(const SignalEnsemble& ens) {
    return clamp_spectrum(jacobi_eigen(canonical_form(gram_matrix(ens))).values);
}

double quantum_complexity(const SignalEnsemble& ens) {
    return shannon_entropy(gram_spectrum(ens));
}

std::vector<double> brute_force_spectrum(const EpsilonMachine& m, std::size_t length) {
    const std::size_t n = m.num_states();
    const std::size_t k = m.num_symbols();
    std::size_t num_words = 1;
    for (std::size_t l = 0; l < length; ++l) {
        num_words *= k;
        if (num_words * n > kMaxHilbertDimension) break;
    }
    if (num_words * n > kMaxHilbertDimension)
        throw CapExceeded("brute_force_cq: |A|^L |S| exceeds " + std::to_string(kMaxHilbertDimension));

    const auto pi = stationary_distribution(m);
    const auto dim = static_cast<Eigen::Index>(num_words * n);

    // Column j holds sqrt(pi_j) |eta_j>, basis index = word_code * |S| + end_state.
    Eigen::MatrixXd amplitudes = Eigen::MatrixXd::Zero(dim, static_cast<Eigen::Index>(n));
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t code = 0; code < num_words; ++code) {
            std::size_t state = start;
            double p = 1.0;
            std::size_t rest = code;
            std::size_t place = num_words;
            for (std::size_t l = 0; l < length && p > 0.0; ++l) {
                place /= k;
                const std::size_t x = rest / place;
                rest %= place;
                const auto& e = m.transition(state, x);
                if (!e) p = 0.0;
                else {
                    p *= e->probability;
                    state = e->to;
                }
            }
            // L = 0 carries no state factor, matching signal_overlaps.
            const std::size_t slot = length == 0 ? 0 : state;
            if (p > 0.0)
                amplitudes(static_cast<Eigen::Index>(code * n + slot), static_cast<Eigen::Index>(start)) =
                    std::sqrt(pi.probs[start] * p);
        }
    }
    const Eigen::MatrixXd rho = amplitudes * amplitudes.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("brute_force_cq: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return clamp_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double brute_force_cq(const EpsilonMachine& m, std::size_t length) {
    return shannon_entropy(brute_force_spectrum(m, length));
}

std::vector<CqPoint> cq_convergence(const EpsilonMachine& m, std::size_t L_max) {
    check_word_cap(m.num_symbols(), L_max);
    const auto pi = stationary_distribution(m);
    std::vector<CqPoint> out;
    for (std::size_t L = 1; L <= L_max; ++L) {
        const double cq = quantum_complexity(signal_overlaps(m, pi, L));
        out.push_back({L, cq, out.empty() ? 0.0 : cq - out.back().C_q});
    }
    return out;
}

}  // namespace simplicity

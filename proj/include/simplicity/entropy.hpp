#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace simplicity {

/// Sum that does not depend on the order of its terms.
///
/// Terms are sorted before a compensated (Neumaier) summation, so any
/// permutation of the input yields a bit-identical result. Every quantity
/// that must be invariant under state or symbol relabeling goes through here.
inline double canonical_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    double carry = 0.0;
    for (double t : terms) {
        const double s = sum + t;
        if (std::abs(sum) >= std::abs(t))
            carry += (sum - s) + t;
        else
            carry += (t - s) + sum;
        sum = s;
    }
    return sum + carry;
}

/// -p log2 p with the 0 log 0 = 0 convention.
inline double entropy_term(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

/// Shannon entropy in bits.
inline double shannon_entropy(std::span<const double> probs) {
    std::vector<double> terms;
    terms.reserve(probs.size());
    for (double p : probs) terms.push_back(entropy_term(p));
    return canonical_sum(std::move(terms));
}

inline double binary_entropy(double p) {
    const double probs[] = {p, 1.0 - p};
    return shannon_entropy(probs);
}

}  // namespace simplicity

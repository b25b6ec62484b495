#include "simplicity/classical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "simplicity/entropy.hpp"
#include "simplicity/words.hpp"

namespace simplicity {

bool satisfies_sandwich(const ComplexityProfile& p, double tol) {
    if (!p.E || !p.C_q) return false;
    return *p.E <= *p.C_q + tol && *p.C_q <= p.C_mu + tol;
}

double statistical_complexity(const StationaryDistribution& pi) {
    return shannon_entropy(pi.probs);
}

double statistical_complexity(const EpsilonMachine& m) {
    return statistical_complexity(stationary_distribution(m));
}

EpsilonMachine merge_iid_degenerate(const EpsilonMachine& m, double tol) {
    const std::size_t n = m.num_states();
    const std::size_t k = m.num_symbols();

    // Initial classes: next-symbol distributions equal within tol.
    std::vector<std::size_t> cls(n);
    std::vector<std::size_t> reps;
    for (std::size_t s = 0; s < n; ++s) {
        const auto row = m.symbol_distribution(s);
        auto same = [&](std::size_t r) {
            const auto other = m.symbol_distribution(r);
            for (std::size_t x = 0; x < k; ++x)
                if (std::abs(row[x] - other[x]) > tol) return false;
            return true;
        };
        const auto it = std::find_if(reps.begin(), reps.end(), same);
        if (it == reps.end()) {
            cls[s] = reps.size();
            reps.push_back(s);
        } else {
            cls[s] = static_cast<std::size_t>(it - reps.begin());
        }
    }

    // Refine by successor classes until stable.
    std::size_t num_classes = reps.size();
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> key{cls[s]};
            for (std::size_t x = 0; x < k; ++x) {
                const auto& e = m.transition(s, x);
                key.push_back(e && e->probability > 0.0 ? cls[e->to] : n);
            }
            const auto [it, inserted] = ids.emplace(std::move(key), ids.size());
            next[s] = it->second;
        }
        const bool stable = ids.size() == num_classes;
        cls = std::move(next);
        num_classes = ids.size();
        if (stable) break;
    }
    if (num_classes == n) return m;

    // Renumber classes in order of their lowest member.
    std::vector<std::size_t> order(num_classes, n);
    std::vector<std::size_t> renumber(num_classes, n);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s)
        if (renumber[cls[s]] == n) {
            renumber[cls[s]] = count;
            order[count++] = s;
        }

    std::vector<std::string> names;
    for (std::size_t c = 0; c < num_classes; ++c) names.push_back(m.states()[order[c]]);
    EpsilonMachine merged(std::move(names), m.alphabet());
    // A merged row is the member average, so the result does not depend on which
    // member comes first.
    for (std::size_t c = 0; c < num_classes; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t s = 0; s < n; ++s)
            if (renumber[cls[s]] == c) members.push_back(s);
        for (std::size_t x = 0; x < k; ++x) {
            std::vector<double> probs;
            std::optional<std::size_t> target;
            for (std::size_t s : members) {
                const auto& e = m.transition(s, x);
                if (!e) continue;
                probs.push_back(e->probability);
                if (!target || e->probability > 0.0) target = renumber[cls[e->to]];
            }
            if (target)
                merged.set_transition(c, x, *target,
                                      canonical_sum(std::move(probs)) / static_cast<double>(members.size()));
        }
    }
    return merged;
}

bool is_order1_markov(const EpsilonMachine& m) {
    for (std::size_t x = 0; x < m.num_symbols(); ++x) {
        std::optional<std::size_t> target;
        for (std::size_t s = 0; s < m.num_states(); ++s) {
            const auto& e = m.transition(s, x);
            if (!e || !(e->probability > 0.0)) continue;
            if (target && *target != e->to) return false;
            target = e->to;
        }
    }
    return true;
}

double excess_entropy_markov1(const EpsilonMachine& m, const StationaryDistribution& pi) {
    if (!is_order1_markov(m))
        throw StructureError("excess_entropy_markov1: successor state is not a function of the symbol");
    if (m.num_states() == 1) return 0.0;

    const std::size_t k = m.num_symbols();
    std::vector<double> first(k);
    std::vector<std::size_t> after(k, m.num_states());
    for (std::size_t x = 0; x < k; ++x) {
        std::vector<double> terms;
        for (std::size_t s = 0; s < m.num_states(); ++s) {
            const auto& e = m.transition(s, x);
            if (!e || !(e->probability > 0.0)) continue;
            terms.push_back(pi.probs[s] * e->probability);
            after[x] = e->to;
        }
        first[x] = canonical_sum(std::move(terms));
    }

    std::vector<double> joint(k * k, 0.0);
    for (std::size_t x0 = 0; x0 < k; ++x0) {
        if (after[x0] == m.num_states()) continue;
        const auto next = m.symbol_distribution(after[x0]);
        for (std::size_t x1 = 0; x1 < k; ++x1) joint[x0 * k + x1] = first[x0] * next[x1];
    }
    std::vector<double> marg0(k), marg1(k);
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<double> row, col;
        for (std::size_t b = 0; b < k; ++b) {
            row.push_back(joint[a * k + b]);
            col.push_back(joint[b * k + a]);
        }
        marg0[a] = canonical_sum(std::move(row));
        marg1[a] = canonical_sum(std::move(col));
    }
    const double mi = shannon_entropy(marg0) + shannon_entropy(marg1) - shannon_entropy(joint);
    return std::max(mi, 0.0);
}

double excess_entropy_markov1(const EpsilonMachine& m) {
    return excess_entropy_markov1(m, stationary_distribution(m));
}

ExcessEntropyEstimate excess_entropy_block(const EpsilonMachine& m, const StationaryDistribution& pi, double tol,
                                           std::size_t L_max) {
    L_max = std::min(L_max, max_word_length(m.num_symbols()));
    const double h_mu = entropy_rate(m, pi);

    ExcessEntropyEstimate est;
    std::vector<double> h;
    // Grow the enumeration depth in chunks so that fast-converging machines
    // never pay for the full |A|^L_max traversal.
    std::size_t depth = std::min<std::size_t>(4, L_max);
    double previous = 0.0;  // E(0) = H(0) = 0
    for (std::size_t L = 1; L <= L_max; ++L) {
        if (h.empty()) {
            h = block_entropies(m, pi, depth);
        } else if (L > depth) {
            depth = std::min(L_max, depth * 2);
            h = block_entropies(m, pi, depth);
        }
        const double current = h[L] - static_cast<double>(L) * h_mu;
        est.value = current;
        est.length = L;
        est.achieved_tolerance = std::abs(current - previous);
        if (est.achieved_tolerance < tol) {
            est.converged = true;
            break;
        }
        previous = current;
    }
    est.value = std::max(est.value, 0.0);
    return est;
}

ExcessEntropyEstimate excess_entropy_block(const EpsilonMachine& m, double tol, std::size_t L_max) {
    return excess_entropy_block(m, stationary_distribution(m), tol, L_max);
}

double excess_entropy(const EpsilonMachine& m, const StationaryDistribution& pi) {
    if (is_order1_markov(m)) return excess_entropy_markov1(m, pi);
    return excess_entropy_block(m, pi, kExcessEntropyTolerance, kExcessEntropyMaxLength).value;
}

}  // namespace simplicity

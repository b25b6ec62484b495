#include "simplicity/words.hpp"

#include <stdexcept>
#include <string>

#include "simplicity/entropy.hpp"

namespace simplicity {

std::size_t max_word_length(std::size_t alphabet_size) {
    if (alphabet_size <= 1) return 64;
    std::size_t length = 0;
    std::size_t count = 1;
    while (count <= kMaxWords / alphabet_size) {
        count *= alphabet_size;
        ++length;
    }
    return length;
}

void check_word_cap(std::size_t alphabet_size, std::size_t length) {
    if (length > max_word_length(alphabet_size))
        throw CapExceeded("word length " + std::to_string(length) + " exceeds cap " +
                          std::to_string(max_word_length(alphabet_size)) + " for alphabet size " +
                          std::to_string(alphabet_size));
}

double WordDistribution::stationary_probability(std::size_t i, std::span<const double> pi) const {
    std::vector<double> terms(num_states_);
    for (std::size_t s = 0; s < num_states_; ++s) terms[s] = pi[s] * probability(i, s);
    return canonical_sum(std::move(terms));
}

void WordDistribution::append(std::span<const std::uint32_t> word, std::span<const double> probs,
                              std::span<const std::int32_t> ends) {
    symbols_.insert(symbols_.end(), word.begin(), word.end());
    probs_.insert(probs_.end(), probs.begin(), probs.end());
    ends_.insert(ends_.end(), ends.begin(), ends.end());
}

WordDistribution word_distribution(const EpsilonMachine& m, std::size_t length) {
    const std::size_t n = m.num_states();
    const std::size_t k = m.num_symbols();
    check_word_cap(k, length);

    WordDistribution out(length, n);
    std::vector<std::uint32_t> word(length, 0);
    std::vector<double> probs(n);
    std::vector<std::int32_t> ends(n);

    // Odometer over all |A|^L words; each word walked from every start state.
    while (true) {
        bool possible = false;
        for (std::size_t start = 0; start < n; ++start) {
            std::size_t state = start;
            double p = 1.0;
            bool alive = true;
            for (std::uint32_t x : word) {
                const auto& e = m.transition(state, x);
                if (!e || !(e->probability > 0.0)) {
                    alive = false;
                    break;
                }
                p *= e->probability;
                state = e->to;
            }
            probs[start] = alive ? p : 0.0;
            ends[start] = alive ? static_cast<std::int32_t>(state) : -1;
            possible = possible || alive;
        }
        if (possible) out.append(word, probs, ends);

        std::size_t pos = length;
        while (pos > 0 && ++word[pos - 1] == k) word[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

namespace {

// Depth-first accumulation of stationary word probabilities. Each frame holds,
// for every start state, the current state and Pr(prefix | start).
class BlockEntropyWalker {
public:
    BlockEntropyWalker(const EpsilonMachine& m, std::span<const double> pi, std::size_t max_length)
        : m_(m), pi_(pi), max_length_(max_length), terms_(max_length + 1) {}

    std::vector<double> run() {
        const std::size_t n = m_.num_states();
        std::vector<std::int32_t> states(n);
        std::vector<double> probs(n, 1.0);
        for (std::size_t s = 0; s < n; ++s) states[s] = static_cast<std::int32_t>(s);
        visit(0, states, probs);

        std::vector<double> h(max_length_ + 1);
        for (std::size_t d = 0; d <= max_length_; ++d) h[d] = canonical_sum(std::move(terms_[d]));
        return h;
    }

private:
    void visit(std::size_t depth, const std::vector<std::int32_t>& states, const std::vector<double>& probs) {
        std::vector<double> weighted(states.size());
        for (std::size_t s = 0; s < states.size(); ++s) weighted[s] = pi_[s] * probs[s];
        terms_[depth].push_back(entropy_term(canonical_sum(std::move(weighted))));
        if (depth == max_length_) return;

        std::vector<std::int32_t> next_states(states.size());
        std::vector<double> next_probs(states.size());
        for (std::size_t x = 0; x < m_.num_symbols(); ++x) {
            bool alive = false;
            for (std::size_t s = 0; s < states.size(); ++s) {
                next_states[s] = -1;
                next_probs[s] = 0.0;
                if (states[s] < 0) continue;
                const auto& e = m_.transition(static_cast<std::size_t>(states[s]), x);
                if (!e || !(e->probability > 0.0)) continue;
                next_states[s] = static_cast<std::int32_t>(e->to);
                next_probs[s] = probs[s] * e->probability;
                alive = true;
            }
            if (alive) visit(depth + 1, next_states, next_probs);
        }
    }

    const EpsilonMachine& m_;
    std::span<const double> pi_;
    std::size_t max_length_;
    std::vector<std::vector<double>> terms_;
};

}  // namespace

std::vector<double> block_entropies(const EpsilonMachine& m, const StationaryDistribution& pi, std::size_t max_length) {
    check_word_cap(m.num_symbols(), max_length);
    return BlockEntropyWalker(m, pi.probs, max_length).run();
}

double block_entropy(const EpsilonMachine& m, const StationaryDistribution& pi, std::size_t length) {
    return block_entropies(m, pi, length).back();
}

double block_entropy(const EpsilonMachine& m, std::size_t length) {
    return block_entropy(m, stationary_distribution(m), length);
}

double block_entropy(const WordDistribution& words, std::span<const double> pi) {
    if (pi.size() != words.num_states()) throw std::invalid_argument("block_entropy: weight size mismatch");
    double h = 0.0;
    for (std::size_t i = 0; i < words.size(); ++i) h += entropy_term(words.stationary_probability(i, pi));
    return h;
}

}  // namespace simplicity

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simplicity/machine.hpp"

namespace simplicity {

/// Upper bound on |A|^L for any word enumeration.
inline constexpr std::size_t kMaxWords = std::size_t{1} << 20;

/// Largest L with |A|^L <= kMaxWords.
std::size_t max_word_length(std::size_t alphabet_size);

/// Throws CapExceeded when |A|^L exceeds kMaxWords.
void check_word_cap(std::size_t alphabet_size, std::size_t length);

/// Conditional length-L word probabilities from every start state, with the
/// unifilar end state of each. Only words that are possible from at least one
/// start state are stored, in lexicographic symbol-index order.
class WordDistribution {
public:
    WordDistribution(std::size_t length, std::size_t num_states) : length_(length), num_states_(num_states) {}

    [[nodiscard]] std::size_t length() const { return length_; }
    [[nodiscard]] std::size_t num_states() const { return num_states_; }
    [[nodiscard]] std::size_t size() const { return length_ == 0 ? probs_.size() / num_states_ : symbols_.size() / length_; }

    [[nodiscard]] std::span<const std::uint32_t> word(std::size_t i) const {
        return {symbols_.data() + i * length_, length_};
    }
    /// Pr(w_i | start).
    [[nodiscard]] double probability(std::size_t i, std::size_t start) const { return probs_[i * num_states_ + start]; }
    /// State reached after reading w_i from start, if w_i is possible from there.
    [[nodiscard]] std::optional<std::size_t> end_state(std::size_t i, std::size_t start) const {
        const auto e = ends_[i * num_states_ + start];
        if (e < 0) return std::nullopt;
        return static_cast<std::size_t>(e);
    }
    /// Pr(w_i) = sum_s pi_s Pr(w_i | s).
    [[nodiscard]] double stationary_probability(std::size_t i, std::span<const double> pi) const;

    void append(std::span<const std::uint32_t> word, std::span<const double> probs, std::span<const std::int32_t> ends);

private:
    std::size_t length_;
    std::size_t num_states_;
    std::vector<std::uint32_t> symbols_;
    std::vector<double> probs_;
    std::vector<std::int32_t> ends_;
};

WordDistribution word_distribution(const EpsilonMachine& m, std::size_t length);

/// H(L) of the stationary word distribution, by recursive per-start-state accumulation.
double block_entropy(const EpsilonMachine& m, std::size_t length);
double block_entropy(const EpsilonMachine& m, const StationaryDistribution& pi, std::size_t length);

/// H(0), ..., H(max_length) in a single traversal.
std::vector<double> block_entropies(const EpsilonMachine& m, const StationaryDistribution& pi, std::size_t max_length);

/// H(L) from an explicit word distribution.
double block_entropy(const WordDistribution& words, std::span<const double> pi);

}  // namespace simplicity

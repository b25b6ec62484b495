#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "simplicity/classical.hpp"
#include "simplicity/profile.hpp"

namespace simplicity {

enum class PlainVerdict { consistent, ambiguous, tied };
enum class CertainVerdict { certainly_consistent, certainly_ambiguous, indeterminate };

std::string_view to_string(PlainVerdict v);
std::string_view to_string(CertainVerdict v);

struct AmbiguityVerdict {
    PlainVerdict plain = PlainVerdict::tied;
    CertainVerdict certain = CertainVerdict::indeterminate;

    friend bool operator==(const AmbiguityVerdict&, const AmbiguityVerdict&) = default;
};

inline constexpr double kTieTolerance = 1e-10;

/// Plain verdict compares the C_mu and C_q orderings of the two processes.
/// For the certain verdict, A is the process with larger C_mu:
/// certainly_consistent if E^A > C_q^B, certainly_ambiguous if E^B > C_q^A.
/// All comparisons carry a `tol` margin. Throws std::invalid_argument if E or
/// C_q is missing.
AmbiguityVerdict classify_pair(const ComplexityProfile& a, const ComplexityProfile& b, double tol = kTieTolerance);

enum class DiagramMode { plain, certain };

std::string_view to_string(DiagramMode mode);
std::optional<DiagramMode> parse_diagram_mode(std::string_view name);

/// Verdicts for every (T1, T2) pair of an n x n grid over (0, T_max]^2.
/// Temperatures sit at cell centres (i + 1/2) T_max / n.
struct AmbiguityGrid {
    double J = 1.0;
    double b = 0.0;
    double T_max = 0.0;
    std::size_t resolution = 0;
    DiagramMode mode = DiagramMode::plain;
    std::vector<double> temperatures;
    std::vector<ComplexityProfile> profiles;
    std::vector<AmbiguityVerdict> cells;  ///< row-major, cells[i * n + j] pairs T_i (row) with T_j

    [[nodiscard]] const AmbiguityVerdict& at(std::size_t i, std::size_t j) const { return cells[i * resolution + j]; }
    [[nodiscard]] double cell_width() const { return T_max / static_cast<double>(resolution); }
};

inline constexpr std::size_t kMinGridResolution = 16;

/// Profiles are computed once per temperature and then paired over the full
/// square. Both verdicts are stored; `mode` records which one the grid is
/// meant to display.
AmbiguityGrid ambiguity_grid(double J, double b, double T_max, std::size_t resolution, DiagramMode mode,
                             std::size_t L = 1, double tol = kTieTolerance);

/// Exhaustive pairwise scan for s1, s2 with F1(s1) > F1(s2) and F2(s1) < F2(s2),
/// both strict by more than `tol`. Returns indices into `family`.
template <typename T, typename F1, typename F2>
std::optional<std::pair<std::size_t, std::size_t>> find_ambiguous_pair(std::span<const T> family, F1&& f1, F2&& f2,
                                                                       double tol = kTieTolerance) {
    std::vector<double> v1, v2;
    v1.reserve(family.size());
    v2.reserve(family.size());
    for (const auto& s : family) {
        v1.push_back(f1(s));
        v2.push_back(f2(s));
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (v1[i] > v1[j] + tol && v2[i] + tol < v2[j]) return std::pair{i, j};
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_ambiguous_pair(std::span<const ComplexityProfile> family,
                                                                       Measure f1, Measure f2,
                                                                       double tol = kTieTolerance);

}  // namespace simplicity

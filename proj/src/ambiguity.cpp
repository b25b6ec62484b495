#include "simplicity/ambiguity.hpp"

#include <cmath>
#include <stdexcept>

#include "simplicity/ising.hpp"

namespace simplicity {

std::string_view to_string(PlainVerdict v) {
    switch (v) {
        case PlainVerdict::consistent: return "consistent";
        case PlainVerdict::ambiguous: return "ambiguous";
        case PlainVerdict::tied: return "tied";
    }
    return "unknown";
}

std::string_view to_string(CertainVerdict v) {
    switch (v) {
        case CertainVerdict::certainly_consistent: return "certainly_consistent";
        case CertainVerdict::certainly_ambiguous: return "certainly_ambiguous";
        case CertainVerdict::indeterminate: return "indeterminate";
    }
    return "unknown";
}

std::string_view to_string(DiagramMode mode) {
    return mode == DiagramMode::plain ? "plain" : "certain";
}

std::optional<DiagramMode> parse_diagram_mode(std::string_view name) {
    if (name == "plain") return DiagramMode::plain;
    if (name == "certain") return DiagramMode::certain;
    return std::nullopt;
}

AmbiguityVerdict classify_pair(const ComplexityProfile& a, const ComplexityProfile& b, double tol) {
    if (!a.C_q || !b.C_q || !a.E || !b.E) throw std::invalid_argument("classify_pair: profile is missing C_q or E");

    const double d_mu = a.C_mu - b.C_mu;
    const double d_q = *a.C_q - *b.C_q;

    AmbiguityVerdict v;
    if (std::abs(d_mu) <= tol || std::abs(d_q) <= tol)
        v.plain = PlainVerdict::tied;
    else
        v.plain = (d_mu > 0.0) == (d_q > 0.0) ? PlainVerdict::consistent : PlainVerdict::ambiguous;

    if (std::abs(d_mu) <= tol) return v;  // no classical order to certify

    const auto& hi = d_mu > 0.0 ? a : b;  // classically more complex
    const auto& lo = d_mu > 0.0 ? b : a;
    const bool consistent = *hi.E > *lo.C_q + tol;
    const bool ambiguous = *lo.E > *hi.C_q + tol;
    if (consistent && ambiguous)
        throw std::logic_error("classify_pair: both certain criteria hold; profiles violate E <= C_q");
    if (consistent) v.certain = CertainVerdict::certainly_consistent;
    if (ambiguous) v.certain = CertainVerdict::certainly_ambiguous;
    return v;
}

AmbiguityGrid ambiguity_grid(double J, double b, double T_max, std::size_t resolution, DiagramMode mode,
                             std::size_t L, double tol) {
    if (resolution < kMinGridResolution)
        throw std::invalid_argument("ambiguity_grid: resolution must be at least " +
                                    std::to_string(kMinGridResolution));
    if (!(T_max > 0.0) || !std::isfinite(T_max)) throw std::invalid_argument("ambiguity_grid: T_max must be positive");

    AmbiguityGrid grid;
    grid.J = J;
    grid.b = b;
    grid.T_max = T_max;
    grid.resolution = resolution;
    grid.mode = mode;
    for (std::size_t i = 0; i < resolution; ++i) {
        const double T = (static_cast<double>(i) + 0.5) * grid.cell_width();
        grid.temperatures.push_back(T);
        grid.profiles.push_back(complexity_profile(ising_machine(IsingParams::at_temperature(J, b, T)), L));
    }
    grid.cells.reserve(resolution * resolution);
    for (std::size_t i = 0; i < resolution; ++i)
        for (std::size_t j = 0; j < resolution; ++j)
            grid.cells.push_back(classify_pair(grid.profiles[i], grid.profiles[j], tol));
    return grid;
}

std::optional<std::pair<std::size_t, std::size_t>> find_ambiguous_pair(std::span<const ComplexityProfile> family,
                                                                       Measure f1, Measure f2, double tol) {
    return find_ambiguous_pair(
        family, [f1](const ComplexityProfile& p) { return measure_value(p, f1); },
        [f2](const ComplexityProfile& p) { return measure_value(p, f2); }, tol);
}

}  // namespace simplicity

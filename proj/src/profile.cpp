#include "simplicity/profile.hpp"

#include <stdexcept>
#include <string>

#include "simplicity/quantum.hpp"

namespace simplicity {

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::h_mu: return "h_mu";
        case Measure::C_mu: return "C_mu";
        case Measure::C_q: return "C_q";
        case Measure::E: return "E";
    }
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (Measure m : {Measure::h_mu, Measure::C_mu, Measure::C_q, Measure::E})
        if (name == to_string(m)) return m;
    return std::nullopt;
}

double measure_value(const ComplexityProfile& p, Measure m) {
    switch (m) {
        case Measure::h_mu: return p.h_mu;
        case Measure::C_mu: return p.C_mu;
        case Measure::C_q:
            if (!p.C_q) throw std::invalid_argument("profile has no C_q");
            return *p.C_q;
        case Measure::E:
            if (!p.E) throw std::invalid_argument("profile has no E");
            return *p.E;
    }
    throw std::invalid_argument("unknown measure");
}

ComplexityProfile complexity_profile(const EpsilonMachine& m, std::size_t L) {
    const auto pi = stationary_distribution(m);
    ComplexityProfile p;
    p.h_mu = entropy_rate(m, pi);
    p.C_mu = statistical_complexity(pi);
    p.E = excess_entropy(m, pi);
    p.C_q = quantum_complexity(signal_overlaps(m, pi, L));
    p.L_used = L;
    return p;
}

}  // namespace simplicity

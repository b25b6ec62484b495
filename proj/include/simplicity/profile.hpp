#pragma once

#include <optional>
#include <string_view>

#include "simplicity/classical.hpp"

namespace simplicity {

enum class Measure { h_mu, C_mu, C_q, E };

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

/// Throws std::invalid_argument when the selected field is missing.
double measure_value(const ComplexityProfile& p, Measure m);

/// Full profile of a machine with an L-symbol quantum encoding. The machine is
/// taken as the minimal presentation; merge first when that is not known.
ComplexityProfile complexity_profile(const EpsilonMachine& m, std::size_t L);

}  // namespace simplicity

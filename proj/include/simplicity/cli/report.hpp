#pragma once

#include <ostream>
#include <span>
#include <string>

#include "simplicity/ambiguity.hpp"
#include "simplicity/ising.hpp"

namespace simplicity::cli {

/// 12 significant digits, "nan" for missing values.
std::string format_number(double v);

/// Header `T,p,q,h_mu,C_mu,C_q,E`; failed points emit nan fields.
void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> sweep);
void write_sweep_json(std::ostream& os, std::span<const SweepPoint> sweep);
/// Line chart of C_mu, C_q and E against T.
void write_sweep_svg(std::ostream& os, std::span<const SweepPoint> sweep);

/// Header `T1,T2,plain,certain`, one row per cell.
void write_grid_csv(std::ostream& os, const AmbiguityGrid& grid);
void write_grid_json(std::ostream& os, const AmbiguityGrid& grid);
/// Heatmap with one fill per verdict of the grid's mode.
void write_grid_svg(std::ostream& os, const AmbiguityGrid& grid);

std::string profile_json(const ComplexityProfile& p);
void write_profile_csv(std::ostream& os, const ComplexityProfile& p);

}  // namespace simplicity::cli

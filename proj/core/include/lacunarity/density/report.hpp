#pragma once

#include <ostream>
#include <string>

#include "lacunarity/density/density.hpp"

namespace lacunarity::density {

/// JSON is the source of truth:
/// {source, set, natural, dirichlet:[[s,ratio]...], extrapolated,
///  bound:{name,value,vacuous,direction}, consistent, gap, slack, ...}
std::string report_to_json(const DensityReport& report);

/// Flat single-record CSV (header + one row).
std::string report_to_csv(const DensityReport& report);

/// Human-readable table rendered from the JSON model.
std::string report_to_table(const DensityReport& report);

/// Two-column (s-1, ratio) plot data.
void write_plot_data(const DensityReport& report, std::ostream& os);

}  // namespace lacunarity::density

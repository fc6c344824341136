#pragma once

#include <ostream>
#include <string>

#include "collapseheat/analytic.hpp"
#include "collapseheat/solver.hpp"

namespace collapseheat {

/// Scientific notation with 9 significant digits; byte-for-byte stable.
std::string fmt9(double v);

/// position_m,T_K rows.
void write_profile_csv(std::ostream& os, const ProfileResult& profile);

/// x_m,y_m,z_m,T_K rows for every interior node, in unknown order.
void write_field_csv(std::ostream& os, const TemperatureField& field);

/// JSON sidecar describing a solved field (geometry, material, noise
/// parameters, resolution, residual, T_c).
void write_field_sidecar(std::ostream& os, const TemperatureField& field,
                         const NoiseParams& params, int resolution);

}  // namespace collapseheat

#pragma once

#include "collapseheat/units.hpp"

namespace collapseheat {

/// Collapse-noise parameters: coupling rate lambda and correlation length r_C.
struct NoiseParams {
    double lambda = 1e-8;  // 1/s
    double r_c = 1e-7;     // m

    void validate() const;
};

/// Total heating power deposited in a body of mass M:
///   dE/dt = (3/4) lambda hbar^2 M / (r_C^2 m_N^2)   [W]
double total_power(const NoiseParams& params, double mass_kg,
                   const PhysicalConstants& pc = PhysicalConstants::rounded());

/// Volumetric heating rate Q = (3/4) lambda hbar^2 rho / (r_C^2 m_N^2)  [W/m^3]
double volumetric_heating(const NoiseParams& params, double rho_kg_m3,
                          const PhysicalConstants& pc = PhysicalConstants::rounded());

/// Heating per unit mass, (3/4) lambda hbar^2 / (r_C^2 m_N^2)  [W/kg]
double heating_per_mass(const NoiseParams& params,
                        const PhysicalConstants& pc = PhysicalConstants::rounded());

}  // namespace collapseheat

#pragma once

#include <vector>

#include "collapseheat/materials.hpp"
#include "collapseheat/noise.hpp"
#include "collapseheat/units.hpp"

namespace collapseheat {

enum class AnalyticKind { CubeEstimate, Sphere, InfiniteCylinder, Slab };

/// Closed-form geometry: L is the cube side, sphere/cylinder outer radius,
/// or slab half-thickness. surface_T is the fixed boundary temperature.
struct AnalyticCase {
    AnalyticKind kind;
    double length;         // m
    double surface_T = 0;  // K

    void validate() const;
};

struct ProfileResult {
    std::vector<double> positions;     // m, ascending from center to surface
    std::vector<double> temperatures;  // K
    double central_T;                  // K
};

/// True when the body size is too close to the noise correlation length for
/// the volumetric-heating picture to be trusted.
bool below_correlation_scale(double length, const NoiseParams& params);

/// Dimensionless theta of the cube rough estimate,
/// theta = sqrt(lambda hbar^2 rho / (4 k0 K^2 m_N^2)). Metals (beta = 1) only.
double cube_theta(const Material& m, const NoiseParams& params,
                  const PhysicalConstants& pc = PhysicalConstants::rounded());

/// Cube rough estimate T_c = theta * L / r_C; requires beta = 1 and T_s = 0.
double cube_central_temperature(const AnalyticCase& c, const Material& m,
                                const NoiseParams& params,
                                const PhysicalConstants& pc = PhysicalConstants::rounded());

/// Exact central temperature for sphere / infinite cylinder / slab:
///   T_c = [T_s^(1+beta) + (1+beta) L^2 Q_eff / (d k0_hat)]^(1/(1+beta))
/// with d = 6 (sphere), 6 with Q -> 3Q/2 (cylinder), 2 (slab).
/// CubeEstimate dispatches to the rough estimate.
double central_temperature(const AnalyticCase& c, const Material& m,
                           const NoiseParams& params,
                           const PhysicalConstants& pc = PhysicalConstants::rounded());

/// The T_s = 0 evaluation of the same case (the experimentally relevant bound).
double lower_bound(const AnalyticCase& c, const Material& m,
                   const NoiseParams& params,
                   const PhysicalConstants& pc = PhysicalConstants::rounded());

/// Temperature profile sampled at n_points uniformly spaced positions in
/// [0, L] from center to surface. Not defined for CubeEstimate.
ProfileResult profile(const AnalyticCase& c, const Material& m,
                      const NoiseParams& params, int n_points,
                      const PhysicalConstants& pc = PhysicalConstants::rounded());

}  // namespace collapseheat

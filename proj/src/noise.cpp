#include "collapseheat/noise.hpp"

#include <stdexcept>

namespace collapseheat {

void NoiseParams::validate() const {
    if (lambda < 0) throw std::domain_error("noise coupling lambda must be >= 0");
    if (!(r_c > 0)) throw std::domain_error("correlation length r_C must be > 0");
}

double heating_per_mass(const NoiseParams& params, const PhysicalConstants& pc) {
    params.validate();
    pc.validate();
    return 0.75 * params.lambda * pc.hbar * pc.hbar /
           (params.r_c * params.r_c * pc.m_n * pc.m_n);
}

double total_power(const NoiseParams& params, double mass_kg,
                   const PhysicalConstants& pc) {
    if (mass_kg < 0) throw std::domain_error("mass must be >= 0");
    return heating_per_mass(params, pc) * mass_kg;
}

double volumetric_heating(const NoiseParams& params, double rho_kg_m3,
                          const PhysicalConstants& pc) {
    if (!(rho_kg_m3 > 0)) throw std::domain_error("density must be > 0");
    return heating_per_mass(params, pc) * rho_kg_m3;
}

}  // namespace collapseheat

#include "collapseheat/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace collapseheat {

void AnalyticCase::validate() const {
    if (!(length > 0)) throw std::domain_error("analytic case: length must be > 0");
    if (surface_T < 0) throw std::domain_error("analytic case: surface_T must be >= 0");
}

bool below_correlation_scale(double length, const NoiseParams& params) {
    return length < 10.0 * params.r_c;
}

namespace {

/// Kirchhoff jump u_c - u_s for the exact geometries.
double kirchhoff_jump(const AnalyticCase& c, const Material& m,
                      const NoiseParams& params, const PhysicalConstants& pc) {
    double q = heating_per_mass(params, pc) * m.rho;
    double divisor;
    switch (c.kind) {
        case AnalyticKind::Sphere:
            divisor = 6.0;
            break;
        case AnalyticKind::InfiniteCylinder:
            divisor = 6.0;
            q *= 1.5;  // infinite cylinder: Q -> 3Q/2 in the sphere formulas
            break;
        case AnalyticKind::Slab:
            divisor = 2.0;
            break;
        default:
            throw std::invalid_argument(
                "kirchhoff_jump: cube-estimate has no exact solution; use the "
                "rough estimate or the grid solver");
    }
    return (1.0 + m.beta) * c.length * c.length * q / (divisor * m.k0_hat);
}

}  // namespace

double cube_theta(const Material& m, const NoiseParams& params,
                  const PhysicalConstants& pc) {
    params.validate();
    m.validate();
    if (m.beta != 1.0)
        throw std::invalid_argument(
            "cube estimate is derived only for linear-law metals (beta = 1)");
    return std::sqrt(params.lambda * pc.hbar * pc.hbar * m.rho /
                     (4.0 * m.k0_hat * pc.m_n * pc.m_n));
}

double cube_central_temperature(const AnalyticCase& c, const Material& m,
                                const NoiseParams& params,
                                const PhysicalConstants& pc) {
    c.validate();
    if (c.kind != AnalyticKind::CubeEstimate)
        throw std::invalid_argument("cube_central_temperature requires a "
                                    "cube-estimate case");
    if (c.surface_T != 0)
        throw std::invalid_argument(
            "cube estimate assumes T_s = 0; use the grid solver for T_s > 0");
    return cube_theta(m, params, pc) * c.length / params.r_c;
}

double central_temperature(const AnalyticCase& c, const Material& m,
                           const NoiseParams& params,
                           const PhysicalConstants& pc) {
    c.validate();
    params.validate();
    m.validate();
    if (c.kind == AnalyticKind::CubeEstimate)
        return cube_central_temperature(c, m, params, pc);
    double u_s = m.kirchhoff(c.surface_T);
    return m.temperature_from_kirchhoff(u_s + kirchhoff_jump(c, m, params, pc));
}

double lower_bound(const AnalyticCase& c, const Material& m,
                   const NoiseParams& params, const PhysicalConstants& pc) {
    AnalyticCase zero = c;
    zero.surface_T = 0;
    return central_temperature(zero, m, params, pc);
}

ProfileResult profile(const AnalyticCase& c, const Material& m,
                      const NoiseParams& params, int n_points,
                      const PhysicalConstants& pc) {
    c.validate();
    if (c.kind == AnalyticKind::CubeEstimate)
        throw std::invalid_argument("cube-estimate has no analytic profile");
    if (n_points < 2)
        throw std::invalid_argument("profile requires n_points >= 2");
    double u_s = m.kirchhoff(c.surface_T);
    double jump = kirchhoff_jump(c, m, params, pc);
    double u_c = u_s + jump;
    // u(r) = u_c - jump * (r/L)^2 for sphere, cylinder and slab alike
    ProfileResult out;
    out.positions.resize(n_points);
    out.temperatures.resize(n_points);
    for (int i = 0; i < n_points; ++i) {
        double r = c.length * double(i) / double(n_points - 1);
        double s = r / c.length;
        double u = u_c - jump * s * s;
        out.positions[i] = r;
        out.temperatures[i] = m.temperature_from_kirchhoff(u);
    }
    out.temperatures.back() = c.surface_T;  // exact by construction
    out.central_T = out.temperatures.front();
    return out;
}

}  // namespace collapseheat

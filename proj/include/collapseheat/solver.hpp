#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "collapseheat/analytic.hpp"
#include "collapseheat/grid.hpp"
#include "collapseheat/materials.hpp"
#include "collapseheat/noise.hpp"
#include "collapseheat/units.hpp"

namespace collapseheat {

enum class Threading { Serial, OpenMP };

bool openmp_available();

struct SolveOptions {
    double tol = 1e-10;      // relative residual stopping rule
    int max_iterations = 0;  // 0 = 50 * largest axis node count
    Threading threading = Threading::Serial;
};

struct SolveError : std::runtime_error {
    SolveError(const std::string& msg, std::vector<double> history)
        : std::runtime_error(msg), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0;  // final relative residual
    std::vector<double> residual_history;
};

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Steady-state solution on a masked grid, stored as the Kirchhoff variable
/// u = T^(1+beta) per interior unknown.
class TemperatureField {
public:
    TemperatureField(std::shared_ptr<const GridDomain> domain, Material material,
                     double surface_T, std::vector<double> u, SolveStats stats);

    const GridDomain& domain() const { return *domain_; }
    std::shared_ptr<const GridDomain> domain_ptr() const { return domain_; }
    const Material& material() const { return material_; }
    double surface_temperature() const { return surface_T_; }
    double surface_kirchhoff() const { return u_s_; }

    std::span<const double> kirchhoff() const { return u_; }
    double temperature(int unknown) const {
        return material_.temperature_from_kirchhoff(u_[unknown]);
    }
    /// Maximum interior temperature.
    double central_temperature() const { return central_T_; }
    int argmax_unknown() const { return argmax_; }
    const SolveStats& stats() const { return stats_; }

private:
    std::shared_ptr<const GridDomain> domain_;
    Material material_;
    double surface_T_;
    double u_s_;
    std::vector<double> u_;
    double central_T_;
    int argmax_;
    SolveStats stats_;
};

/// Solve grad.(k(T) grad T) + Q = 0 via the Kirchhoff substitution:
/// conjugate gradients on the SPD 7-point system
///   -lap u = (1+beta) Q / k0_hat,  u = T_s^(1+beta) on the boundary.
TemperatureField solve(std::shared_ptr<const GridDomain> domain,
                       const Material& material, const NoiseParams& params,
                       double surface_T,
                       const PhysicalConstants& pc = PhysicalConstants::rounded(),
                       const SolveOptions& opts = {});

/// Temperature along an axis line through the domain centroid. Positions are
/// signed coordinates along the axis; the two boundary endpoints carry T_s.
ProfileResult center_profile(const TemperatureField& field, Axis axis);

struct ResolutionSample {
    int resolution = 0;
    double spacing = 0;
    double central_T = 0;
    double err_central = 0;  // |T_c - oracle| / oracle, NaN without an oracle
    double err_profile = 0;  // max |T - oracle| / T_c at fixed interior radii
    int iterations = 0;
};

struct ConvergenceReport {
    std::vector<ResolutionSample> samples;
    bool has_oracle = false;
    double fitted_order = 0;  // least-squares slope of log err vs log h
};

/// Refinement study against the analytic oracle (sphere and slab shapes).
/// Requires at least 3 strictly increasing resolutions.
ConvergenceReport convergence_study(
    const GeometryDescriptor& geom, const Material& material,
    const NoiseParams& params, double surface_T,
    const std::vector<int>& resolutions,
    const PhysicalConstants& pc = PhysicalConstants::rounded(),
    const SolveOptions& opts = {});

namespace kernels {
// Exposed for the serial-vs-OpenMP benchmark and kernel tests.
void apply_stencil(const GridDomain& d, std::span<const double> x,
                   std::span<double> y, Threading t);
double dot(std::span<const double> a, std::span<const double> b, Threading t);
void axpy(double alpha, std::span<const double> x, std::span<double> y,
          Threading t);
}  // namespace kernels

}  // namespace collapseheat

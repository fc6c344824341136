#include "collapseheat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace collapseheat {

bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace kernels {

void apply_stencil(const GridDomain& d, std::span<const double> x,
                   std::span<double> y, Threading t) {
    const auto& nbr = d.neighbors();
    const auto& diag = d.diag();
    const int n = d.num_interior();
    const double inv_h2 = 1.0 / (d.spacing() * d.spacing());
    const bool par = (t == Threading::OpenMP);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#else
    (void)par;
#endif
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int s = 0; s < 6; ++s) {
            int j = nbr[i][s];
            if (j >= 0) acc += x[j];
        }
        y[i] = diag[i] * x[i] - inv_h2 * acc;
    }
}

double dot(std::span<const double> a, std::span<const double> b, Threading t) {
    const size_t n = a.size();
#ifdef _OPENMP
    if (t == Threading::OpenMP) {
        // fixed partition + ordered accumulation: deterministic for a given
        // thread count
        const int nt = omp_get_max_threads();
        std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
        {
            const int tid = omp_get_thread_num();
            const size_t lo = n * tid / nt;
            const size_t hi = n * (tid + 1) / nt;
            double s = 0.0;
            for (size_t i = lo; i < hi; ++i) s += a[i] * b[i];
            partial[tid] = s;
        }
        double s = 0.0;
        for (double p : partial) s += p;
        return s;
    }
#else
    (void)t;
#endif
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y,
          Threading t) {
    const size_t n = x.size();
    const bool par = (t == Threading::OpenMP);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#else
    (void)par;
#endif
    for (std::int64_t i = 0; i < std::int64_t(n); ++i) y[i] += alpha * x[i];
}

}  // namespace kernels

TemperatureField::TemperatureField(std::shared_ptr<const GridDomain> domain,
                                   Material material, double surface_T,
                                   std::vector<double> u, SolveStats stats)
    : domain_(std::move(domain)),
      material_(std::move(material)),
      surface_T_(surface_T),
      u_s_(material_.kirchhoff(surface_T)),
      u_(std::move(u)),
      stats_(std::move(stats)) {
    argmax_ = 0;
    for (int i = 1; i < int(u_.size()); ++i)
        if (u_[i] > u_[argmax_]) argmax_ = i;
    central_T_ = material_.temperature_from_kirchhoff(u_[argmax_]);
}

TemperatureField solve(std::shared_ptr<const GridDomain> domain,
                       const Material& material, const NoiseParams& params,
                       double surface_T, const PhysicalConstants& pc,
                       const SolveOptions& opts) {
    if (surface_T < 0) throw std::domain_error("surface temperature must be >= 0");
    material.validate();
    const GridDomain& d = *domain;
    const int n = d.num_interior();
    const Threading t = opts.threading;

    const double q = volumetric_heating(params, material.rho, pc);
    const double source = (1.0 + material.beta) * q / material.k0_hat;
    const double u_s = material.kirchhoff(surface_T);

    std::vector<double> b(n), x(n, u_s), r(n), p(n), ap(n);
    const auto& bcoef = d.boundary_coeff();
    for (int i = 0; i < n; ++i) b[i] = source + bcoef[i] * u_s;

    const double norm_b = std::sqrt(kernels::dot(b, b, t));

    SolveStats stats;
    kernels::apply_stencil(d, x, r, t);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
    double rr = kernels::dot(r, r, t);
    // normalize by the initial residual so convergence is scale-equivariant
    // in the source; fall back to ||b|| when the start is already converged
    const double norm_r0 = std::sqrt(rr);
    double rel = norm_b > 0 ? norm_r0 / norm_b : 0.0;
    const double denom = (rel > opts.tol && norm_r0 > 0) ? norm_r0 : 1.0;
    if (rel > opts.tol) rel = 1.0;
    stats.residual = rel;

    auto shape = d.shape();
    int max_iter = opts.max_iterations > 0
                       ? opts.max_iterations
                       : 50 * std::max({shape[0], shape[1], shape[2]});

    if (rel > opts.tol) {
        p = r;
        for (int it = 1; it <= max_iter; ++it) {
            kernels::apply_stencil(d, p, ap, t);
            const double pap = kernels::dot(p, ap, t);
            const double alpha = rr / pap;
            kernels::axpy(alpha, p, x, t);
            kernels::axpy(-alpha, ap, r, t);
            const double rr_new = kernels::dot(r, r, t);
            rel = std::sqrt(rr_new) / denom;
            stats.iterations = it;
            stats.residual_history.push_back(rel);
            if (rel <= opts.tol) break;
            const double beta_cg = rr_new / rr;
            for (int i = 0; i < n; ++i) p[i] = r[i] + beta_cg * p[i];
            rr = rr_new;
        }
        stats.residual = rel;
        if (rel > opts.tol)
            throw SolveError("conjugate gradients did not converge within " +
                                 std::to_string(max_iter) +
                                 " iterations (relative residual " +
                                 std::to_string(rel) + ")",
                             std::move(stats.residual_history));
    }

    return TemperatureField(std::move(domain), material, surface_T,
                            std::move(x), std::move(stats));
}

ProfileResult center_profile(const TemperatureField& field, Axis axis) {
    const GridDomain& d = field.domain();
    const int ax = static_cast<int>(axis);
    if (d.dims() == 1 && ax != 0)
        throw std::invalid_argument("slab domains only have an x profile");
    auto shape = d.shape();

    // line through the node nearest the geometry center on the other axes
    std::array<int, 3> idx{0, 0, 0};
    for (int a = 0; a < 3; ++a) {
        // nodes are at origin + i*h with the grid centered on the origin
        auto p0 = d.position(0, 0, 0);
        int nearest = int(std::llround(-p0[a] / d.spacing()));
        idx[a] = std::clamp(nearest, 0, shape[a] - 1);
    }

    ProfileResult out;
    bool seen_interior = false;
    for (int i = 0; i < shape[ax]; ++i) {
        idx[ax] = i;
        NodeKind kind = d.kind(idx[0], idx[1], idx[2]);
        double pos = d.position(idx[0], idx[1], idx[2])[ax];
        if (kind == NodeKind::Interior) {
            int u = d.unknown_at(idx[0], idx[1], idx[2]);
            out.positions.push_back(pos);
            out.temperatures.push_back(field.temperature(u));
            seen_interior = true;
        } else if (kind == NodeKind::Boundary) {
            // keep only boundary nodes flanking the interior run
            bool adjacent = false;
            for (int delta : {-1, 1}) {
                int ii = i + delta;
                if (ii < 0 || ii >= shape[ax]) continue;
                auto nb = idx;
                nb[ax] = ii;
                if (d.kind(nb[0], nb[1], nb[2]) == NodeKind::Interior)
                    adjacent = true;
            }
            if (adjacent) {
                out.positions.push_back(pos);
                out.temperatures.push_back(field.surface_temperature());
            }
        }
    }
    if (!seen_interior)
        throw std::runtime_error("center line contains no interior nodes");
    out.central_T = *std::max_element(out.temperatures.begin(),
                                      out.temperatures.end());
    return out;
}

namespace {

double interpolate(const ProfileResult& prof, double pos) {
    const auto& xs = prof.positions;
    auto it = std::lower_bound(xs.begin(), xs.end(), pos);
    if (it == xs.begin()) return prof.temperatures.front();
    if (it == xs.end()) return prof.temperatures.back();
    size_t hi = it - xs.begin();
    size_t lo = hi - 1;
    double w = (pos - xs[lo]) / (xs[hi] - xs[lo]);
    return (1 - w) * prof.temperatures[lo] + w * prof.temperatures[hi];
}

}  // namespace

ConvergenceReport convergence_study(const GeometryDescriptor& geom,
                                    const Material& material,
                                    const NoiseParams& params, double surface_T,
                                    const std::vector<int>& resolutions,
                                    const PhysicalConstants& pc,
                                    const SolveOptions& opts) {
    if (resolutions.size() < 3)
        throw std::invalid_argument("convergence study needs >= 3 resolutions");
    for (size_t i = 1; i < resolutions.size(); ++i)
        if (resolutions[i] <= resolutions[i - 1])
            throw std::invalid_argument("resolutions must be strictly increasing");

    ConvergenceReport report;
    AnalyticCase oracle_case{AnalyticKind::Sphere, 1.0, surface_T};
    if (geom.shape == Shape::Sphere) {
        oracle_case = {AnalyticKind::Sphere, geom.a, surface_T};
        report.has_oracle = true;
    } else if (geom.shape == Shape::Slab) {
        oracle_case = {AnalyticKind::Slab, geom.a, surface_T};
        report.has_oracle = true;
    }

    // fixed evaluation radii, clear of the staircase boundary layer
    const std::vector<double> fractions{0.0, 0.1, 0.2, 0.3, 0.4,
                                        0.5, 0.6, 0.7, 0.8};

    double oracle_Tc = 0;
    if (report.has_oracle)
        oracle_Tc = central_temperature(oracle_case, material, params, pc);

    for (int res : resolutions) {
        auto domain = std::make_shared<const GridDomain>(GridDomain::build(geom, res));
        TemperatureField field = solve(domain, material, params, surface_T, pc, opts);
        ResolutionSample sample;
        sample.resolution = res;
        sample.spacing = domain->spacing();
        sample.central_T = field.central_temperature();
        sample.iterations = field.stats().iterations;
        if (report.has_oracle) {
            sample.err_central =
                std::abs(sample.central_T - oracle_Tc) / oracle_Tc;
            ProfileResult prof = center_profile(field, Axis::X);
            double worst = 0;
            const double u_s = material.kirchhoff(surface_T);
            const double u_c = material.kirchhoff(oracle_Tc);
            for (double f : fractions) {
                double pos = f * oracle_case.length;
                double u = u_c - (u_c - u_s) * f * f;
                double T_exact = material.temperature_from_kirchhoff(u);
                double T_disc = interpolate(prof, pos);
                worst = std::max(worst, std::abs(T_disc - T_exact) / oracle_Tc);
            }
            sample.err_profile = worst;
        } else {
            sample.err_central = std::numeric_limits<double>::quiet_NaN();
            sample.err_profile = std::numeric_limits<double>::quiet_NaN();
        }
        report.samples.push_back(sample);
    }

    if (report.has_oracle) {
        // least-squares slope of log(err_profile) against log(h)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (const auto& s : report.samples) {
            if (!(s.err_profile > 0)) continue;
            double lx = std::log(s.spacing);
            double ly = std::log(s.err_profile);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++m;
        }
        if (m >= 2)
            report.fitted_order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return report;
}

}  // namespace collapseheat

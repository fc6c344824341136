// Serial-vs-OpenMP comparison for the stencil and conjugate-gradient kernels.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "collapseheat/grid.hpp"
#include "collapseheat/materials.hpp"
#include "collapseheat/noise.hpp"
#include "collapseheat/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace collapseheat;

namespace {

double seconds(const std::function<void()>& fn, int repeats) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
    int resolution = argc > 1 ? std::atoi(argv[1]) : 64;
    std::printf("grid: sphere at resolution %d\n", resolution);

    auto domain = std::make_shared<const GridDomain>(
        GridDomain::build(GeometryDescriptor::sphere(0.5), resolution));
    const int n = domain->num_interior();
    std::printf("interior unknowns: %d\n", n);
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in\n");
#endif

    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = std::sin(0.01 * i);

    const int reps = 50;
    double t_serial = seconds(
        [&] { kernels::apply_stencil(*domain, x, y, Threading::Serial); }, reps);
    double t_omp = seconds(
        [&] { kernels::apply_stencil(*domain, x, y, Threading::OpenMP); }, reps);
    std::printf("stencil apply: serial %.3f ms, openmp %.3f ms, speedup %.2fx\n",
                t_serial * 1e3, t_omp * 1e3, t_serial / t_omp);

    Material copper = MaterialRegistry::with_builtins().get("copper-rrr30");
    NoiseParams params;

    SolveOptions serial_opts;
    serial_opts.threading = Threading::Serial;
    SolveOptions omp_opts;
    omp_opts.threading = Threading::OpenMP;

    auto t0 = std::chrono::steady_clock::now();
    TemperatureField f_serial = solve(domain, copper, params, 0.0,
                                      PhysicalConstants::rounded(), serial_opts);
    auto t1 = std::chrono::steady_clock::now();
    TemperatureField f_omp = solve(domain, copper, params, 0.0,
                                   PhysicalConstants::rounded(), omp_opts);
    auto t2 = std::chrono::steady_clock::now();

    double s_serial = std::chrono::duration<double>(t1 - t0).count();
    double s_omp = std::chrono::duration<double>(t2 - t1).count();
    std::printf("full CG solve: serial %.3f s (%d it), openmp %.3f s (%d it), "
                "speedup %.2fx\n",
                s_serial, f_serial.stats().iterations, s_omp,
                f_omp.stats().iterations, s_serial / s_omp);

    double worst = 0;
    auto us = f_serial.kirchhoff();
    auto uo = f_omp.kirchhoff();
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(us[i] - uo[i]) /
                                    std::max(std::abs(us[i]), 1e-300));
    std::printf("max relative difference serial vs openmp: %.3e\n", worst);
    std::printf("T_c serial %.9e K, openmp %.9e K\n",
                f_serial.central_temperature(), f_omp.central_temperature());
    return worst < 1e-6 ? 0 : 1;
}

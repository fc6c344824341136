// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <string>

#include "collapseheat/constraints.hpp"
#include "collapseheat/solver.hpp"
#include "collapseheat/units.hpp"

using namespace collapseheat;

namespace {

int g_failures = 0;

void report(int index, const std::string& label, bool ok,
            const std::string& detail) {
    std::printf("[%2d] %-34s %s  (%s)\n", index, label.c_str(),
                ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++g_failures;
}

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * std::abs(target);
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const NoiseParams kDefaults{};
const MaterialRegistry kRegistry = MaterialRegistry::with_builtins();

std::shared_ptr<const GridDomain> make_domain(const GeometryDescriptor& g,
                                              int res) {
    return std::make_shared<const GridDomain>(GridDomain::build(g, res));
}

void criterion_theta() {
    double theta = cube_theta(kRegistry.get("copper-rrr30"), kDefaults);
    report(1, "copper cube theta", within(theta, 4.6e-11, 0.02),
           "theta = " + num(theta) + " vs 4.6e-11, tol 2%");
}

void criterion_copper_cube() {
    AnalyticCase meter{AnalyticKind::CubeEstimate, 1.0, 0.0};
    double t_c =
        cube_central_temperature(meter, kRegistry.get("copper-rrr30"), kDefaults);
    report(2, "copper cube T_c at 1 m", within(t_c, 5e-4, 0.10),
           "T_c = " + num(t_c) + " K vs 5e-4 K, tol 10%");
}

void criterion_heating_per_mass() {
    UnitSystem units;
    double hpm =
        units.convert(heating_per_mass(kDefaults), "W/kg", "MeV/(g s)");
    report(3, "heating per mass", within(hpm, 20.0, 0.05),
           num(hpm) + " MeV/(g s) vs 20, tol 5%");
}

void criterion_torlon_coefficient() {
    const Material& torlon = kRegistry.get("torlon-4203");
    AnalyticCase at_rc{AnalyticKind::Sphere, kDefaults.r_c, 0.0};
    double coef = lower_bound(at_rc, torlon, kDefaults);
    double exponent = 2.0 / (1.0 + torlon.beta);
    bool ok = within(coef, 3.4e-6, 0.03) && std::abs(exponent - 0.629) <= 0.001;
    report(4, "torlon bound coefficient", ok,
           "coef = " + num(coef) + " K vs 3.4e-6 (3%), exponent = " +
               num(exponent) + " vs 0.629 +- 0.001");
}

void criterion_torlon_half_meter() {
    const Material& torlon = kRegistry.get("torlon-4203");
    AnalyticCase half_meter{AnalyticKind::Sphere, 0.5, 0.0};
    double t_c = lower_bound(half_meter, torlon, kDefaults);
    NoiseParams vin = kDefaults;
    vin.lambda = std::pow(10.0, -7.7);
    double t_vin = lower_bound(half_meter, torlon, vin);
    double ratio = t_vin / t_c;
    bool ok = within(t_c, 5.6e-2, 0.03) && within(t_vin, 7.0e-2, 0.03) &&
              within(ratio, 1.24, 0.01);
    report(5, "torlon sphere at 50 cm", ok,
           "T_c = " + num(t_c) + " / " + num(t_vin) +
               " K (tol 3%), ratio = " + num(ratio) + " vs 1.24 (1%)");
}

void criterion_rhodium_scale() {
    AnalyticCase small{AnalyticKind::CubeEstimate, 0.4e-3, 0.0};
    double t_c =
        cube_central_temperature(small, kRegistry.get("copper-rrr30"), kDefaults);
    double factor = t_c > 4e-7 ? t_c / 4e-7 : 4e-7 / t_c;
    report(6, "rhodium-scale estimate", factor <= 3.0,
           "T_c = " + num(t_c) + " K vs 4e-7 K, factor " + num(factor) +
               " <= 3");
}

void criterion_bundled_verdicts() {
    bool ok = true;
    std::string detail;
    for (const auto& r : bundled_records()) {
        auto res = evaluate(r, kDefaults, kRegistry);
        ok = ok && !res.constrains;
        if (!detail.empty()) detail += ", ";
        detail += r.name + (res.constrains ? ": constrains" : ": clear");
    }
    report(7, "bundled records all negative", ok, detail);
}

void criterion_sphere_pde() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"copper-rrr30", "torlon-4203"}) {
        const Material& m = kRegistry.get(name);
        auto field = solve(make_domain(GeometryDescriptor::sphere(0.5), 64), m,
                           kDefaults, 0.0);
        AnalyticCase oracle{AnalyticKind::Sphere, 0.5, 0.0};
        double exact = central_temperature(oracle, m, kDefaults);
        double err = std::abs(field.central_temperature() / exact - 1.0);
        ok = ok && err <= 0.01;
        detail += std::string(name) + " err " + num(err) + "; ";
    }
    auto study =
        convergence_study(GeometryDescriptor::sphere(0.5),
                          kRegistry.get("copper-rrr30"), kDefaults, 0.0,
                          {16, 32, 64});
    bool monotone = study.samples[0].err_profile > study.samples[1].err_profile &&
                    study.samples[1].err_profile > study.samples[2].err_profile;
    ok = ok && monotone && study.fitted_order >= 0.9;
    detail += "order " + num(study.fitted_order) + " >= 0.9" +
              (monotone ? ", monotone" : ", NOT monotone");
    report(8, "sphere PDE vs closed form", ok, detail);
}

void criterion_slab_manufactured() {
    auto study = convergence_study(GeometryDescriptor::slab(0.05),
                                   kRegistry.get("torlon-4203"), kDefaults,
                                   0.01, {16, 32, 64});
    double final_err = study.samples.back().err_profile;
    bool ok = final_err <= 0.01 && study.fitted_order >= 1.8;
    report(9, "slab manufactured solution", ok,
           "profile err " + num(final_err) + " <= 1%, order " +
               num(study.fitted_order) + " >= 1.8");
}

void criterion_properties() {
    const Material& copper = kRegistry.get("copper-rrr30");
    const Material& torlon = kRegistry.get("torlon-4203");
    bool ok = true;
    std::string detail;

    // Kirchhoff linearity: doubling Q doubles u - u_s at every node
    {
        auto domain = make_domain(GeometryDescriptor::box(0.2, 0.3, 0.25), 16);
        double surface = 0.05;
        auto base = solve(domain, torlon, kDefaults, surface);
        NoiseParams doubled = kDefaults;
        doubled.lambda *= 2;
        auto twice = solve(domain, torlon, doubled, surface);
        double u_s = torlon.kirchhoff(surface);
        auto ub = base.kirchhoff();
        auto ut = twice.kirchhoff();
        double worst = 0;
        for (size_t i = 0; i < ub.size(); ++i) {
            double rhs = 2 * (ub[i] - u_s);
            worst = std::max(worst, std::abs(ut[i] - u_s - rhs) / std::abs(rhs));
        }
        ok = ok && worst <= 1e-8;
        detail += "linearity " + num(worst) + "; ";
    }

    // discrete maximum principle on 100 randomized draws
    {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> draw(0.5, 2.0);
        std::uniform_real_distribution<double> ts(0.0, 0.3);
        std::uniform_int_distribution<int> shape_pick(0, 3);
        int violations = 0;
        for (int i = 0; i < 100; ++i) {
            GeometryDescriptor geom;
            switch (shape_pick(rng)) {
                case 0:
                    geom = GeometryDescriptor::sphere(0.3 * draw(rng));
                    break;
                case 1:
                    geom = GeometryDescriptor::box(0.2 * draw(rng),
                                                   0.2 * draw(rng),
                                                   0.2 * draw(rng));
                    break;
                case 2:
                    geom = GeometryDescriptor::finite_cylinder(0.2 * draw(rng),
                                                               0.3 * draw(rng));
                    break;
                default:
                    geom = GeometryDescriptor::ellipsoid(
                        0.2 * draw(rng), 0.2 * draw(rng), 0.2 * draw(rng));
            }
            Material mat = (i % 2 == 0) ? copper : torlon;
            mat.rho *= draw(rng);
            mat.k0_hat *= draw(rng);
            NoiseParams p{1e-8 * draw(rng), 1e-7 * draw(rng)};
            double surface = ts(rng);
            auto field = solve(make_domain(geom, 10), mat, p, surface);
            double u_s = mat.kirchhoff(surface);
            for (double u : field.kirchhoff())
                if (u < u_s - 1e-9 * std::max(u_s, 1e-300)) {
                    ++violations;
                    break;
                }
        }
        ok = ok && violations == 0;
        detail += "max principle violations " + std::to_string(violations) +
                  "/100; ";
    }

    // scaling law: analytic exact, PDE within 0.5%
    {
        double worst_analytic = 0;
        for (auto kind : {AnalyticKind::CubeEstimate, AnalyticKind::Sphere,
                          AnalyticKind::InfiniteCylinder, AnalyticKind::Slab}) {
            const Material& m =
                (kind == AnalyticKind::CubeEstimate) ? copper : torlon;
            AnalyticCase base{kind, 0.3, 0.0};
            AnalyticCase scaled{kind, 0.3 * 2.7, 0.0};
            double expect = std::pow(2.7, 2.0 / (1.0 + m.beta)) *
                            central_temperature(base, m, kDefaults);
            double got = central_temperature(scaled, m, kDefaults);
            worst_analytic =
                std::max(worst_analytic, std::abs(got / expect - 1.0));
        }
        double worst_pde = 0;
        for (const Material* m : {&copper, &torlon}) {
            auto geom = GeometryDescriptor::sphere(0.4);
            auto base = solve(make_domain(geom, 16), *m, kDefaults, 0.0);
            auto scaled =
                solve(make_domain(geom.scaled(3.0), 16), *m, kDefaults, 0.0);
            double expect = std::pow(3.0, 2.0 / (1.0 + m->beta)) *
                            base.central_temperature();
            worst_pde = std::max(
                worst_pde,
                std::abs(scaled.central_temperature() / expect - 1.0));
        }
        ok = ok && worst_analytic <= 1e-10 && worst_pde <= 0.005;
        detail += "scaling analytic " + num(worst_analytic) + ", PDE " +
                  num(worst_pde) + "; ";
    }

    // cylinder-vs-sphere Kirchhoff jump ratio is exactly 3/2
    {
        double worst = 0;
        for (const Material* m : {&copper, &torlon}) {
            for (double surface : {0.0, 0.05, 0.3}) {
                AnalyticCase sph{AnalyticKind::Sphere, 0.7, surface};
                AnalyticCase cyl{AnalyticKind::InfiniteCylinder, 0.7, surface};
                double u_s = m->kirchhoff(surface);
                double js =
                    m->kirchhoff(central_temperature(sph, *m, kDefaults)) - u_s;
                double jc =
                    m->kirchhoff(central_temperature(cyl, *m, kDefaults)) - u_s;
                worst = std::max(worst, std::abs(jc / js - 1.5));
            }
        }
        ok = ok && worst <= 1e-10;
        detail += "cylinder/sphere jump dev " + num(worst);
    }

    report(10, "property suite", ok, detail);
}

void criterion_inversion() {
    bool ok = true;
    std::string detail;
    for (const auto& r : bundled_records()) {
        auto res = evaluate(r, kDefaults, kRegistry);
        NoiseParams at_max = kDefaults;
        at_max.lambda = res.lambda_max;
        auto rerun = evaluate(r, at_max, kRegistry);
        double err = std::abs(rerun.predicted_Tc / r.measured_T - 1.0);
        ok = ok && err <= 0.005;
        if (!detail.empty()) detail += ", ";
        detail += r.name + " err " + num(err);
    }
    report(11, "inversion consistency", ok, detail);
}

}  // namespace

int main() {
    criterion_theta();
    criterion_copper_cube();
    criterion_heating_per_mass();
    criterion_torlon_coefficient();
    criterion_torlon_half_meter();
    criterion_rhodium_scale();
    criterion_bundled_verdicts();
    criterion_sphere_pde();
    criterion_slab_manufactured();
    criterion_properties();
    criterion_inversion();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}

// collapse-heat: minimum interior temperatures implied by collapse-model
// noise heating, and exclusion bounds from cryogenic cooling records.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collapseheat/analytic.hpp"
#include "collapseheat/cli_support.hpp"
#include "collapseheat/constraints.hpp"
#include "collapseheat/export.hpp"
#include "collapseheat/grid.hpp"
#include "collapseheat/materials.hpp"
#include "collapseheat/noise.hpp"
#include "collapseheat/solver.hpp"
#include "collapseheat/table_file.hpp"

namespace ch = collapseheat;

namespace {

struct CommonOpts {
    std::string materials_path;
    std::string lambda_text = "1e-8";
    std::string rc_text = "1e-5cm";
    bool precise = false;

    ch::NoiseParams noise() const {
        ch::NoiseParams p;
        p.lambda = ch::parse_rate(lambda_text);
        p.r_c = ch::parse_length(rc_text);
        p.validate();
        return p;
    }
    ch::PhysicalConstants constants() const {
        return precise ? ch::PhysicalConstants::precise()
                       : ch::PhysicalConstants::rounded();
    }
    ch::MaterialRegistry registry() const {
        std::string path = materials_path;
        if (path.empty()) {
            if (const char* env = std::getenv("COLLAPSE_HEAT_MATERIALS"))
                path = env;
        }
        if (path.empty()) return ch::MaterialRegistry::with_builtins();
        std::ifstream in(path);
        if (!in)
            throw ch::ParseError("cannot open materials file: " + path);
        return ch::load_registry(in);
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--materials", c.materials_path,
                    "materials config file (or $COLLAPSE_HEAT_MATERIALS)");
    cmd->add_option("--lambda", c.lambda_text,
                    "collapse coupling in 1/s, e.g. 1e-8 or 10^-7.7");
    cmd->add_option("--rc", c.rc_text, "noise correlation length, e.g. 1e-5cm");
    cmd->add_flag("--precise-constants", c.precise,
                  "use precise physical constants instead of the rounded set");
    cmd->set_config("--config");
}

void print_header(const std::string& command, const ch::NoiseParams& p) {
    std::cout << "# collapse-heat " << command << "\n";
    std::cout << "# lambda = " << ch::fmt9(p.lambda)
              << " 1/s, r_C = " << ch::fmt9(p.r_c) << " m\n";
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write output file: " + path);
    return out;
}

ch::AnalyticKind analytic_kind(const std::string& g) {
    if (g == "cube") return ch::AnalyticKind::CubeEstimate;
    if (g == "sphere") return ch::AnalyticKind::Sphere;
    if (g == "cylinder") return ch::AnalyticKind::InfiniteCylinder;
    if (g == "slab") return ch::AnalyticKind::Slab;
    throw CLI::ValidationError("--geometry",
                               "expected cube|sphere|cylinder|slab, got " + g);
}

int run_estimate(const CommonOpts& common, const std::string& geometry,
                 const std::string& material_name, const std::string& length,
                 double surface_T, const std::string& out_path, int points) {
    auto params = common.noise();
    auto pc = common.constants();
    auto registry = common.registry();
    const ch::Material& mat = registry.get(material_name);
    ch::AnalyticCase c{analytic_kind(geometry), ch::parse_length(length),
                       surface_T};

    print_header("estimate", params);
    double q = ch::volumetric_heating(params, mat.rho, pc);
    double t_c = ch::central_temperature(c, mat, params, pc);
    std::cout << "# geometry = " << geometry << ", L = " << ch::fmt9(c.length)
              << " m, T_s = " << ch::fmt9(c.surface_T) << " K, material = "
              << mat.name << "\n";
    if (ch::below_correlation_scale(c.length, params))
        std::cout << "# warning: L is not >> r_C; the volumetric heating "
                     "picture is marginal at this scale\n";
    if (t_c > mat.valid_below)
        std::cout << "# warning: T_c exceeds the conductivity fit range ("
                  << ch::fmt9(mat.valid_below) << " K)\n";
    std::cout << "Q = " << ch::fmt9(q) << " W/m3\n";
    std::cout << "T_c = " << ch::fmt9(t_c) << " K\n";

    if (!out_path.empty()) {
        if (c.kind == ch::AnalyticKind::CubeEstimate)
            throw CLI::ValidationError(
                "--out", "the cube estimate has no profile to export");
        auto prof = ch::profile(c, mat, params, points, pc);
        auto out = open_output(out_path);
        ch::write_profile_csv(out, prof);
        std::cout << "profile written to " << out_path << "\n";
    }
    return 0;
}

ch::GeometryDescriptor solve_geometry(const std::string& geometry,
                                      const std::string& L,
                                      const std::string& Lx,
                                      const std::string& Ly,
                                      const std::string& Lz,
                                      const std::string& radius,
                                      const std::string& height) {
    auto need = [](const std::string& v, const char* flag) {
        if (v.empty())
            throw CLI::ValidationError("--geometry", std::string("missing ") +
                                                         flag +
                                                         " for this geometry");
        return ch::parse_length(v);
    };
    if (geometry == "sphere")
        return ch::GeometryDescriptor::sphere(
            need(!radius.empty() ? radius : L, "--radius (or --L)"));
    if (geometry == "cube")
        return ch::GeometryDescriptor::cube(need(L, "--L"));
    if (geometry == "box")
        return ch::GeometryDescriptor::box(need(Lx, "--Lx"), need(Ly, "--Ly"),
                                           need(Lz, "--Lz"));
    if (geometry == "finite-cylinder")
        return ch::GeometryDescriptor::finite_cylinder(need(radius, "--radius"),
                                                       need(height, "--height"));
    if (geometry == "ellipsoid")
        return ch::GeometryDescriptor::ellipsoid(need(Lx, "--Lx") / 2,
                                                 need(Ly, "--Ly") / 2,
                                                 need(Lz, "--Lz") / 2);
    if (geometry == "slab")
        return ch::GeometryDescriptor::slab(need(L, "--L"));
    throw CLI::ValidationError(
        "--geometry",
        "expected box|cube|sphere|finite-cylinder|ellipsoid|slab, got " +
            geometry);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Minimum interior temperatures of solids under collapse-model noise "
        "heating"};
    app.require_subcommand(1);

    // ---- estimate ----
    auto* est = app.add_subcommand(
        "estimate", "closed-form central temperature (analytic geometries)");
    CommonOpts est_common;
    std::string est_geometry = "sphere", est_material = "copper-rrr30";
    std::string est_L, est_out;
    double est_Ts = 0;
    int est_points = 101;
    add_common(est, est_common);
    est->add_option("--geometry", est_geometry, "cube|sphere|cylinder|slab");
    est->add_option("--material", est_material, "material name");
    est->add_option("--L", est_L,
                    "size: cube side, sphere/cylinder radius, slab "
                    "half-thickness (unit suffix ok)")
        ->required();
    est->add_option("--Ts", est_Ts, "surface temperature in K");
    est->add_option("--out", est_out, "write the radial profile CSV here");
    est->add_option("--points", est_points, "profile sample count");

    // ---- solve ----
    auto* sol = app.add_subcommand(
        "solve", "finite-difference solve on a masked 3D grid");
    CommonOpts sol_common;
    std::string sol_geometry = "sphere", sol_material = "copper-rrr30";
    std::string sol_L, sol_Lx, sol_Ly, sol_Lz, sol_radius, sol_height;
    std::string sol_out, sol_profile_out;
    double sol_Ts = 0, sol_tol = 1e-10;
    int sol_resolution = 32;
    bool sol_parallel = false;
    add_common(sol, sol_common);
    sol->add_option("--geometry", sol_geometry,
                    "box|cube|sphere|finite-cylinder|ellipsoid|slab");
    sol->add_option("--material", sol_material, "material name");
    sol->add_option("--L", sol_L, "cube side / sphere radius / slab half");
    sol->add_option("--Lx", sol_Lx, "box or ellipsoid x extent");
    sol->add_option("--Ly", sol_Ly, "box or ellipsoid y extent");
    sol->add_option("--Lz", sol_Lz, "box or ellipsoid z extent");
    sol->add_option("--radius", sol_radius, "sphere or cylinder radius");
    sol->add_option("--height", sol_height, "finite cylinder height");
    sol->add_option("--Ts", sol_Ts, "surface temperature in K");
    sol->add_option("--resolution", sol_resolution,
                    "cells across the smallest dimension (>= 8)");
    sol->add_option("--tol", sol_tol, "relative residual tolerance");
    sol->add_option("--out", sol_out,
                    "write interior field CSV here (+ .meta.json sidecar)");
    sol->add_option("--profile-out", sol_profile_out,
                    "write the center-line profile CSV here");
    sol->add_flag("--parallel", sol_parallel,
                  "use the OpenMP kernels (deterministic for a fixed thread "
                  "count); default is the serial reference path");

    // ---- scan ----
    auto* scn = app.add_subcommand(
        "scan", "sweep lambda, r_C or L over a grid (analytic geometries)");
    CommonOpts scn_common;
    std::string scn_geometry = "sphere", scn_material = "copper-rrr30";
    std::string scn_L, scn_out;
    double scn_Ts = 0;
    std::vector<std::string> scn_axes;
    add_common(scn, scn_common);
    scn->add_option("--geometry", scn_geometry, "cube|sphere|cylinder|slab");
    scn->add_option("--material", scn_material, "material name");
    scn->add_option("--L", scn_L, "size (required unless L is scanned)");
    scn->add_option("--Ts", scn_Ts, "surface temperature in K");
    scn->add_option("--scan", scn_axes,
                    "param:start:stop:count:lin|log (one or two axes)")
        ->required();
    scn->add_option("--out", scn_out, "CSV output path (default stdout)");

    // ---- constrain ----
    auto* con = app.add_subcommand(
        "constrain", "evaluate cooling records and invert lambda bounds");
    CommonOpts con_common;
    std::string con_experiments, con_out, con_background;
    bool con_include_spin = false;
    int con_resolution = 32;
    add_common(con, con_common);
    con->add_option("--experiments", con_experiments,
                    "experiment records file (default: bundled records)");
    con->add_flag("--include-spin", con_include_spin,
                  "let spin-temperature records constrain lambda");
    con->add_option("--resolution", con_resolution,
                    "grid resolution for records with grid geometries");
    con->add_option("--background", con_background,
                    "radiogenic background in MeV/(g s): report the heating "
                    "budget ratio");
    con->add_option("--out", con_out, "CSV output path");

    // ---- materials ----
    auto* mat = app.add_subcommand("materials",
                                   "list and validate the material registry");
    CommonOpts mat_common;
    add_common(mat, mat_common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (est->parsed())
            return run_estimate(est_common, est_geometry, est_material, est_L,
                                est_Ts, est_out, est_points);

        if (sol->parsed()) {
            auto params = sol_common.noise();
            auto pc = sol_common.constants();
            auto registry = sol_common.registry();
            const ch::Material& material = registry.get(sol_material);
            auto geom = solve_geometry(sol_geometry, sol_L, sol_Lx, sol_Ly,
                                       sol_Lz, sol_radius, sol_height);
            auto domain = std::make_shared<const ch::GridDomain>(
                ch::GridDomain::build(geom, sol_resolution));
            ch::SolveOptions opts;
            opts.tol = sol_tol;
            opts.threading = sol_parallel && ch::openmp_available()
                                 ? ch::Threading::OpenMP
                                 : ch::Threading::Serial;
            auto field = ch::solve(domain, material, params, sol_Ts, pc, opts);
            print_header("solve", params);
            std::cout << "# geometry = " << geom.describe()
                      << ", resolution = " << sol_resolution
                      << ", interior nodes = " << domain->num_interior()
                      << "\n";
            std::cout << "# iterations = " << field.stats().iterations
                      << ", residual = " << ch::fmt9(field.stats().residual)
                      << "\n";
            std::cout << "T_c = " << ch::fmt9(field.central_temperature())
                      << " K\n";
            if (!sol_out.empty()) {
                auto out = open_output(sol_out);
                ch::write_field_csv(out, field);
                auto meta = open_output(sol_out + ".meta.json");
                ch::write_field_sidecar(meta, field, params, sol_resolution);
                std::cout << "field written to " << sol_out << "\n";
            }
            if (!sol_profile_out.empty()) {
                auto prof = ch::center_profile(field, ch::Axis::X);
                auto out = open_output(sol_profile_out);
                ch::write_profile_csv(out, prof);
            }
            return 0;
        }

        if (scn->parsed()) {
            if (scn_axes.size() > 2)
                throw CLI::ValidationError("--scan",
                                           "at most two scan axes supported");
            auto base_params = scn_common.noise();
            auto pc = scn_common.constants();
            auto registry = scn_common.registry();
            const ch::Material& material = registry.get(scn_material);
            ch::AnalyticKind kind = analytic_kind(scn_geometry);

            std::vector<ch::ScanAxis> axes;
            for (const auto& spec : scn_axes)
                axes.push_back(ch::parse_scan_axis(spec));
            bool scans_L = false;
            for (const auto& a : axes) scans_L |= a.param == "L";
            if (!scans_L && scn_L.empty())
                throw CLI::ValidationError("--L",
                                           "required unless L is scanned");
            double base_L = scans_L ? 0.0 : ch::parse_length(scn_L);

            std::ostringstream csv;
            for (const auto& a : axes)
                csv << (a.param == "lambda" ? "lambda_per_s"
                        : a.param == "rc"  ? "r_c_m"
                                           : "L_m")
                    << ',';
            csv << "Q_W_m3,T_c_K\n";

            auto emit_row = [&](const std::vector<double>& values) {
                ch::NoiseParams p = base_params;
                double L = base_L;
                for (size_t i = 0; i < axes.size(); ++i) {
                    if (axes[i].param == "lambda") p.lambda = values[i];
                    else if (axes[i].param == "rc") p.r_c = values[i];
                    else L = values[i];
                }
                ch::AnalyticCase c{kind, L, scn_Ts};
                double q = ch::volumetric_heating(p, material.rho, pc);
                double t_c = ch::central_temperature(c, material, p, pc);
                for (double v : values) csv << ch::fmt9(v) << ',';
                csv << ch::fmt9(q) << ',' << ch::fmt9(t_c) << '\n';
            };

            auto g0 = axes[0].grid();
            if (axes.size() == 1) {
                for (double v : g0) emit_row({v});
            } else {
                auto g1 = axes[1].grid();
                for (double v0 : g0)
                    for (double v1 : g1) emit_row({v0, v1});
            }

            if (scn_out.empty()) {
                std::cout << csv.str();
            } else {
                auto out = open_output(scn_out);
                out << csv.str();
                print_header("scan", base_params);
                std::cout << "scan written to " << scn_out << "\n";
            }
            return 0;
        }

        if (con->parsed()) {
            auto params = con_common.noise();
            auto registry = con_common.registry();
            ch::EvaluateOptions opts;
            opts.include_spin = con_include_spin;
            opts.resolution = con_resolution;
            opts.constants = con_common.constants();

            std::vector<ch::ExperimentRecord> records;
            if (con_experiments.empty()) {
                records = ch::bundled_records();
            } else {
                std::ifstream in(con_experiments);
                if (!in)
                    throw ch::ParseError("cannot open experiments file: " +
                                         con_experiments);
                records = ch::load_experiments(in);
            }

            print_header("constrain", params);
            std::ostringstream csv;
            csv << "name,predicted_Tc_K,measured_T_K,margin,constrains,"
                   "lambda_max_per_s\n";
            for (const auto& r : records) {
                auto res = ch::evaluate(r, params, registry, opts);
                std::cout << r.name << ": predicted T_c = "
                          << ch::fmt9(res.predicted_Tc)
                          << " K, measured = " << ch::fmt9(res.measured_T)
                          << " K, margin = " << ch::fmt9(res.margin)
                          << (res.constrains ? " -> constrains lambda"
                                             : " -> no constraint")
                          << ", lambda_max = " << ch::fmt9(res.lambda_max)
                          << " 1/s";
                if (res.spin_gated) std::cout << " [spin record, gated]";
                if (res.length_scale_warning)
                    std::cout << " [warning: L not >> r_C]";
                std::cout << "\n";
                csv << r.name << ',' << ch::fmt9(res.predicted_Tc) << ','
                    << ch::fmt9(res.measured_T) << ',' << ch::fmt9(res.margin)
                    << ',' << (res.constrains ? "true" : "false") << ','
                    << ch::fmt9(res.lambda_max) << '\n';
            }
            if (!con_background.empty()) {
                ch::UnitSystem units(opts.constants);
                double bg = units.convert(ch::parse_rate(con_background),
                                          "MeV/(g s)", "W/kg");
                auto rep = ch::radiogenic_budget(bg, params, opts.constants);
                std::cout << "radiogenic budget: background / noise heating = "
                          << ch::fmt9(rep.ratio) << " -> "
                          << (rep.pass ? "pass" : "FAIL") << " (threshold "
                          << ch::fmt9(rep.threshold) << ")\n";
            }
            if (!con_out.empty()) {
                auto out = open_output(con_out);
                out << csv.str();
            }
            return 0;
        }

        if (mat->parsed()) {
            auto registry = mat_common.registry();
            for (const auto& name : registry.names()) {
                const ch::Material& m = registry.get(name);
                std::cout << name << ": rho = " << ch::fmt9(m.rho)
                          << " kg/m3, k0_hat = " << ch::fmt9(m.k0_hat)
                          << " SI, beta = " << ch::fmt9(m.beta)
                          << ", valid below " << ch::fmt9(m.valid_below)
                          << " K\n";
            }
            return 0;
        }
    } catch (const ch::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ch::SolveError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

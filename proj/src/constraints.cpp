#include "collapseheat/constraints.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "collapseheat/solver.hpp"
#include "collapseheat/table_file.hpp"

namespace collapseheat {

ExclusionResult evaluate(const ExperimentRecord& record,
                         const NoiseParams& params,
                         const MaterialRegistry& registry,
                         const EvaluateOptions& opts) {
    if (!(record.measured_T > 0))
        throw std::domain_error("record '" + record.name +
                                "': measured temperature must be > 0");
    const Material& mat = registry.get(record.material_name);

    ExclusionResult out;
    out.measured_T = record.measured_T;

    double length_scale;
    if (const auto* ac = std::get_if<AnalyticCase>(&record.geometry)) {
        out.predicted_Tc = lower_bound(*ac, mat, params, opts.constants);
        length_scale = ac->length;
    } else {
        const auto& geom = std::get<GeometryDescriptor>(record.geometry);
        auto domain = std::make_shared<const GridDomain>(
            GridDomain::build(geom, opts.resolution));
        TemperatureField field =
            solve(domain, mat, params, 0.0, opts.constants);
        out.predicted_Tc = field.central_temperature();
        length_scale = geom.min_dimension();
    }

    out.length_scale_warning = below_correlation_scale(length_scale, params);
    out.margin = out.predicted_Tc / record.measured_T;
    // T_c scales as lambda^(1/(1+beta)) at T_s = 0, so the inversion is exact
    out.lambda_max = params.lambda *
                     std::pow(record.measured_T / out.predicted_Tc, 1.0 + mat.beta);
    out.spin_gated =
        (record.kind == TemperatureKind::Spin) && !opts.include_spin;
    out.constrains = !out.spin_gated && out.margin > 1.0;
    return out;
}

std::vector<ExperimentRecord> bundled_records() {
    return {
        {"cuore-copper",
         "copper-rrr30",
         AnalyticCase{AnalyticKind::CubeEstimate, 1.0, 0.0},
         6e-3,
         TemperatureKind::Lattice,
         "400 kg of copper cooled in the CUORE cryostat; L = 1 m scale"},
        {"rhodium-crystal",
         "copper-rrr30",
         AnalyticCase{AnalyticKind::CubeEstimate, 0.4e-3, 0.0},
         6e-5,
         TemperatureKind::Lattice,
         "0.4 x 4 x 25 mm rhodium single crystal, lattice temperature; "
         "smallest dimension as L, copper conductivity as metal proxy"},
        {"aluminum-membrane",
         "copper-rrr30",
         AnalyticCase{AnalyticKind::CubeEstimate, 1e-7, 0.0},
         4e-4,
         TemperatureKind::Mode,
         "drum-shaped aluminum membrane, 20 um wide, 100 nm thick; minimum "
         "dimension ~ r_C, heating picture marginal at this scale"},
    };
}

namespace {

TemperatureKind parse_kind(const std::string& s, const std::string& entry) {
    if (s == "lattice") return TemperatureKind::Lattice;
    if (s == "spin") return TemperatureKind::Spin;
    if (s == "mode") return TemperatureKind::Mode;
    throw ParseError("entry '" + entry + "': unknown temperature_kind '" + s +
                     "' (expected lattice|spin|mode)");
}

std::variant<AnalyticCase, GeometryDescriptor> parse_geometry(
    const TableEntry& e) {
    const std::string& g = e.get("geometry");
    auto analytic = [&](AnalyticKind kind) {
        AnalyticCase c{kind, e.get_number("L_m"), e.get_number_or("Ts_K", 0.0)};
        c.validate();
        return std::variant<AnalyticCase, GeometryDescriptor>(c);
    };
    try {
        if (g == "cube-estimate") return analytic(AnalyticKind::CubeEstimate);
        if (g == "sphere") return analytic(AnalyticKind::Sphere);
        if (g == "cylinder") return analytic(AnalyticKind::InfiniteCylinder);
        if (g == "slab") return analytic(AnalyticKind::Slab);
        if (g == "box")
            return GeometryDescriptor::box(e.get_number("Lx_m"),
                                           e.get_number("Ly_m"),
                                           e.get_number("Lz_m"));
        if (g == "finite-cylinder")
            return GeometryDescriptor::finite_cylinder(e.get_number("radius_m"),
                                                       e.get_number("height_m"));
        if (g == "ellipsoid")
            return GeometryDescriptor::ellipsoid(e.get_number("a_m"),
                                                 e.get_number("b_m"),
                                                 e.get_number("c_m"));
    } catch (const std::domain_error& err) {
        throw ParseError("entry '" + e.name + "' (line " +
                         std::to_string(e.line) + "): " + err.what());
    } catch (const std::invalid_argument& err) {
        throw ParseError("entry '" + e.name + "' (line " +
                         std::to_string(e.line) + "): " + err.what());
    }
    throw ParseError("entry '" + e.name + "' (line " + std::to_string(e.line) +
                     "): unknown geometry '" + g + "'");
}

}  // namespace

std::vector<ExperimentRecord> load_experiments(std::istream& in) {
    std::vector<ExperimentRecord> records;
    for (const TableEntry& e : parse_tables(in)) {
        ExperimentRecord r;
        r.name = e.name;
        r.material_name = e.get("material");
        r.geometry = parse_geometry(e);
        r.measured_T = e.get_number("measured_T_K");
        if (!(r.measured_T > 0))
            throw ParseError("entry '" + e.name + "' (line " +
                             std::to_string(e.line) +
                             "): measured_T_K must be > 0");
        r.kind = e.has("temperature_kind")
                     ? parse_kind(e.get("temperature_kind"), e.name)
                     : TemperatureKind::Lattice;
        if (e.has("notes")) r.notes = e.get("notes");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<ExperimentRecord> load_experiments(const std::string& text) {
    std::istringstream in(text);
    return load_experiments(in);
}

BudgetReport radiogenic_budget(double background_w_per_kg,
                               const NoiseParams& params,
                               const PhysicalConstants& pc, double threshold) {
    if (background_w_per_kg < 0)
        throw std::domain_error("background heating must be >= 0");
    BudgetReport rep;
    rep.background = background_w_per_kg;
    rep.noise_heating = heating_per_mass(params, pc);
    rep.ratio = background_w_per_kg / rep.noise_heating;
    rep.threshold = threshold;
    rep.pass = rep.ratio < threshold;
    return rep;
}

}  // namespace collapseheat

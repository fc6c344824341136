#pragma once

#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "collapseheat/analytic.hpp"
#include "collapseheat/grid.hpp"
#include "collapseheat/materials.hpp"
#include "collapseheat/noise.hpp"

namespace collapseheat {

enum class TemperatureKind { Lattice, Spin, Mode };

/// A cryogenic cooling record to compare against the predicted minimum
/// interior temperature.
struct ExperimentRecord {
    std::string name;
    std::string material_name;
    std::variant<AnalyticCase, GeometryDescriptor> geometry;
    double measured_T = 0;  // K
    TemperatureKind kind = TemperatureKind::Lattice;
    std::string notes;
};

struct ExclusionResult {
    double predicted_Tc = 0;   // K, lower bound at T_s = 0
    double measured_T = 0;     // K
    double lambda_max = 0;     // 1/s, largest lambda compatible with the record
    double margin = 0;         // predicted / measured
    bool constrains = false;   // margin > 1 (and not gated)
    bool spin_gated = false;   // spin-temperature record excluded by default
    bool length_scale_warning = false;  // L is not >> r_C
};

struct EvaluateOptions {
    bool include_spin = false;  // lift the spin-temperature gate
    int resolution = 32;        // grid resolution for PDE geometries
    PhysicalConstants constants = PhysicalConstants::rounded();
};

/// Predict the T_s = 0 minimum interior temperature for the record's
/// geometry and invert the bound for the largest compatible lambda:
///   lambda_max = lambda * (measured_T / predicted_Tc)^(1+beta)
ExclusionResult evaluate(const ExperimentRecord& record,
                         const NoiseParams& params,
                         const MaterialRegistry& registry,
                         const EvaluateOptions& opts = {});

/// The three reference cooling records shipped with the tool.
std::vector<ExperimentRecord> bundled_records();

/// Parse an experiment records file (same flat table format as materials).
std::vector<ExperimentRecord> load_experiments(std::istream& in);
std::vector<ExperimentRecord> load_experiments(const std::string& text);

struct BudgetReport {
    double background = 0;  // W/kg
    double noise_heating = 0;  // W/kg
    double ratio = 0;
    double threshold = 0;
    bool pass = false;
};

/// Check a radiogenic / particle-penetration background against the
/// collapse-noise heating rate. Passes when ratio < threshold.
BudgetReport radiogenic_budget(double background_w_per_kg,
                               const NoiseParams& params,
                               const PhysicalConstants& pc = PhysicalConstants::rounded(),
                               double threshold = 0.1);

}  // namespace collapseheat

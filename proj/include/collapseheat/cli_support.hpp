#pragma once

#include <optional>
#include <string>
#include <vector>

namespace collapseheat {

/// Length with optional unit suffix: "0.5m", "50cm", "400um", "1e-3" (bare
/// numbers are meters). Throws std::invalid_argument on malformed input.
double parse_length(const std::string& text);

/// Rate in 1/s, accepting "1e-8" or the power form "10^-7.7".
double parse_rate(const std::string& text);

/// One sweep axis parsed from "param:start:stop:count:lin|log".
struct ScanAxis {
    std::string param;  // one of lambda, rc, L
    double start = 0;
    double stop = 0;
    int count = 0;
    bool log_spacing = false;

    std::vector<double> grid() const;
};

ScanAxis parse_scan_axis(const std::string& spec);

}  // namespace collapseheat

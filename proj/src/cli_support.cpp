#include "collapseheat/cli_support.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace collapseheat {

namespace {

double parse_number(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("could not parse " + what + ": '" + text +
                                    "'");
    }
}

}  // namespace

double parse_length(const std::string& text) {
    static const std::map<std::string, double> suffixes{
        {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}};
    size_t pos = 0;
    double value;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("could not parse length: '" + text + "'");
    }
    std::string suffix = text.substr(pos);
    if (suffix.empty()) return value;  // bare numbers are meters
    auto it = suffixes.find(suffix);
    if (it == suffixes.end())
        throw std::invalid_argument("unknown length unit '" + suffix +
                                    "' in '" + text + "' (use m|cm|mm|um|nm)");
    return value * it->second;
}

double parse_rate(const std::string& text) {
    if (text.rfind("10^", 0) == 0)
        return std::pow(10.0, parse_number(text.substr(3), "exponent"));
    return parse_number(text, "rate");
}

std::vector<double> ScanAxis::grid() const {
    if (count < 1) throw std::invalid_argument("scan count must be >= 1");
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    if (log_spacing) {
        if (!(start > 0 && stop > 0))
            throw std::invalid_argument(
                "log-spaced scan needs positive endpoints");
        double la = std::log10(start), lb = std::log10(stop);
        for (int i = 0; i < count; ++i)
            out.push_back(std::pow(10.0, la + (lb - la) * i / (count - 1)));
    } else {
        for (int i = 0; i < count; ++i)
            out.push_back(start + (stop - start) * i / (count - 1));
    }
    return out;
}

ScanAxis parse_scan_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 5)
        throw std::invalid_argument(
            "scan spec must be param:start:stop:count:lin|log, got '" + spec +
            "'");
    ScanAxis axis;
    axis.param = parts[0];
    if (axis.param != "lambda" && axis.param != "rc" && axis.param != "L")
        throw std::invalid_argument("scan parameter must be lambda, rc or L");
    auto parse_endpoint = [&](const std::string& s) {
        if (axis.param == "lambda") return parse_rate(s);
        if (axis.param == "L" || axis.param == "rc") return parse_length(s);
        return parse_number(s, "scan endpoint");
    };
    axis.start = parse_endpoint(parts[1]);
    axis.stop = parse_endpoint(parts[2]);
    axis.count = static_cast<int>(parse_number(parts[3], "scan count"));
    if (axis.count < 1) throw std::invalid_argument("scan count must be >= 1");
    if (parts[4] == "lin")
        axis.log_spacing = false;
    else if (parts[4] == "log")
        axis.log_spacing = true;
    else
        throw std::invalid_argument("scan spacing must be lin or log");
    if (axis.log_spacing && !(axis.start > 0 && axis.stop > 0))
        throw std::invalid_argument("log-spaced scan needs positive endpoints");
    return axis;
}

}  // namespace collapseheat

#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace collapseheat {

/// Material with power-law low-temperature conductivity k(T) = k0_hat * T^beta.
struct Material {
    std::string name;
    double rho;           // kg/m^3
    double k0_hat;        // W m^-1 K^-(1+beta)
    double beta;          // dimensionless, >= 0
    double valid_below;   // K, upper validity bound of the power law

    void validate() const;

    /// Kirchhoff variable u = T^(1+beta).
    double kirchhoff(double T) const;
    /// Inverse map T = u^(1/(1+beta)); negative u is clamped to 0.
    double temperature_from_kirchhoff(double u) const;
};

struct ConductivityValue {
    double w_per_m_k;
    bool within_validity;  // false when T exceeds the power-law fit range
};

/// k(T) = k0_hat * T^beta. Throws std::domain_error for T <= 0.
ConductivityValue conductivity(const Material& m, double T);

class MaterialRegistry {
public:
    /// Registry seeded with the two built-in reference materials.
    static MaterialRegistry with_builtins();

    void add(const Material& m, bool allow_override = false);
    const Material& get(std::string_view name) const;
    bool contains(std::string_view name) const;
    size_t size() const { return entries_.size(); }
    std::vector<std::string> names() const;

private:
    std::map<std::string, Material, std::less<>> entries_;
};

/// Built-ins plus entries parsed from a materials config file. Each entry:
///   [name]
///   rho_kg_m3 = ...
///   k0_hat_SI = ...
///   beta = ...
///   valid_below_K = ...
///   override = true     # required to replace a built-in
MaterialRegistry load_registry(std::istream& in);
MaterialRegistry load_registry(const std::string& text);

}  // namespace collapseheat

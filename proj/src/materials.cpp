#include "collapseheat/materials.hpp"

#include <cmath>
#include <sstream>

#include "collapseheat/table_file.hpp"

namespace collapseheat {

void Material::validate() const {
    if (name.empty()) throw std::invalid_argument("material name must be nonempty");
    auto bad = [&](const char* what) {
        throw std::invalid_argument("material '" + name + "': " + what);
    };
    if (!(rho > 0)) bad("rho must be > 0");
    if (!(k0_hat > 0)) bad("k0_hat must be > 0");
    if (!(beta >= 0)) bad("beta must be >= 0");
    if (!(valid_below > 0)) bad("valid_below must be > 0");
}

double Material::kirchhoff(double T) const {
    return std::pow(T, 1.0 + beta);
}

double Material::temperature_from_kirchhoff(double u) const {
    if (u <= 0) return 0.0;
    return std::pow(u, 1.0 / (1.0 + beta));
}

ConductivityValue conductivity(const Material& m, double T) {
    if (!(T > 0)) throw std::domain_error("conductivity requires T > 0");
    return {m.k0_hat * std::pow(T, m.beta), T <= m.valid_below};
}

MaterialRegistry MaterialRegistry::with_builtins() {
    MaterialRegistry r;
    // RRR=30 copper: linear-law metal, k(T) = 45 T W/(m K)
    r.add({"copper-rrr30", 9000.0, 45.0, 1.0, 10.0});
    // Torlon 4203: k(T) = 6.13e-3 T^2.18 W/(m K)
    r.add({"torlon-4203", 1420.0, 6.13e-3, 2.18, 5.0});
    return r;
}

void MaterialRegistry::add(const Material& m, bool allow_override) {
    m.validate();
    auto it = entries_.find(m.name);
    if (it != entries_.end()) {
        if (!allow_override)
            throw std::invalid_argument("material '" + m.name +
                                        "' already defined (set override = true "
                                        "to replace it)");
        it->second = m;
        return;
    }
    entries_.emplace(m.name, m);
}

const Material& MaterialRegistry::get(std::string_view name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw std::out_of_range("unknown material: " + std::string(name));
    return it->second;
}

bool MaterialRegistry::contains(std::string_view name) const {
    return entries_.find(name) != entries_.end();
}

std::vector<std::string> MaterialRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

MaterialRegistry load_registry(std::istream& in) {
    MaterialRegistry reg = MaterialRegistry::with_builtins();
    for (const TableEntry& e : parse_tables(in)) {
        Material m;
        m.name = e.name;
        m.rho = e.get_number("rho_kg_m3");
        m.k0_hat = e.get_number("k0_hat_SI");
        m.beta = e.get_number("beta");
        m.valid_below = e.get_number("valid_below_K");
        bool override_flag = e.get_flag_or("override", false);
        try {
            reg.add(m, override_flag);
        } catch (const std::invalid_argument& err) {
            throw ParseError("entry '" + e.name + "' (line " +
                             std::to_string(e.line) + "): " + err.what());
        }
    }
    return reg;
}

MaterialRegistry load_registry(const std::string& text) {
    std::istringstream in(text);
    return load_registry(in);
}

}  // namespace collapseheat

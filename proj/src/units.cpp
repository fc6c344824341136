#include "collapseheat/units.hpp"

#include <cmath>

namespace collapseheat {

PhysicalConstants PhysicalConstants::rounded() {
    PhysicalConstants pc;
    pc.hbar = 1.1e-34;
    pc.mev_per_joule = 6.2e12;
    pc.c = 3.0e8;
    // nucleon mass of 940 MeV/c^2 expressed in kg with the rounded factors
    pc.m_n = 940.0 / pc.mev_per_joule / (pc.c * pc.c);
    return pc;
}

PhysicalConstants PhysicalConstants::precise() {
    PhysicalConstants pc;
    pc.hbar = 1.054571817e-34;
    pc.mev_per_joule = 6.241509074e12;
    pc.c = 2.99792458e8;
    pc.m_n = 1.67377e-27;  // average nucleon mass
    return pc;
}

void PhysicalConstants::validate() const {
    if (!(hbar > 0 && m_n > 0 && mev_per_joule > 0 && c > 0))
        throw std::invalid_argument("physical constants must be strictly positive");
}

UnitSystem::UnitSystem(const PhysicalConstants& pc) {
    pc.validate();
    const Dimension mass{1, 0, 0, 0};
    const Dimension length{0, 1, 0, 0};
    const Dimension time{0, 0, 1, 0};
    const Dimension temp{0, 0, 0, 1};
    const Dimension energy{1, 2, -2, 0};
    const Dimension power{1, 2, -3, 0};
    const Dimension density{1, -3, 0, 0};

    const double joule_per_mev = 1.0 / pc.mev_per_joule;

    units_ = {
        {"kg", {1.0, mass}},
        {"g", {1e-3, mass}},
        {"MeV/c2", {joule_per_mev / (pc.c * pc.c), mass}},
        {"m", {1.0, length}},
        {"cm", {1e-2, length}},
        {"mm", {1e-3, length}},
        {"um", {1e-6, length}},
        {"nm", {1e-9, length}},
        {"s", {1.0, time}},
        {"1/s", {1.0, Dimension{0, 0, -1, 0}}},
        {"K", {1.0, temp}},
        {"J", {1.0, energy}},
        {"MeV", {joule_per_mev, energy}},
        {"W", {1.0, power}},
        {"MeV/s", {joule_per_mev, energy / time}},
        {"W/m3", {1.0, power / Dimension{0, 3, 0, 0}}},
        {"W/kg", {1.0, power / mass}},
        {"MeV/(g s)", {joule_per_mev / 1e-3, power / mass}},
        {"kg/m3", {1.0, density}},
        {"g/cm3", {1e3, density}},
        {"MeV/c2/cm3", {joule_per_mev / (pc.c * pc.c) / 1e-6, density}},
        {"W/(m K)", {1.0, power / length / temp}},
    };
}

const UnitSystem::Unit& UnitSystem::lookup(std::string_view unit) const {
    auto it = units_.find(unit);
    if (it == units_.end())
        throw UnknownUnitError("unknown unit tag: " + std::string(unit));
    return it->second;
}

double UnitSystem::convert(double value, std::string_view from,
                           std::string_view to) const {
    const Unit& uf = lookup(from);
    const Unit& ut = lookup(to);
    if (!(uf.dim == ut.dim))
        throw DimensionError("incompatible dimensions: " + std::string(from) +
                             " -> " + std::string(to));
    return value * (uf.to_si / ut.to_si);
}

Dimension UnitSystem::dimension_of(std::string_view unit) const {
    return lookup(unit).dim;
}

double UnitSystem::to_si_factor(std::string_view unit) const {
    return lookup(unit).to_si;
}

}  // namespace collapseheat

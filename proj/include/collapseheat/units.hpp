#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace collapseheat {

/// Physical constants in SI. The rounded set reproduces the reference
/// regression numbers; the precise set is for production estimates.
struct PhysicalConstants {
    double hbar;           // J s
    double m_n;            // kg, nucleon mass
    double mev_per_joule;  // MeV per Joule
    double c;              // m/s

    static PhysicalConstants rounded();
    static PhysicalConstants precise();

    void validate() const;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownUnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension exponents over (mass, length, time, temperature).
struct Dimension {
    int mass = 0;
    int length = 0;
    int time = 0;
    int temperature = 0;

    friend bool operator==(const Dimension&, const Dimension&) = default;

    Dimension operator*(const Dimension& o) const {
        return {mass + o.mass, length + o.length, time + o.time,
                temperature + o.temperature};
    }
    Dimension operator/(const Dimension& o) const {
        return {mass - o.mass, length - o.length, time - o.time,
                temperature - o.temperature};
    }
};

/// Named-unit conversion table. Everything internal is SI; unit tags are
/// only touched at input/output boundaries. MeV-based units depend on the
/// Joule<->MeV factor of the constant set, so the table is built per set.
class UnitSystem {
public:
    explicit UnitSystem(const PhysicalConstants& pc = PhysicalConstants::rounded());

    /// Convert a value between two dimensionally compatible unit tags.
    double convert(double value, std::string_view from, std::string_view to) const;

    Dimension dimension_of(std::string_view unit) const;
    double to_si_factor(std::string_view unit) const;

private:
    struct Unit {
        double to_si;
        Dimension dim;
    };
    const Unit& lookup(std::string_view unit) const;

    std::map<std::string, Unit, std::less<>> units_;
};

}  // namespace collapseheat

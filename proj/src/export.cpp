#include "collapseheat/export.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace collapseheat {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

void write_profile_csv(std::ostream& os, const ProfileResult& profile) {
    os << "position_m,T_K\n";
    for (size_t i = 0; i < profile.positions.size(); ++i)
        os << fmt9(profile.positions[i]) << ',' << fmt9(profile.temperatures[i])
           << '\n';
}

void write_field_csv(std::ostream& os, const TemperatureField& field) {
    os << "x_m,y_m,z_m,T_K\n";
    const GridDomain& d = field.domain();
    for (int u = 0; u < d.num_interior(); ++u) {
        auto p = d.position_of(u);
        os << fmt9(p[0]) << ',' << fmt9(p[1]) << ',' << fmt9(p[2]) << ','
           << fmt9(field.temperature(u)) << '\n';
    }
}

void write_field_sidecar(std::ostream& os, const TemperatureField& field,
                         const NoiseParams& params, int resolution) {
    const Material& m = field.material();
    nlohmann::json j{
        {"geometry", field.domain().descriptor().describe()},
        {"material",
         {{"name", m.name},
          {"rho_kg_m3", m.rho},
          {"k0_hat_SI", m.k0_hat},
          {"beta", m.beta}}},
        {"noise", {{"lambda_per_s", params.lambda}, {"r_c_m", params.r_c}}},
        {"surface_T_K", field.surface_temperature()},
        {"resolution", resolution},
        {"spacing_m", field.domain().spacing()},
        {"interior_nodes", field.domain().num_interior()},
        {"iterations", field.stats().iterations},
        {"residual", field.stats().residual},
        {"T_c_K", field.central_temperature()},
    };
    os << j.dump(2) << '\n';
}

}  // namespace collapseheat

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "collapseheat/noise.hpp"
#include "collapseheat/units.hpp"

using namespace collapseheat;

namespace {
const NoiseParams kDefaults{};  // lambda = 1e-8 1/s, r_C = 1e-7 m
}

TEST_CASE("heating per mass reproduces 20 MeV/(g s)") {
    UnitSystem u;
    double w_per_kg = heating_per_mass(kDefaults);
    CHECK(w_per_kg == doctest::Approx(3.1978590991398824e-9).epsilon(1e-13));
    double mev_per_g_s = u.convert(w_per_kg, "W/kg", "MeV/(g s)");
    CHECK(mev_per_g_s == doctest::Approx(20.0).epsilon(0.05));
}

TEST_CASE("total power") {
    // oracle: 20 MeV/(g s) for one gram, converted to watts
    UnitSystem u;
    double oracle = u.convert(20.0, "MeV/(g s)", "W/kg") * 1e-3;
    CHECK(total_power(kDefaults, 1e-3) == doctest::Approx(oracle).epsilon(0.02));
    CHECK(total_power(NoiseParams{0.0, 1e-7}, 1.0) == 0.0);
    CHECK(total_power(kDefaults, 0.0) == 0.0);
    CHECK_THROWS_AS(total_power(kDefaults, -1.0), std::domain_error);
}

TEST_CASE("volumetric heating for the reference densities") {
    // cross-check against 20 MeV/(g s) x rho
    UnitSystem u;
    double per_mass_oracle = u.convert(20.0, "MeV/(g s)", "W/kg");
    CHECK(volumetric_heating(kDefaults, 9000.0) ==
          doctest::Approx(per_mass_oracle * 9000).epsilon(0.02));
    CHECK(volumetric_heating(kDefaults, 1420.0) ==
          doctest::Approx(per_mass_oracle * 1420).epsilon(0.02));
    CHECK_THROWS_AS(volumetric_heating(kDefaults, 0.0), std::domain_error);
    CHECK_THROWS_AS(volumetric_heating(kDefaults, -5.0), std::domain_error);
}

TEST_CASE("exact factorizations and scalings") {
    const double rho = 1234.5, volume = 0.37;
    CHECK(volumetric_heating(kDefaults, rho) ==
          heating_per_mass(kDefaults) * rho);
    CHECK(total_power(kDefaults, rho * volume) ==
          doctest::Approx(volumetric_heating(kDefaults, rho) * volume)
              .epsilon(1e-15));

    NoiseParams doubled = kDefaults;
    doubled.lambda *= 2;
    CHECK(volumetric_heating(doubled, rho) ==
          doctest::Approx(2 * volumetric_heating(kDefaults, rho))
              .epsilon(1e-15));

    NoiseParams halved_rc = kDefaults;
    halved_rc.r_c /= 2;
    CHECK(volumetric_heating(halved_rc, rho) ==
          doctest::Approx(4 * volumetric_heating(kDefaults, rho))
              .epsilon(1e-15));

    NoiseParams vin = kDefaults;  // lambda = 10^-7.7
    vin.lambda = std::pow(10.0, -7.7);
    CHECK(heating_per_mass(vin) ==
          doctest::Approx(std::pow(10.0, 0.3) * heating_per_mass(kDefaults))
              .epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(heating_per_mass(NoiseParams{-1e-8, 1e-7}),
                    std::domain_error);
    CHECK_THROWS_AS(heating_per_mass(NoiseParams{1e-8, 0.0}),
                    std::domain_error);
}

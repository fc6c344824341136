#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "collapseheat/cli_support.hpp"

using namespace collapseheat;

TEST_CASE("length parsing") {
    CHECK(parse_length("0.5m") == doctest::Approx(0.5));
    CHECK(parse_length("50cm") == doctest::Approx(0.5));
    CHECK(parse_length("400um") == doctest::Approx(4e-4));
    CHECK(parse_length("0.4mm") == doctest::Approx(4e-4));
    CHECK(parse_length("100nm") == doctest::Approx(1e-7));
    CHECK(parse_length("1e-3") == doctest::Approx(1e-3));  // bare is meters
    CHECK(parse_length("2") == doctest::Approx(2.0));

    CHECK_THROWS_AS(parse_length(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_length("5furlong"), std::invalid_argument);
    CHECK_THROWS_AS(parse_length("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_length("1.2.3m"), std::invalid_argument);
}

TEST_CASE("rate parsing") {
    CHECK(parse_rate("1e-8") == doctest::Approx(1e-8));
    CHECK(parse_rate("10^-7.7") ==
          doctest::Approx(std::pow(10.0, -7.7)).epsilon(1e-14));
    CHECK(parse_rate("10^-8") == doctest::Approx(1e-8).epsilon(1e-14));
    CHECK(parse_rate("3.5e-9") == doctest::Approx(3.5e-9));

    CHECK_THROWS_AS(parse_rate(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rate("10^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rate("fast"), std::invalid_argument);
}

TEST_CASE("scan axis parsing") {
    auto ax = parse_scan_axis("lambda:1e-9:1e-7:5:log");
    CHECK(ax.param == "lambda");
    CHECK(ax.count == 5);
    CHECK(ax.log_spacing);
    auto pts = ax.grid();
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == doctest::Approx(1e-9));
    CHECK(pts.back() == doctest::Approx(1e-7));
    CHECK(pts[1] / pts[0] == doctest::Approx(pts[2] / pts[1]).epsilon(1e-12));

    auto lin = parse_scan_axis("L:0:1:3:lin");
    auto lpts = lin.grid();
    REQUIRE(lpts.size() == 3);
    CHECK(lpts[0] == 0.0);
    CHECK(lpts[1] == doctest::Approx(0.5));
    CHECK(lpts[2] == doctest::Approx(1.0));

    auto single = parse_scan_axis("rc:1e-7:1e-7:1:lin");
    auto spts = single.grid();
    REQUIRE(spts.size() == 1);
    CHECK(spts[0] == doctest::Approx(1e-7));
}

TEST_CASE("scan axis errors") {
    CHECK_THROWS_AS(parse_scan_axis(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_axis("lambda:1:2:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_axis("lambda:1:2:3:spiral"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_axis("mass:1:2:3:lin"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_axis("lambda:1:2:0:lin"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_axis("lambda:1:2:-4:lin"),
                    std::invalid_argument);
    // log spacing needs positive endpoints
    CHECK_THROWS_AS(parse_scan_axis("L:0:1:3:log"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scan_axis("L:-1:1:3:log"), std::invalid_argument);
}

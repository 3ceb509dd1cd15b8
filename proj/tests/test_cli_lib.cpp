#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "angle_literal.hpp"
#include "commands.hpp"
#include "csv_io.hpp"
#include "doctest.h"
#include "qpulse/sweep.hpp"
#include "test_support.hpp"
#include "validation.hpp"

using namespace qpulse;
using namespace qpulse::cli;

namespace {

double reparse(const std::string& text) {
    double out = 0.0;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, out);
    REQUIRE(ec == std::errc());
    REQUIRE(ptr == last);
    return out;
}

// theta x omega0 plane whose transcribed-table evolution leaves some cells
// physical and some not, so both CSV row shapes appear.
SweepGrid mixed_status_grid() {
    SweepPlane plane;
    plane.x = {SweepParameter::Theta, 0.0, kPi, 12};
    plane.y = {SweepParameter::Omega0, 0.8, 1.0, 12};
    plane.fixed = {0.0, kPi, 1.0, 0.2, 1.0};
    return run_sweep(plane, PropagatorMode::PaperLiteral,
                     {Observable::QfiTheta, Observable::QfiPhi, Observable::EncodedInfo},
                     1);
}

}  // namespace

TEST_CASE("pi literals parse to the exact multiples of pi") {
    CHECK(parse_angle("pi") == kPi);
    CHECK(parse_angle("2pi") == kTwoPi);
    CHECK(parse_angle("pi/2") == kPi / 2.0);
    CHECK(parse_angle("3pi/4") == 3.0 * kPi / 4.0);
    CHECK(parse_angle("-pi/2") == -kPi / 2.0);
    CHECK(parse_angle("0.5pi") == 0.5 * kPi);
}

TEST_CASE("plain numbers parse as-is") {
    CHECK(parse_angle("0") == 0.0);
    CHECK(parse_angle("0.75") == 0.75);
    CHECK(parse_angle("1e-3") == 1e-3);
    CHECK(parse_angle("-2.5") == -2.5);
    CHECK(parse_angle("3.1415926") == 3.1415926);
}

TEST_CASE("malformed angles are rejected") {
    for (const char* bad : {"", "pie", "pi/0", "two pi", "1.5.2", "pi/", "/pi",
                            "pi2", "x", "0x10"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_angle(bad), std::invalid_argument);
    }
}

TEST_CASE("format_double emits the shortest round-tripping decimal") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-2.5) == "-2.5");

    test::Rng rng(7101);
    for (int i = 0; i < 1000; ++i) {
        const double scale = std::pow(10.0, rng.uniform(-12.0, 12.0));
        const double v = rng.uniform(-1.0, 1.0) * scale;
        CHECK(reparse(format_double(v)) == v);
    }
    CHECK(reparse(format_double(1e300)) == 1e300);
    CHECK(reparse(format_double(-2.5e-7)) == -2.5e-7);
    CHECK(reparse(format_double(kPi)) == kPi);
}

TEST_CASE("CSV writer and parser round-trip a mixed-status grid") {
    const SweepGrid grid = mixed_status_grid();
    REQUIRE(grid.nonphysical_count > 0);
    REQUIRE(grid.nonphysical_count < static_cast<int>(grid.cells.size()));

    std::ostringstream first;
    write_sweep_csv(first, grid);
    std::istringstream in(first.str());
    const std::vector<CsvRow> rows = parse_sweep_csv(in);

    REQUIRE(rows.size() == grid.cells.size() * grid.observables.size());

    std::size_t r = 0;
    for (int iy = 0; iy < grid.plane.y.count; ++iy) {
        for (int ix = 0; ix < grid.plane.x.count; ++ix) {
            const CellResult& cell = grid.at(ix, iy);
            for (const Observable o : grid.observables) {
                const CsvRow& row = rows[r++];
                CHECK(row.x_name == "theta");
                CHECK(row.y_name == "omega0");
                // bitwise: the text was produced by format_double
                CHECK(row.x == axis_node(grid.plane.x, ix));
                CHECK(row.y == axis_node(grid.plane.y, iy));
                CHECK(row.observable == to_string(o));
                CHECK(row.s_norm == cell.s_norm);
                if (cell.status == CellStatus::Ok) {
                    CHECK(row.status == "ok");
                    REQUIRE(row.value.has_value());
                    CHECK(*row.value == *cell.get(o));
                } else {
                    CHECK(row.status == "nonphysical");
                    CHECK(!row.value.has_value());
                }
            }
        }
    }

    // serialize -> parse -> serialize is the identity on bytes
    std::ostringstream second;
    write_sweep_csv(second, grid);
    CHECK(first.str() == second.str());
}

TEST_CASE("CSV parser rejects malformed input") {
    SUBCASE("wrong header") {
        std::istringstream in("a,b,c\n");
        CHECK_THROWS_AS(parse_sweep_csv(in), std::runtime_error);
    }
    SUBCASE("wrong field count") {
        std::istringstream in(std::string(kCsvHeader) + "\ntheta,omega0,1,2,qfi_theta,3,1\n");
        CHECK_THROWS_AS(parse_sweep_csv(in), std::runtime_error);
    }
    SUBCASE("unparseable number") {
        std::istringstream in(std::string(kCsvHeader) +
                              "\ntheta,omega0,abc,2,qfi_theta,3,1,ok\n");
        CHECK_THROWS_AS(parse_sweep_csv(in), std::runtime_error);
    }
    SUBCASE("unknown status") {
        std::istringstream in(std::string(kCsvHeader) +
                              "\ntheta,omega0,1,2,qfi_theta,3,1,maybe\n");
        CHECK_THROWS_AS(parse_sweep_csv(in), std::runtime_error);
    }
    SUBCASE("value present on a nonphysical row") {
        std::istringstream in(std::string(kCsvHeader) +
                              "\ntheta,omega0,1,2,qfi_theta,3,1.2,nonphysical\n");
        CHECK_THROWS_AS(parse_sweep_csv(in), std::runtime_error);
    }
    SUBCASE("value missing on an ok row") {
        std::istringstream in(std::string(kCsvHeader) +
                              "\ntheta,omega0,1,2,qfi_theta,,1,ok\n");
        CHECK_THROWS_AS(parse_sweep_csv(in), std::runtime_error);
    }
}

TEST_CASE("sweep metadata records every knob that shaped the grid") {
    const SweepGrid grid = mixed_status_grid();
    const nlohmann::json meta = sweep_metadata(grid, "fig1", {"assumption one"});

    for (const char* key :
         {"figure", "mode", "time", "log_base", "x_axis", "y_axis", "fixed",
          "resolution", "observables", "nonphysical_cells", "epsilon_pure",
          "epsilon_phys", "tool_version", "assumptions"}) {
        CAPTURE(key);
        CHECK(meta.contains(key));
    }
    CHECK(meta["figure"] == "fig1");
    CHECK(meta["mode"] == "paper");
    CHECK(meta["time"] == 1.0);
    CHECK(meta["x_axis"]["name"] == "theta");
    CHECK(meta["x_axis"]["lo"] == 0.0);
    CHECK(meta["x_axis"]["hi"] == kPi);
    CHECK(meta["x_axis"]["n"] == 12);
    CHECK(meta["y_axis"]["name"] == "omega0");
    CHECK(meta["resolution"] == nlohmann::json({12, 12}));
    CHECK(meta["nonphysical_cells"] == grid.nonphysical_count);
    // fixed covers exactly the parameters not bound to an axis
    CHECK(meta["fixed"].size() == 2);
    CHECK(meta["fixed"]["phi"] == kPi);
    CHECK(meta["fixed"]["delta"] == 0.2);
    CHECK(meta["observables"] ==
          nlohmann::json({"qfi_theta", "qfi_phi", "i_cod"}));
    CHECK(meta["assumptions"] == nlohmann::json({"assumption one"}));
}

TEST_CASE("metadata sidecar path replaces the .csv suffix") {
    CHECK(meta_path_for("out.csv") == "out.meta.json");
    CHECK(meta_path_for("dir/plane.csv") == "dir/plane.meta.json");
    CHECK(meta_path_for("noext") == "noext.meta.json");
}

TEST_CASE("axis specs parse name, bounds and count") {
    const AxisSpec a = parse_axis_spec("theta:0:pi:50");
    CHECK(a.param == SweepParameter::Theta);
    CHECK(a.lo == 0.0);
    CHECK(a.hi == kPi);
    CHECK(a.count == 50);

    const AxisSpec b = parse_axis_spec("omega0:0.005:1:200");
    CHECK(b.param == SweepParameter::Omega0);
    CHECK(b.lo == 0.005);
    CHECK(b.hi == 1.0);
    CHECK(b.count == 200);

    const AxisSpec c = parse_axis_spec("phi:pi/2:2pi:10");
    CHECK(c.param == SweepParameter::Phi);
    CHECK(c.lo == kPi / 2.0);
    CHECK(c.hi == kTwoPi);

    for (const char* bad : {"theta:0:pi", "bogus:0:1:5", "theta:0:pi:x",
                            "theta:0:pi:4.5", "theta:0:pi:50:extra", ""}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_axis_spec(bad), std::invalid_argument);
    }
}

TEST_CASE("flag spellings map onto the enums") {
    CHECK(observable_from_flag("qfi-theta") == Observable::QfiTheta);
    CHECK(observable_from_flag("qfi-phi") == Observable::QfiPhi);
    CHECK(observable_from_flag("icod") == Observable::EncodedInfo);
    CHECK_THROWS_AS(observable_from_flag("entropy"), std::invalid_argument);

    CHECK(mode_from_flag("exact") == PropagatorMode::Exact);
    CHECK(mode_from_flag("paper") == PropagatorMode::PaperLiteral);
    CHECK_THROWS_AS(mode_from_flag("both"), std::invalid_argument);
}

TEST_CASE("validation suite passes with the real propagator") {
    std::ostringstream out;
    CHECK(run_validation(out));
    CHECK(out.str().find("result: all hard checks passed") != std::string::npos);
    CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("validation output is a pure function of the seed") {
    ValidationOptions opts;
    opts.seed = 42;
    std::ostringstream a, b;
    CHECK(run_validation(a, opts));
    CHECK(run_validation(b, opts));
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());

    ValidationOptions other;
    other.seed = 43;
    std::ostringstream c;
    CHECK(run_validation(c, other));
    CHECK(c.str() != a.str());  // the sampled points differ
}

TEST_CASE("validation catches a corrupted closed-form propagator") {
    ValidationOptions opts;
    opts.exact_propagator = [](const PulseConfig& cfg, double t) {
        Propagator p = propagator_exact(cfg, t);
        p.a(0, 0) += 1e-6;  // tiny break of orthogonality
        return p;
    };
    std::ostringstream out;
    CHECK_FALSE(run_validation(out, opts));
    CHECK(out.str().find("[ FAIL ]") != std::string::npos);
    CHECK(out.str().find("result: HARD CHECK FAILURES") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bathnet/self_energy.hpp"
#include "bathnet/sweep.hpp"

using namespace bathnet;

namespace {

bool specs_value_equal(const NetworkSpec& a, const NetworkSpec& b) {
    if (a.labels != b.labels || a.system_index != b.system_index) return false;
    if (a.omega_ghz != b.omega_ghz || a.gamma != b.gamma) return false;
    if (a.couplings.size() != b.couplings.size()) return false;
    for (std::size_t i = 0; i < a.couplings.size(); ++i) {
        if (a.couplings[i].a != b.couplings[i].a) return false;
        if (a.couplings[i].b != b.couplings[i].b) return false;
        if (a.couplings[i].j_ghz != b.couplings[i].j_ghz) return false;
    }
    return true;
}

} // namespace

TEST_CASE("C1 parameters") {
    const Preset p = preset("C1");
    CHECK(p.spec.omega_ghz == std::vector<double>{6.0, 6.5, 6.7, 7.0, 7.2, 7.4});
    CHECK(p.spec.coupling_value("S", "B1") == 0.05);
    CHECK(p.spec.coupling_value("S", "B2") == 0.05);
    CHECK(p.spec.coupling_value("B1", "B2") == 0.03);
    for (auto [a, b] : {std::pair{"B1", "B3"}, {"B1", "B4"}, {"B2", "B4"}, {"B2", "B5"}})
        CHECK(p.spec.coupling_value(a, b) == 0.03);
    for (auto [a, b] : {std::pair{"B3", "B4"}, {"B4", "B5"}, {"B3", "B5"}})
        CHECK(p.spec.coupling_value(a, b) == 0.03);
    CHECK(p.pump.g == 0.0);
    CHECK(p.output_node == "B3");
    for (std::size_t i = 1; i < p.spec.gamma.size(); ++i) CHECK(p.spec.gamma[i] == 1e-3);
}

TEST_CASE("C6 parameters") {
    const Preset p = preset("C6");
    CHECK(p.spec.omega_ghz == std::vector<double>{6.0, 6.49, 6.71, 7.015, 7.20, 7.40});
    CHECK(p.spec.coupling_value("S", "B1") == 0.32);
    CHECK(p.spec.coupling_value("S", "B2") == 0.16);
    CHECK(p.pump.g == 0.30);
}

TEST_CASE("FIG3 parameters") {
    const Preset p = preset("FIG3");
    CHECK(p.spec.coupling_value("B1", "B2") == 0.4);
    CHECK(p.spec.coupling_value("S", "B1") == 0.30);
    CHECK(p.spec.coupling_value("S", "B2") == 0.26);
    for (auto [a, b] : {std::pair{"B1", "B3"}, {"B1", "B4"}, {"B2", "B4"}, {"B2", "B5"}})
        CHECK(p.spec.coupling_value(a, b) == 0.45);
    for (auto [a, b] : {std::pair{"B3", "B4"}, {"B4", "B5"}, {"B3", "B5"}})
        CHECK(p.spec.coupling_value(a, b) == 0.15);
    CHECK(p.spec.gamma == std::vector<double>{0.0, 1e-3, 1e-3, 2e-2, 2e-2, 2e-2});
    CHECK(p.pump.g == 0.2);
    CHECK(p.pump.edge_a == "B3");
    CHECK(p.pump.edge_b == "B4");
}

TEST_CASE("FIG2 aliases the structured passive configuration") {
    const Preset fig2 = preset("FIG2");
    const Preset c3 = preset("C3");
    CHECK(fig2.name == "FIG2");
    CHECK(specs_value_equal(fig2.spec, c3.spec));
}

TEST_CASE("unknown preset names are rejected") {
    CHECK_THROWS_AS(preset("C10"), std::invalid_argument);
    CHECK_THROWS_AS(preset(""), std::invalid_argument);
}

TEST_CASE("every preset validates cleanly") {
    for (const auto& name : preset_names())
        CHECK(validate(preset(name).spec).empty());
}

TEST_CASE("zero-amplitude pump leaves the spec value-equal") {
    const Preset p = preset("FIG3");
    PumpSpec pump = p.pump;
    pump.p = 0.0;
    CHECK(specs_value_equal(apply_pump(p.spec, pump), p.spec));
}

TEST_CASE("pump dresses the target coupling linearly") {
    const Preset p = preset("FIG3");
    PumpSpec pump = p.pump;
    pump.p = 3.0;
    const NetworkSpec dressed = apply_pump(p.spec, pump);
    CHECK(dressed.coupling_value("B3", "B4") == doctest::Approx(0.75).epsilon(1e-15));
    // everything else untouched
    CHECK(dressed.coupling_value("B3", "B5") == 0.15);
    CHECK(dressed.coupling_value("S", "B1") == 0.30);
    // input unmodified
    CHECK(p.spec.coupling_value("B3", "B4") == 0.15);
}

TEST_CASE("pump applies the driven-node shift") {
    const Preset p = preset("C1");
    PumpSpec pump = p.pump;
    pump.delta_omega = 0.015;
    pump.p = 2.0;
    const NetworkSpec dressed = apply_pump(p.spec, pump);
    CHECK(dressed.omega_ghz[3] == doctest::Approx(7.015).epsilon(1e-15));  // B3
}

TEST_CASE("invalid pumps are rejected") {
    const Preset p = preset("C1");
    PumpSpec negative = p.pump;
    negative.p = -1.0;
    CHECK_THROWS_AS(apply_pump(p.spec, negative), std::invalid_argument);

    PumpSpec missing = p.pump;
    missing.edge_a = "B1";
    missing.edge_b = "B5";
    CHECK_THROWS_AS(apply_pump(p.spec, missing), std::invalid_argument);
}

TEST_CASE("dressed coupling is strictly increasing in the pump amplitude") {
    const Preset p = preset("FIG3");
    double prev = -1e9;
    for (double amplitude : linspace(0.0, 6.0, 31)) {
        PumpSpec pump = p.pump;
        pump.p = amplitude;
        const double j = apply_pump(p.spec, pump).coupling_value("B3", "B4");
        CHECK(j > prev);
        prev = j;
    }
}

TEST_CASE("axis names round-trip") {
    for (const char* name : {"J_L1L2-scale", "J_L2-scale", "J_SB-scale", "gamma1",
                             "gamma2", "pump-P"})
        CHECK(SweepAxis::from_name(name, {1.0}).name() == name);
    const SweepAxis edge = SweepAxis::from_name("edge:B3-B4", {0.1});
    CHECK(edge.parameter == SweepParameter::Edge);
    CHECK(edge.edge_a == "B3");
    CHECK(edge.edge_b == "B4");
    CHECK(edge.name() == "edge:B3-B4");
    CHECK_THROWS_AS(SweepAxis::from_name("bogus", {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SweepAxis::from_name("edge:B3", {1.0}), std::invalid_argument);
}

TEST_CASE("default grid shape") {
    const auto grid = default_omega_grid();
    REQUIRE(grid.size() == 601);
    CHECK(grid.front() == 5.8);
    CHECK(grid.back() == 7.6);
    CHECK(std::abs(grid[300] - 6.7) < 1e-12);
}

TEST_CASE("degenerate one-by-one sweep equals a direct gain evaluation") {
    const Preset p = preset("C2");
    SweepAxis axis;
    axis.parameter = SweepParameter::PumpP;
    axis.values = {0.0};
    const std::vector<double> grid{6.6};
    const SweepResult r = run_sweep(p, axis, grid);
    REQUIRE(r.grid.size() == 1);
    REQUIRE(r.grid[0].size() == 1);
    CHECK(r.grid[0][0] == gain(p.spec, 6.6, "B3"));
    CHECK(r.ridge[0] == 6.6);
}

TEST_CASE("sweeps are deterministic and schedule-independent") {
    const Preset p = preset("C3");
    const SweepAxis axis = SweepAxis::from_name("J_L1L2-scale", linspace(0.5, 2.0, 9));
    const auto grid = linspace(5.8, 7.6, 41);

    const SweepResult serial = run_sweep(p, axis, grid, 1);
    const SweepResult again = run_sweep(p, axis, grid, 1);
    const SweepResult parallel = run_sweep(p, axis, grid, 4);

    CHECK(serial.grid == again.grid);
    CHECK(serial.grid == parallel.grid);
    CHECK(serial.ridge == parallel.ridge);
}

TEST_CASE("ridge cells attain their row maxima on the grid") {
    const Preset p = preset("C4");
    const SweepAxis axis = SweepAxis::from_name("pump-P", linspace(0.0, 6.0, 7));
    const auto grid = linspace(5.8, 7.6, 101);
    const SweepResult r = run_sweep(p, axis, grid);
    for (std::size_t k = 0; k < r.grid.size(); ++k) {
        double best = -1.0;
        for (double g : r.grid[k]) best = std::max(best, g);
        bool on_grid = false;
        for (std::size_t m = 0; m < grid.size(); ++m) {
            if (grid[m] == r.ridge[k]) {
                on_grid = true;
                CHECK(r.grid[k][m] == best);
            }
        }
        CHECK(on_grid);
    }
}

TEST_CASE("gamma axes rewrite the layer losses") {
    const Preset p = preset("C1");
    SweepAxis axis = SweepAxis::from_name("gamma2", {5e-3});
    const std::vector<double> grid{6.6, 7.0};
    const SweepResult r = run_sweep(p, axis, grid);

    NetworkSpec manual = p.spec;
    for (auto node : {"B3", "B4", "B5"}) manual.gamma[*manual.index_of(node)] = 5e-3;
    const auto expect = evaluate_gain_row(manual, grid, "B3");
    CHECK(r.grid[0] == expect);

    axis = SweepAxis::from_name("gamma1", {2e-3});
    const SweepResult r1 = run_sweep(p, axis, grid);
    NetworkSpec manual1 = p.spec;
    for (auto node : {"B1", "B2"}) manual1.gamma[*manual1.index_of(node)] = 2e-3;
    CHECK(r1.grid[0] == evaluate_gain_row(manual1, grid, "B3"));
}

TEST_CASE("edge axis rewrites exactly one coupling") {
    const Preset p = preset("C1");
    const SweepAxis axis = SweepAxis::from_name("edge:B1-B2", {0.4});
    const std::vector<double> grid{6.5};
    const SweepResult r = run_sweep(p, axis, grid);

    NetworkSpec manual = p.spec;
    for (auto& c : manual.couplings)
        if ((c.a == "B1" && c.b == "B2") || (c.a == "B2" && c.b == "B1")) c.j_ghz = 0.4;
    CHECK(r.grid[0] == evaluate_gain_row(manual, grid, "B3"));
}

TEST_CASE("scale axes multiply their coupling group uniformly") {
    const Preset p = preset("C3");
    const SweepAxis axis = SweepAxis::from_name("J_SB-scale", {2.0});
    const std::vector<double> grid{6.4};
    const SweepResult r = run_sweep(p, axis, grid);

    NetworkSpec manual = p.spec;
    for (auto& c : manual.couplings)
        if (c.a == "S" || c.b == "S") c.j_ghz *= 2.0;
    CHECK(r.grid[0] == evaluate_gain_row(manual, grid, "B3"));
}

TEST_CASE("inert pumps match sweeps without any pump") {
    Preset with_pump = preset("C4");  // pump gain 0.20
    Preset without = with_pump;
    without.pump = PumpSpec{};
    without.pump.g = 0.0;

    const SweepAxis axis = SweepAxis::from_name("J_L1L2-scale", linspace(0.5, 2.0, 7));
    const auto grid = linspace(6.0, 7.4, 51);
    const SweepResult a = run_sweep(with_pump, axis, grid);
    const SweepResult b = run_sweep(without, axis, grid);
    CHECK(a.grid == b.grid);
}

TEST_CASE("ridge extraction tie-breaks toward the lowest frequency") {
    const std::vector<double> grid{6.0, 6.5, 7.0};
    const std::vector<double> flat{1.0, 1.0, 1.0};
    CHECK(extract_ridge(flat, grid) == 6.0);

    const std::vector<double> peaked{0.1, 2.0, 0.3};
    CHECK(extract_ridge(peaked, grid) == 6.5);
}

TEST_CASE("ridge extraction skips flagged cells and rejects empty rows") {
    const std::vector<double> grid{6.0, 6.5, 7.0};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(extract_ridge(std::vector<double>{nan, 0.5, nan}, grid) == 6.5);
    CHECK_THROWS_AS(extract_ridge(std::vector<double>{nan, nan, nan}, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(extract_ridge(std::vector<double>{}, std::vector<double>{}),
                    std::invalid_argument);
}

TEST_CASE("C1 ridge sits on the undamped system line across the scale sweep") {
    // the flat-response regime: the ridge does not move, pinned to the
    // system resonance line that dominates the exact gain map
    const Preset p = preset("C1");
    const SweepAxis axis = SweepAxis::from_name("J_L1L2-scale", linspace(0.5, 2.0, 7));
    const SweepResult r = run_sweep(p, axis, default_omega_grid(), 4);
    for (double ridge : r.ridge) CHECK(ridge == r.ridge[0]);
    CHECK(r.ridge[0] < 6.1);
}

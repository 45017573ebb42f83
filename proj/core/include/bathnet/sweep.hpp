// sweep.hpp — Named preset configurations, pump dressing, and the
// parameter-by-frequency gain sweeps with ridge extraction.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "bathnet/network.hpp"
#include "bathnet/self_energy.hpp"

namespace bathnet {

enum class SweepParameter {
    JL1L2Scale,   // scale couplings between layer 1 and layer 2
    JL2Scale,     // scale couplings inside layer 2
    JSBScale,     // scale system-bath couplings
    Gamma1,       // set loss on layer-1 nodes (bath nodes adjacent to S)
    Gamma2,       // set loss on layer-2 nodes (bath nodes not adjacent to S)
    PumpP,        // pump amplitude
    Edge,         // set one named coupling directly
};

struct SweepAxis {
    SweepParameter parameter{SweepParameter::JL1L2Scale};
    std::string edge_a, edge_b;  // used when parameter == Edge
    std::vector<double> values;

    // Canonical names: J_L1L2-scale, J_L2-scale, J_SB-scale, gamma1, gamma2,
    // pump-P, edge:<a>-<b>.
    std::string name() const;
    static SweepAxis from_name(const std::string& name, std::vector<double> values);
};

struct SweepResult {
    SweepAxis axis;
    std::vector<double> omega_grid;
    std::vector<std::vector<double>> grid;  // [axis value][omega]; NaN = flagged cell
    std::vector<double> ridge;              // per axis value; NaN if a row is all-flagged
    std::string preset_name;
    std::string output_node;
    PumpSpec pump;
    std::string timestamp;  // ISO-8601 UTC, set at run time
    std::string version;
};

struct Preset {
    std::string name;
    NetworkSpec spec;
    PumpSpec pump;
    std::string output_node{"B3"};
};

// The named configurations: C1..C9, FIG1, FIG2, FIG3. Throws
// std::invalid_argument for unknown names.
Preset preset(const std::string& name);
std::vector<std::string> preset_names();

// New spec with the pumped coupling replaced by j + g*p and the driven node
// shifted by delta_omega; the input is untouched. Throws on p < 0 or a
// missing edge.
NetworkSpec apply_pump(const NetworkSpec& spec, const PumpSpec& pump);

// Default grids: omega in [5.8, 7.6] GHz with 601 points; 121 axis steps;
// pump scans span [0, 6].
std::vector<double> default_omega_grid();
std::vector<double> linspace(double from, double to, std::size_t points);
inline constexpr std::size_t kDefaultOmegaPoints = 601;
inline constexpr double kDefaultOmegaMin = 5.8;
inline constexpr double kDefaultOmegaMax = 7.6;
inline constexpr std::size_t kDefaultAxisSteps = 121;
inline constexpr double kDefaultPumpMax = 6.0;

// Gain map over (axis value, omega). For every axis other than pump-P the
// pump is held at p = 0. A singular grid point is recorded as NaN in its
// cell; the sweep never aborts. Rows are independent and may be evaluated on
// `threads` workers; the result is bit-identical for any thread count.
SweepResult run_sweep(const Preset& p, const SweepAxis& axis,
                      std::span<const double> omega_grid, int threads = 1);

// Frequency of maximum gain in a row, ties broken toward the lowest
// frequency; NaN cells are skipped. Throws std::invalid_argument when the
// row is empty or entirely flagged.
double extract_ridge(std::span<const double> row, std::span<const double> omega_grid);

} // namespace bathnet

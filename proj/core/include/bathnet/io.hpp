// io.hpp — Config ingestion, delimited-text spectrum/grid/ridge writers with
// lossless round-trip, run manifests, and graymap rendering.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bathnet/comparators.hpp"
#include "bathnet/network.hpp"
#include "bathnet/sweep.hpp"

namespace bathnet::io {

// --- network config documents --------------------------------------------

struct ParsedConfig {
    NetworkSpec network;
    std::optional<PumpSpec> pump;
};

// Parse the JSON network schema:
//   {"nodes":[{"label","omega_ghz","gamma"}...], "system":"S",
//    "couplings":[{"a","b","j_ghz"}...],
//    "pump":{"edge":["B3","B4"],"g":0.2,"p":0.0,"delta_omega3":0.0}}
// Unknown fields are rejected with the offending path; invariant violations
// raise InvalidSpecError via validate().
ParsedConfig parse_config(const std::string& text);

std::string config_to_json(const NetworkSpec& spec, const std::optional<PumpSpec>& pump);

// --- comparator model documents -------------------------------------------

// Exactly one of the members is set, selected by the document's top-level
// key: "heom", "tn" or "epr".
struct ComparatorModel {
    std::optional<HeomModes> heom;
    std::optional<TnChain> tn;
    double tn_eta{0.0};
    std::optional<EprModel> epr;
};

ComparatorModel parse_comparator_model(const std::string& text);

// --- delimited-text tables -------------------------------------------------

// Column order: omega_ghz, re_sigma, im_sigma, re_gss, im_gss,
// re_gtransfer, im_gtransfer, gain. 17 significant digits; header row
// included. Round-trips losslessly.
void write_spectrum(const SpectrumTrace& trace, std::ostream& out);
SpectrumTrace read_spectrum(std::istream& in);

// Header (axis name+values, omega grid, preset, pump state, output node)
// followed by row-major gain values; flagged cells serialize as nan.
struct GridFile {
    std::string preset_name;
    std::string axis_name;
    std::string output_node;
    std::string pump_edge_a, pump_edge_b;
    double pump_g{0.0};
    double pump_p{0.0};
    std::vector<double> axis_values;
    std::vector<double> omega_grid;
    std::vector<std::vector<double>> rows;
};

GridFile grid_from_sweep(const SweepResult& result);
void write_grid(const GridFile& grid, std::ostream& out);
GridFile read_grid(std::istream& in);

// Ridge sidecar: axis_value, ridge_omega_ghz per row.
void write_ridge(const SweepResult& result, std::ostream& out);
std::vector<std::pair<double, double>> read_ridge(std::istream& in);

// --- run manifests -----------------------------------------------------------

// Every resolved parameter of an output-producing run; executing the same
// manifest reproduces all output files byte-for-byte (timestamps aside).
struct RunManifest {
    std::string command;                 // sigma | sweep | compare | render
    std::string preset_name;             // empty when a config file is used
    std::string config_path;
    std::string model_path;              // compare input
    std::string grid_path;               // render input
    std::string axis_name;               // sweep only
    double axis_from{0.0};
    double axis_to{0.0};
    std::size_t axis_steps{kDefaultAxisSteps};
    double omega_min{kDefaultOmegaMin};
    double omega_max{kDefaultOmegaMax};
    std::size_t omega_points{kDefaultOmegaPoints};
    double pump_p{0.0};                  // sigma only: evaluate at this amplitude
    std::string output_node{"B3"};
    std::string scale{"linear"};         // render only
    std::string out_dir{"."};
    int threads{1};
    std::string version;
    std::string timestamp;
    std::map<std::string, std::string> outputs;  // role -> path, filled by execute
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

// Execute the run the manifest describes, writing every output file it
// records (including the manifest itself, under <out_dir>/manifest.json).
void execute_manifest(RunManifest& m);

// --- graymap rendering -----------------------------------------------------

enum class ColorScale { Linear, Log };

struct Graymap {
    std::size_t width{0};   // omega axis
    std::size_t height{0};  // parameter axis
    std::vector<std::uint8_t> pixels;  // row-major
};

// Map gain cells to 8-bit gray, min -> 0 and max -> 255; a constant grid
// renders all-zero. Missing (NaN) cells render 0. Log scale requires every
// finite cell > 0.
Graymap render_heatmap(const GridFile& grid, ColorScale scale);

// Binary PGM (P5).
void write_pgm(const Graymap& map, std::ostream& out);

// --- helpers -----------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string iso8601_utc_now();

} // namespace bathnet::io

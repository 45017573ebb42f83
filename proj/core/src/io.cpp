// io.cpp — JSON config and model ingestion, text tables, manifests, PGM.

#include "bathnet/io.hpp"

#include "bathnet/version.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace bathnet::io {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, const std::string& context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw IoError("malformed number '" + token + "' in " + context);
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) { ok = true; break; }
        if (!ok) throw ConfigError("unknown field '" + path + "." + key + "'");
    }
}

const json& require_key(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("missing field '" + path + "." + key + "'");
    return *it;
}

double require_number(const json& obj, const char* key, const std::string& path) {
    const json& v = require_key(obj, key, path);
    if (!v.is_number()) throw ConfigError("field '" + path + "." + key + "' must be a number");
    return v.get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
    const json& v = require_key(obj, key, path);
    if (!v.is_string()) throw ConfigError("field '" + path + "." + key + "' must be a string");
    return v.get<std::string>();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("document is not valid JSON: ") + e.what());
    }
}

PumpSpec parse_pump(const json& p, const std::string& path) {
    reject_unknown_keys(p, {"edge", "g", "p", "delta_omega3"}, path);
    PumpSpec pump;
    const json& edge = require_key(p, "edge", path);
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string())
        throw ConfigError("field '" + path + ".edge' must be a pair of node labels");
    pump.edge_a = edge[0].get<std::string>();
    pump.edge_b = edge[1].get<std::string>();
    pump.g = require_number(p, "g", path);
    pump.p = require_number(p, "p", path);
    pump.delta_omega = p.contains("delta_omega3") ? require_number(p, "delta_omega3", path) : 0.0;
    if (pump.p < 0.0) throw ConfigError("field '" + path + ".p' must be nonnegative");
    if (!std::isfinite(pump.g)) throw ConfigError("field '" + path + ".g' must be finite");
    return pump;
}

} // namespace

ParsedConfig parse_config(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ConfigError("top level must be an object");
    reject_unknown_keys(doc, {"nodes", "system", "couplings", "pump"}, "$");

    ParsedConfig out;
    const json& nodes = require_key(doc, "nodes", "$");
    if (!nodes.is_array() || nodes.empty())
        throw ConfigError("field '$.nodes' must be a nonempty array");

    std::size_t idx = 0;
    for (const auto& n : nodes) {
        const std::string path = "$.nodes[" + std::to_string(idx) + "]";
        if (!n.is_object()) throw ConfigError("entry '" + path + "' must be an object");
        reject_unknown_keys(n, {"label", "omega_ghz", "gamma"}, path);
        out.network.labels.push_back(require_string(n, "label", path));
        out.network.omega_ghz.push_back(require_number(n, "omega_ghz", path));
        out.network.gamma.push_back(require_number(n, "gamma", path));
        ++idx;
    }

    const std::string system = require_string(doc, "system", "$");
    const auto sys_index = out.network.index_of(system);
    if (!sys_index) throw ConfigError("field '$.system' names undeclared node '" + system + "'");
    out.network.system_index = *sys_index;

    const json& couplings = require_key(doc, "couplings", "$");
    if (!couplings.is_array()) throw ConfigError("field '$.couplings' must be an array");
    idx = 0;
    for (const auto& c : couplings) {
        const std::string path = "$.couplings[" + std::to_string(idx) + "]";
        if (!c.is_object()) throw ConfigError("entry '" + path + "' must be an object");
        reject_unknown_keys(c, {"a", "b", "j_ghz"}, path);
        out.network.couplings.push_back({require_string(c, "a", path),
                                         require_string(c, "b", path),
                                         require_number(c, "j_ghz", path)});
        ++idx;
    }

    if (doc.contains("pump")) out.pump = parse_pump(doc["pump"], "$.pump");

    require_valid(out.network);
    if (out.pump && !out.network.has_edge(out.pump->edge_a, out.pump->edge_b))
        throw ConfigError("field '$.pump.edge' names undeclared coupling " +
                          out.pump->edge_a + "-" + out.pump->edge_b);
    return out;
}

std::string config_to_json(const NetworkSpec& spec, const std::optional<PumpSpec>& pump) {
    json doc;
    doc["nodes"] = json::array();
    for (std::size_t i = 0; i < spec.labels.size(); ++i)
        doc["nodes"].push_back({{"label", spec.labels[i]},
                                {"omega_ghz", spec.omega_ghz[i]},
                                {"gamma", spec.gamma[i]}});
    doc["system"] = spec.labels[spec.system_index];
    doc["couplings"] = json::array();
    for (const auto& c : spec.couplings)
        doc["couplings"].push_back({{"a", c.a}, {"b", c.b}, {"j_ghz", c.j_ghz}});
    if (pump)
        doc["pump"] = {{"edge", {pump->edge_a, pump->edge_b}},
                       {"g", pump->g},
                       {"p", pump->p},
                       {"delta_omega3", pump->delta_omega}};
    return doc.dump(2) + "\n";
}

ComparatorModel parse_comparator_model(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ConfigError("top level must be an object");
    reject_unknown_keys(doc, {"heom", "tn", "epr"}, "$");
    if (doc.size() != 1)
        throw ConfigError("model document must contain exactly one of 'heom', 'tn', 'epr'");

    ComparatorModel model;
    if (doc.contains("heom")) {
        const json& h = doc["heom"];
        reject_unknown_keys(h, {"modes"}, "$.heom");
        const json& modes = require_key(h, "modes", "$.heom");
        if (!modes.is_array() || modes.empty())
            throw ConfigError("field '$.heom.modes' must be a nonempty array");
        HeomModes out;
        std::size_t idx = 0;
        for (const auto& m : modes) {
            const std::string path = "$.heom.modes[" + std::to_string(idx) + "]";
            reject_unknown_keys(m, {"c_re", "c_im", "gamma"}, path);
            HeomMode mode;
            mode.amplitude = {require_number(m, "c_re", path),
                              m.contains("c_im") ? require_number(m, "c_im", path) : 0.0};
            mode.decay = require_number(m, "gamma", path);
            if (!(mode.decay > 0.0))
                throw ConfigError("field '" + path + ".gamma' must be positive");
            out.modes.push_back(mode);
            ++idx;
        }
        model.heom = std::move(out);
    } else if (doc.contains("tn")) {
        const json& t = doc["tn"];
        reject_unknown_keys(t, {"lambda", "eps", "hop", "eta"}, "$.tn");
        TnChain chain;
        chain.lambda = require_number(t, "lambda", "$.tn");
        const json& eps = require_key(t, "eps", "$.tn");
        const json& hop = require_key(t, "hop", "$.tn");
        if (!eps.is_array() || eps.empty())
            throw ConfigError("field '$.tn.eps' must be a nonempty array");
        if (!hop.is_array())
            throw ConfigError("field '$.tn.hop' must be an array");
        for (const auto& v : eps) chain.eps.push_back(v.get<double>());
        for (const auto& v : hop) chain.hop.push_back(v.get<double>());
        if (chain.hop.size() + 1 != chain.eps.size())
            throw ConfigError("field '$.tn.hop' must have one fewer entry than '$.tn.eps'");
        model.tn = std::move(chain);
        model.tn_eta = t.contains("eta") ? require_number(t, "eta", "$.tn") : 0.0;
    } else {
        const json& e = doc["epr"];
        reject_unknown_keys(e, {"elements"}, "$.epr");
        const json& elements = require_key(e, "elements", "$.epr");
        if (!elements.is_array() || elements.empty())
            throw ConfigError("field '$.epr.elements' must be a nonempty array");
        EprModel out;
        std::size_t idx = 0;
        for (const auto& el : elements) {
            const std::string path = "$.epr.elements[" + std::to_string(idx) + "]";
            reject_unknown_keys(el, {"energy", "participation"}, path);
            EprElement item;
            item.energy = require_number(el, "energy", path);
            item.participation = require_number(el, "participation", path);
            if (item.participation < 0.0 || item.participation > 1.0)
                throw ConfigError("field '" + path + ".participation' must lie in [0, 1]");
            out.elements.push_back(item);
            ++idx;
        }
        model.epr = std::move(out);
    }
    return model;
}

void write_spectrum(const SpectrumTrace& trace, std::ostream& out) {
    if (trace.empty()) throw IoError("refusing to write an empty spectrum");
    out << "omega_ghz,re_sigma,im_sigma,re_gss,im_gss,re_gtransfer,im_gtransfer,gain\n";
    for (const auto& s : trace) {
        out << fmt(s.omega) << ',' << fmt(s.sigma.real()) << ',' << fmt(s.sigma.imag()) << ','
            << fmt(s.g_ss.real()) << ',' << fmt(s.g_ss.imag()) << ','
            << fmt(s.g_transfer.real()) << ',' << fmt(s.g_transfer.imag()) << ','
            << fmt(s.gain) << '\n';
    }
    if (!out) throw IoError("spectrum write failed");
}

SpectrumTrace read_spectrum(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("spectrum file is empty");
    if (line != "omega_ghz,re_sigma,im_sigma,re_gss,im_gss,re_gtransfer,im_gtransfer,gain")
        throw IoError("spectrum file has an unexpected header");

    SpectrumTrace trace;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string token;
        std::vector<double> v;
        while (std::getline(ss, token, ','))
            v.push_back(parse_double(token, "spectrum row " + std::to_string(row)));
        if (v.size() != 8)
            throw IoError("spectrum row " + std::to_string(row) + " has " +
                          std::to_string(v.size()) + " columns, expected 8");
        SelfEnergySample s;
        s.omega = v[0];
        s.sigma = {v[1], v[2]};
        s.g_ss = {v[3], v[4]};
        s.g_transfer = {v[5], v[6]};
        s.gain = v[7];
        trace.push_back(s);
        ++row;
    }
    return trace;
}

GridFile grid_from_sweep(const SweepResult& result) {
    GridFile g;
    g.preset_name = result.preset_name;
    g.axis_name = result.axis.name();
    g.output_node = result.output_node;
    g.pump_edge_a = result.pump.edge_a;
    g.pump_edge_b = result.pump.edge_b;
    g.pump_g = result.pump.g;
    g.pump_p = result.pump.p;
    g.axis_values = result.axis.values;
    g.omega_grid = result.omega_grid;
    g.rows = result.grid;
    return g;
}

void write_grid(const GridFile& grid, std::ostream& out) {
    if (grid.rows.empty() || grid.omega_grid.empty())
        throw IoError("refusing to write an empty grid");
    out << "# bathnet grid v1\n";
    out << "preset " << grid.preset_name << '\n';
    out << "axis " << grid.axis_name << '\n';
    out << "output_node " << grid.output_node << '\n';
    out << "pump_edge " << grid.pump_edge_a << ' ' << grid.pump_edge_b << '\n';
    out << "pump_g " << fmt(grid.pump_g) << '\n';
    out << "pump_p " << fmt(grid.pump_p) << '\n';
    out << "axis_values";
    for (double v : grid.axis_values) out << ' ' << fmt(v);
    out << '\n';
    out << "omega_ghz";
    for (double v : grid.omega_grid) out << ' ' << fmt(v);
    out << '\n';
    for (const auto& row : grid.rows) {
        if (row.size() != grid.omega_grid.size())
            throw IoError("grid row length does not match the frequency grid");
        bool first = true;
        for (double v : row) {
            if (!first) out << ' ';
            out << fmt(v);
            first = false;
        }
        out << '\n';
    }
    if (!out) throw IoError("grid write failed");
}

GridFile read_grid(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "# bathnet grid v1")
        throw IoError("grid file has an unexpected signature line");

    GridFile g;
    bool have_axis_values = false, have_omega = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "preset") {
            ss >> g.preset_name;
        } else if (key == "axis") {
            ss >> g.axis_name;
        } else if (key == "output_node") {
            ss >> g.output_node;
        } else if (key == "pump_edge") {
            ss >> g.pump_edge_a >> g.pump_edge_b;
        } else if (key == "pump_g") {
            std::string v;
            ss >> v;
            g.pump_g = parse_double(v, "grid pump_g");
        } else if (key == "pump_p") {
            std::string v;
            ss >> v;
            g.pump_p = parse_double(v, "grid pump_p");
        } else if (key == "axis_values") {
            std::string v;
            while (ss >> v) g.axis_values.push_back(parse_double(v, "grid axis_values"));
            have_axis_values = true;
        } else if (key == "omega_ghz") {
            std::string v;
            while (ss >> v) g.omega_grid.push_back(parse_double(v, "grid omega_ghz"));
            have_omega = true;
        } else {
            if (!have_axis_values || !have_omega)
                throw IoError("grid data rows appeared before the header was complete");
            std::vector<double> row;
            row.push_back(parse_double(key, "grid row"));
            std::string v;
            while (ss >> v) row.push_back(parse_double(v, "grid row"));
            if (row.size() != g.omega_grid.size())
                throw IoError("grid row length does not match the frequency grid");
            g.rows.push_back(std::move(row));
        }
    }
    if (g.rows.size() != g.axis_values.size())
        throw IoError("grid row count does not match the axis value count");
    return g;
}

void write_ridge(const SweepResult& result, std::ostream& out) {
    out << "axis_value,ridge_omega_ghz\n";
    for (std::size_t k = 0; k < result.axis.values.size(); ++k)
        out << fmt(result.axis.values[k]) << ',' << fmt(result.ridge[k]) << '\n';
    if (!out) throw IoError("ridge write failed");
}

std::vector<std::pair<double, double>> read_ridge(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "axis_value,ridge_omega_ghz")
        throw IoError("ridge file has an unexpected header");
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw IoError("ridge row is missing a comma");
        rows.emplace_back(parse_double(line.substr(0, comma), "ridge axis value"),
                          parse_double(line.substr(comma + 1), "ridge frequency"));
    }
    return rows;
}

std::string manifest_to_json(const RunManifest& m) {
    json doc;
    doc["command"] = m.command;
    doc["preset"] = m.preset_name;
    doc["config"] = m.config_path;
    doc["model"] = m.model_path;
    doc["grid"] = m.grid_path;
    doc["axis"] = {{"name", m.axis_name},
                   {"from", m.axis_from},
                   {"to", m.axis_to},
                   {"steps", m.axis_steps}};
    doc["omega"] = {{"min", m.omega_min}, {"max", m.omega_max}, {"points", m.omega_points}};
    doc["pump_p"] = m.pump_p;
    doc["output_node"] = m.output_node;
    doc["scale"] = m.scale;
    doc["out_dir"] = m.out_dir;
    doc["threads"] = m.threads;
    doc["version"] = m.version;
    doc["timestamp"] = m.timestamp;
    doc["outputs"] = m.outputs;
    return doc.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    const json doc = parse_json(text);
    reject_unknown_keys(doc,
                        {"command", "preset", "config", "model", "grid", "axis", "omega",
                         "pump_p", "output_node", "scale", "out_dir", "threads", "version",
                         "timestamp", "outputs"},
                        "$");
    RunManifest m;
    m.command = require_string(doc, "command", "$");
    m.preset_name = require_string(doc, "preset", "$");
    m.config_path = require_string(doc, "config", "$");
    m.model_path = require_string(doc, "model", "$");
    m.grid_path = require_string(doc, "grid", "$");
    const json& axis = require_key(doc, "axis", "$");
    m.axis_name = require_string(axis, "name", "$.axis");
    m.axis_from = require_number(axis, "from", "$.axis");
    m.axis_to = require_number(axis, "to", "$.axis");
    m.axis_steps = static_cast<std::size_t>(require_number(axis, "steps", "$.axis"));
    const json& omega = require_key(doc, "omega", "$");
    m.omega_min = require_number(omega, "min", "$.omega");
    m.omega_max = require_number(omega, "max", "$.omega");
    m.omega_points = static_cast<std::size_t>(require_number(omega, "points", "$.omega"));
    m.pump_p = require_number(doc, "pump_p", "$");
    m.output_node = require_string(doc, "output_node", "$");
    m.scale = require_string(doc, "scale", "$");
    m.out_dir = require_string(doc, "out_dir", "$");
    m.threads = static_cast<int>(require_number(doc, "threads", "$"));
    m.version = require_string(doc, "version", "$");
    m.timestamp = require_string(doc, "timestamp", "$");
    if (doc.contains("outputs"))
        for (const auto& [k, v] : doc["outputs"].items())
            m.outputs[k] = v.get<std::string>();
    return m;
}

namespace {

struct LoadedTarget {
    Preset preset;
};

// A manifest names either a preset or a config document; both resolve to a
// preset-shaped bundle the sweep engine accepts.
LoadedTarget load_target(const RunManifest& m) {
    LoadedTarget t;
    if (!m.preset_name.empty()) {
        t.preset = preset(m.preset_name);
    } else if (!m.config_path.empty()) {
        const ParsedConfig cfg = parse_config(read_file(m.config_path));
        t.preset.name = std::filesystem::path(m.config_path).stem().string();
        t.preset.spec = cfg.network;
        if (cfg.pump) t.preset.pump = *cfg.pump;
    } else {
        throw ConfigError("run needs a preset name or a config path");
    }
    if (!m.output_node.empty()) t.preset.output_node = m.output_node;
    return t;
}

void execute_sigma(RunManifest& m) {
    LoadedTarget t = load_target(m);
    PumpSpec pump = t.preset.pump;
    pump.p = m.pump_p;
    const bool pumpable = t.preset.spec.has_edge(pump.edge_a, pump.edge_b);
    if (m.pump_p != 0.0 && !pumpable)
        throw ConfigError("pump amplitude given but the spec declares no coupling " +
                          pump.edge_a + "-" + pump.edge_b);
    const NetworkSpec dressed =
        pumpable ? apply_pump(t.preset.spec, pump) : t.preset.spec;
    const auto grid = linspace(m.omega_min, m.omega_max, m.omega_points);
    const SpectrumTrace trace = evaluate_spectrum(dressed, grid, t.preset.output_node);

    const auto path = std::filesystem::path(m.out_dir) / "spectrum.csv";
    std::ostringstream out;
    write_spectrum(trace, out);
    write_file(path.string(), out.str());
    m.outputs["spectrum"] = path.string();
}

void execute_sweep(RunManifest& m) {
    LoadedTarget t = load_target(m);
    const SweepAxis axis =
        SweepAxis::from_name(m.axis_name, linspace(m.axis_from, m.axis_to, m.axis_steps));
    const auto grid = linspace(m.omega_min, m.omega_max, m.omega_points);
    const SweepResult result = run_sweep(t.preset, axis, grid, m.threads);

    const auto grid_path = std::filesystem::path(m.out_dir) / "sweep_grid.txt";
    const auto ridge_path = std::filesystem::path(m.out_dir) / "sweep_ridge.csv";
    {
        std::ostringstream out;
        write_grid(grid_from_sweep(result), out);
        write_file(grid_path.string(), out.str());
    }
    {
        std::ostringstream out;
        write_ridge(result, out);
        write_file(ridge_path.string(), out.str());
    }
    m.outputs["grid"] = grid_path.string();
    m.outputs["ridge"] = ridge_path.string();
}

void execute_compare(RunManifest& m) {
    const ComparatorModel model = parse_comparator_model(read_file(m.model_path));
    const auto grid = linspace(m.omega_min, m.omega_max, m.omega_points);

    std::ostringstream out;
    out << "omega_ghz,re_sigma,im_sigma\n";
    for (double w : grid) {
        std::complex<double> sigma;
        if (model.heom) sigma = heom_sigma(*model.heom, w);
        else if (model.tn) sigma = tn_sigma_cf(*model.tn, w, model.tn_eta);
        else sigma = epr_sigma(*model.epr);
        out << fmt(w) << ',' << fmt(sigma.real()) << ',' << fmt(sigma.imag()) << '\n';
    }
    const auto path = std::filesystem::path(m.out_dir) / "compare.csv";
    write_file(path.string(), out.str());
    m.outputs["sigma"] = path.string();
}

void execute_render(RunManifest& m) {
    std::ifstream in(m.grid_path);
    if (!in) throw IoError("cannot open grid file '" + m.grid_path + "'");
    const GridFile grid = read_grid(in);
    const ColorScale scale = m.scale == "log" ? ColorScale::Log : ColorScale::Linear;
    const Graymap map = render_heatmap(grid, scale);

    const auto path = std::filesystem::path(m.out_dir) / "heatmap.pgm";
    std::ostringstream out;
    write_pgm(map, out);
    write_file(path.string(), out.str());
    m.outputs["heatmap"] = path.string();
}

} // namespace

void execute_manifest(RunManifest& m) {
    if (m.version.empty()) m.version = kVersion;
    m.timestamp = iso8601_utc_now();
    m.outputs.clear();

    try {
        std::filesystem::create_directories(m.out_dir);
    } catch (const std::filesystem::filesystem_error& e) {
        throw IoError("cannot create output directory '" + m.out_dir + "': " + e.what());
    }

    if (m.command == "sigma") execute_sigma(m);
    else if (m.command == "sweep") execute_sweep(m);
    else if (m.command == "compare") execute_compare(m);
    else if (m.command == "render") execute_render(m);
    else throw ConfigError("unknown manifest command '" + m.command + "'");

    const auto path = std::filesystem::path(m.out_dir) / "manifest.json";
    write_file(path.string(), manifest_to_json(m));
    m.outputs["manifest"] = path.string();
}

Graymap render_heatmap(const GridFile& grid, ColorScale scale) {
    if (grid.rows.empty() || grid.omega_grid.empty())
        throw std::invalid_argument("cannot render an empty grid");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : grid.rows) {
        for (double v : row) {
            if (std::isnan(v)) continue;
            if (scale == ColorScale::Log && !(v > 0.0))
                throw std::invalid_argument("log scale requires strictly positive cells");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!std::isfinite(lo))
        throw std::invalid_argument("cannot render a grid with no finite cells");

    const auto transform = [&](double v) {
        return scale == ColorScale::Log ? std::log(v) : v;
    };
    const double tlo = transform(lo);
    const double thi = transform(hi);
    const double span = thi - tlo;

    Graymap map;
    map.height = grid.rows.size();
    map.width = grid.omega_grid.size();
    map.pixels.resize(map.width * map.height, 0);
    for (std::size_t r = 0; r < map.height; ++r) {
        for (std::size_t c = 0; c < map.width; ++c) {
            const double v = grid.rows[r][c];
            if (std::isnan(v)) continue;           // missing cells render 0
            if (span <= 0.0) continue;             // constant grid renders 0
            const double unit = (transform(v) - tlo) / span;
            map.pixels[r * map.width + c] =
                static_cast<std::uint8_t>(std::lround(unit * 255.0));
        }
    }
    return map;
}

void write_pgm(const Graymap& map, std::ostream& out) {
    if (map.width == 0 || map.height == 0) throw IoError("refusing to write an empty graymap");
    out << "P5\n" << map.width << ' ' << map.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(map.pixels.data()),
              static_cast<std::streamsize>(map.pixels.size()));
    if (!out) throw IoError("graymap write failed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in) throw IoError("read failed for '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace bathnet::io

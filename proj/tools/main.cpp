// main.cpp — bathnet command line: spectra, sweeps, comparator models,
// preset inspection, config validation and heatmap rendering.
//
// Exit codes: 0 success, 1 usage error, 2 config/validation error,
// 3 numerical singularity, 4 I/O failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "bathnet/io.hpp"
#include "bathnet/version.hpp"

namespace {

using namespace bathnet;

constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSingularity = 3;
constexpr int kExitIo = 4;

struct CommonArgs {
    std::string preset_name;
    std::string config_path;
    std::string output_node = "B3";
    std::string out_dir = ".";
    double omega_min = kDefaultOmegaMin;
    double omega_max = kDefaultOmegaMax;
    std::size_t omega_points = kDefaultOmegaPoints;
    int threads = 1;
};

void add_target_options(CLI::App* cmd, CommonArgs& args) {
    auto* preset_opt = cmd->add_option("--preset", args.preset_name,
                                       "Named preset (see `bathnet presets`)");
    auto* config_opt =
        cmd->add_option("--config", args.config_path, "Network config document (JSON)");
    preset_opt->excludes(config_opt);
    config_opt->excludes(preset_opt);
    cmd->add_option("--output-node", args.output_node, "Bath node read as the output")
        ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--omega-min", args.omega_min, "Grid start, GHz")->capture_default_str();
    cmd->add_option("--omega-max", args.omega_max, "Grid end, GHz")->capture_default_str();
    cmd->add_option("--omega-points", args.omega_points, "Grid size")->capture_default_str();
}

void add_out_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--out", args.out_dir, "Output directory")->capture_default_str();
}

void require_target(const CommonArgs& args) {
    if (args.preset_name.empty() && args.config_path.empty())
        throw CLI::ValidationError("one of --preset or --config is required");
}

io::RunManifest base_manifest(const CommonArgs& args) {
    io::RunManifest m;
    m.preset_name = args.preset_name;
    m.config_path = args.config_path;
    m.output_node = args.output_node;
    m.out_dir = args.out_dir;
    m.omega_min = args.omega_min;
    m.omega_max = args.omega_max;
    m.omega_points = args.omega_points;
    m.threads = args.threads;
    m.version = kVersion;
    return m;
}

void report_outputs(const io::RunManifest& m) {
    for (const auto& [role, path] : m.outputs)
        std::cout << role << ": " << path << '\n';
}

int run_presets_listing() {
    for (const auto& name : preset_names()) {
        const Preset p = preset(name);
        std::printf("%-5s omega=[", name.c_str());
        for (std::size_t i = 0; i < p.spec.omega_ghz.size(); ++i)
            std::printf("%s%g", i ? ", " : "", p.spec.omega_ghz[i]);
        std::printf("] GHz");
        std::printf("  J:");
        for (const auto& c : p.spec.couplings)
            std::printf(" %s-%s=%g", c.a.c_str(), c.b.c_str(), c.j_ghz);
        std::printf("  gamma=[");
        for (std::size_t i = 0; i < p.spec.gamma.size(); ++i)
            std::printf("%s%g", i ? ", " : "", p.spec.gamma[i]);
        std::printf("]  pump %s-%s g=%g\n", p.pump.edge_a.c_str(), p.pump.edge_b.c_str(),
                    p.pump.g);
    }
    return 0;
}

int run_validate(const std::string& config_path) {
    const std::string text = io::read_file(config_path);
    try {
        io::parse_config(text);
    } catch (const InvalidSpecError& e) {
        for (const auto& v : e.violations()) std::cout << "violation: " << v << '\n';
        return kExitConfig;
    }
    std::cout << "ok: " << config_path << " is a valid network config\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured-bath network self-energies, gain maps and comparator models"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    CommonArgs args;

    auto* sigma = app.add_subcommand("sigma", "Write the self-energy spectrum for one network");
    double sigma_pump_p = 0.0;
    add_target_options(sigma, args);
    add_grid_options(sigma, args);
    add_out_option(sigma, args);
    sigma->add_option("--pump-p", sigma_pump_p, "Pump amplitude for this spectrum")
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter against frequency");
    std::string axis_name;
    double axis_from = 0.0, axis_to = 0.0;
    std::size_t axis_steps = kDefaultAxisSteps;
    add_target_options(sweep, args);
    add_grid_options(sweep, args);
    add_out_option(sweep, args);
    const auto axis_check = CLI::Validator(
        [](std::string& value) -> std::string {
            for (const char* known : {"J_L1L2-scale", "J_L2-scale", "J_SB-scale", "gamma1",
                                      "gamma2", "pump-P"})
                if (value == known) return {};
            if (value.rfind("edge:", 0) == 0 && value.find('-', 5) != std::string::npos)
                return {};
            return "unknown axis '" + value + "'";
        },
        "AXIS");
    sweep->add_option("--axis", axis_name,
                      "Axis: J_L1L2-scale | J_L2-scale | J_SB-scale | gamma1 | gamma2 | "
                      "pump-P | edge:<a>-<b>")
        ->required()
        ->check(axis_check);
    sweep->add_option("--from", axis_from, "First axis value")->required();
    sweep->add_option("--to", axis_to, "Last axis value")->required();
    sweep->add_option("--steps", axis_steps, "Axis step count")->capture_default_str();
    sweep->add_option("--threads", args.threads, "Worker threads (rows are independent)")
        ->capture_default_str();

    auto* pump_sweep =
        app.add_subcommand("pump-sweep", "Sweep the pump amplitude (axis pump-P)");
    double pump_from = 0.0, pump_to = kDefaultPumpMax;
    std::size_t pump_steps = kDefaultAxisSteps;
    add_target_options(pump_sweep, args);
    add_grid_options(pump_sweep, args);
    add_out_option(pump_sweep, args);
    pump_sweep->add_option("--from", pump_from, "First pump amplitude")->capture_default_str();
    pump_sweep->add_option("--to", pump_to, "Last pump amplitude")->capture_default_str();
    pump_sweep->add_option("--steps", pump_steps, "Axis step count")->capture_default_str();
    pump_sweep->add_option("--threads", args.threads, "Worker threads")->capture_default_str();

    auto* compare =
        app.add_subcommand("compare", "Evaluate a heom/tn/epr model document over a grid");
    std::string model_path;
    add_grid_options(compare, args);
    add_out_option(compare, args);
    compare->add_option("--model", model_path, "Model document (JSON)")->required();

    auto* presets_cmd = app.add_subcommand("presets", "List presets with their parameters");

    auto* validate_cmd = app.add_subcommand("validate", "Validate a network config document");
    std::string validate_path;
    validate_cmd->add_option("--config", validate_path, "Network config document (JSON)")
        ->required();

    auto* render = app.add_subcommand("render", "Render a sweep grid to a PGM heatmap");
    std::string grid_path, scale = "linear";
    add_out_option(render, args);
    render->add_option("--grid", grid_path, "Grid file from a sweep run")->required();
    render->add_option("--scale", scale, "linear | log")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();

    auto* rerun = app.add_subcommand("rerun", "Re-execute a recorded run manifest");
    std::string manifest_path;
    rerun->add_option("--manifest", manifest_path, "manifest.json from a previous run")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sigma->parsed()) {
            require_target(args);
            io::RunManifest m = base_manifest(args);
            m.command = "sigma";
            m.pump_p = sigma_pump_p;
            io::execute_manifest(m);
            report_outputs(m);
        } else if (sweep->parsed()) {
            require_target(args);
            io::RunManifest m = base_manifest(args);
            m.command = "sweep";
            m.axis_name = axis_name;
            m.axis_from = axis_from;
            m.axis_to = axis_to;
            m.axis_steps = axis_steps;
            io::execute_manifest(m);
            report_outputs(m);
        } else if (pump_sweep->parsed()) {
            require_target(args);
            io::RunManifest m = base_manifest(args);
            m.command = "sweep";
            m.axis_name = "pump-P";
            m.axis_from = pump_from;
            m.axis_to = pump_to;
            m.axis_steps = pump_steps;
            io::execute_manifest(m);
            report_outputs(m);
        } else if (compare->parsed()) {
            io::RunManifest m = base_manifest(args);
            m.command = "compare";
            m.model_path = model_path;
            io::execute_manifest(m);
            report_outputs(m);
        } else if (presets_cmd->parsed()) {
            return run_presets_listing();
        } else if (validate_cmd->parsed()) {
            return run_validate(validate_path);
        } else if (render->parsed()) {
            io::RunManifest m = base_manifest(args);
            m.command = "render";
            m.grid_path = grid_path;
            m.scale = scale;
            io::execute_manifest(m);
            report_outputs(m);
        } else if (rerun->parsed()) {
            io::RunManifest m = io::manifest_from_json(io::read_file(manifest_path));
            io::execute_manifest(m);
            report_outputs(m);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SingularityError& e) {
        std::cerr << "singularity: " << e.what() << '\n';
        return kExitSingularity;
    } catch (const InvalidSpecError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}

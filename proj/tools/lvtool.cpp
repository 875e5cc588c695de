// lvtool: command-line front end for the two-prey/two-predator map.
// Subcommands: simulate | classify | diagram | normalize | presets.
// Exit codes: 0 ok, 2 config error, 3 blow-up, 4 normalization error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lv/io.hpp"
#include "lv/map.hpp"
#include "lv/params.hpp"
#include "lv/scenarios.hpp"
#include "lv/stability.hpp"

namespace {

struct RunConfig {
    std::optional<std::string> preset;
    std::optional<lv::EcoParams> params;
    std::optional<lv::StateVec> init;
    long generations = 1000;
    double extinction_threshold = 1e-6;
    int resolution = 200;
    std::string out = ".";
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    lv::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (j.contains("preset")) cfg.preset = j.at("preset").get<std::string>();
    if (j.contains("params")) cfg.params = lv::eco_from_json(j.at("params"));
    if (j.contains("init")) {
        const lv::json& a = j.at("init");
        if (!a.is_array() || a.size() != 4)
            throw ConfigError("config: init must be a 4-array");
        lv::StateVec s;
        for (int i = 0; i < 4; ++i) s[i] = a[static_cast<size_t>(i)].get<double>();
        cfg.init = s;
    }
    if (j.contains("generations")) cfg.generations = j.at("generations").get<long>();
    if (j.contains("extinction_threshold"))
        cfg.extinction_threshold = j.at("extinction_threshold").get<double>();
    if (j.contains("resolution")) cfg.resolution = j.at("resolution").get<int>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
}

// Resolves preset-vs-explicit parameters; fills init from the preset when the
// config gives none.
lv::EcoParams resolve_params(RunConfig& cfg) {
    if (cfg.preset && cfg.params)
        throw ConfigError("config: preset and explicit params are mutually exclusive");
    if (cfg.preset) {
        const lv::Preset* p;
        try {
            p = &lv::get_preset(*cfg.preset);
        } catch (const lv::UnknownPreset& e) {
            throw ConfigError(e.what());
        }
        if (!cfg.init) cfg.init = p->init;
        return p->eco;
    }
    if (cfg.params) return *cfg.params;
    throw ConfigError("config: either a preset or explicit params is required");
}

std::filesystem::path out_path(const RunConfig& cfg, const char* filename) {
    std::filesystem::create_directories(cfg.out);
    return std::filesystem::path(cfg.out) / filename;
}

int cmd_simulate(RunConfig cfg) {
    const lv::EcoParams eco = resolve_params(cfg);
    if (!cfg.init) throw ConfigError("simulate: no initial state (preset has none and config gives none)");
    if (cfg.generations < 0) throw ConfigError("simulate: generations must be >= 0");
    if (!(cfg.extinction_threshold > 0.0))
        throw ConfigError("simulate: extinction threshold must be > 0");
    cfg.init->validate();

    const lv::CoeffParams c = lv::compile(eco);
    lv::Trajectory traj;
    if (cfg.generations == 0)
        traj.states.push_back(*cfg.init);
    else
        traj = lv::simulate(c, *cfg.init, cfg.generations);

    lv::write_file_atomic(out_path(cfg, "trajectory.csv"), lv::trajectory_csv(traj));

    const lv::PersistenceReport rep = lv::persistence(traj, cfg.extinction_threshold);
    lv::json summary;
    summary["generations"] = traj.generations();
    summary["final_state"] = lv::state_to_json(traj.states.back());
    summary["persistence"] = lv::persistence_to_json(rep);
    summary["events"] = lv::events_to_json(traj);
    lv::write_file_atomic(out_path(cfg, "summary.json"), summary.dump(2) + "\n");

    return traj.blew_up ? 3 : 0;
}

int cmd_classify(RunConfig cfg) {
    const lv::EcoParams eco = resolve_params(cfg);
    const lv::Classification cl = lv::classify(lv::compile(eco));
    lv::write_file_atomic(out_path(cfg, "classify.json"),
                          lv::classification_to_json(cl).dump(2) + "\n");
    return 0;
}

int cmd_diagram(RunConfig cfg) {
    const lv::EcoParams eco = resolve_params(cfg);
    if (cfg.resolution < 2) throw ConfigError("diagram: resolution must be >= 2");
    const lv::StabilityGrid grid = lv::diagram(eco, cfg.resolution);
    lv::write_file_atomic(out_path(cfg, "grid.csv"), lv::grid_csv(grid));
    lv::write_file_atomic(out_path(cfg, "diagram.ppm"), lv::grid_ppm(grid));
    return 0;
}

int cmd_normalize(RunConfig cfg) {
    const lv::EcoParams eco = resolve_params(cfg);
    lv::EcoParams normed;
    try {
        normed = lv::normalize(eco);
    } catch (const lv::ZeroEfficiencyRow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    const lv::CoeffParams before = lv::compile(eco);
    const lv::CoeffParams after = lv::compile(normed);
    auto mat = [](const std::array<std::array<double, 2>, 2>& m) {
        return lv::json::array(
            {lv::json::array({m[0][0], m[0][1]}), lv::json::array({m[1][0], m[1][1]})});
    };
    lv::json out;
    out["params"] = lv::eco_to_json(normed);
    out["invariance"] = {{"B_before", mat(before.B)}, {"B_after", mat(after.B)},
                         {"C_before", mat(before.C)}, {"C_after", mat(after.C)},
                         {"identical", before == after}};
    lv::write_file_atomic(out_path(cfg, "normalized.json"), out.dump(2) + "\n");
    return 0;
}

int cmd_presets() {
    for (const lv::Preset& p : lv::list_presets())
        std::cout << p.name << "  " << p.description << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time two-prey/two-predator Lotka-Volterra toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    RunConfig flags;
    bool has_generations = false, has_resolution = false, has_out = false, has_threshold = false;
    std::string preset_flag;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--preset", preset_flag, "preset name (see `presets`)");
        sub->add_option("--out", flags.out, "output directory")->each([&](const std::string&) {
            has_out = true;
        });
    };

    CLI::App* sim = app.add_subcommand("simulate", "run a trajectory, write CSV + summary JSON");
    add_common(sim);
    sim->add_option("--generations", flags.generations, "number of generations")
        ->each([&](const std::string&) { has_generations = true; });
    sim->add_option("--threshold", flags.extinction_threshold, "extinction threshold")
        ->each([&](const std::string&) { has_threshold = true; });

    CLI::App* cls = app.add_subcommand("classify", "fixed point, eigenvalues, stability class");
    add_common(cls);

    CLI::App* dia = app.add_subcommand("diagram", "stability diagram over the (h1, h2) square");
    add_common(dia);
    dia->add_option("--resolution", flags.resolution, "grid resolution N")
        ->each([&](const std::string&) { has_resolution = true; });

    CLI::App* nrm = app.add_subcommand("normalize", "normalize efficiency rows, emit proof JSON");
    add_common(nrm);

    app.add_subcommand("presets", "list available presets");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (!preset_flag.empty()) cfg.preset = preset_flag;
        if (has_generations) cfg.generations = flags.generations;
        if (has_threshold) cfg.extinction_threshold = flags.extinction_threshold;
        if (has_resolution) cfg.resolution = flags.resolution;
        if (has_out) cfg.out = flags.out;

        if (sim->parsed()) return cmd_simulate(cfg);
        if (cls->parsed()) return cmd_classify(cfg);
        if (dia->parsed()) return cmd_diagram(cfg);
        if (nrm->parsed()) return cmd_normalize(cfg);
        return cmd_presets();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

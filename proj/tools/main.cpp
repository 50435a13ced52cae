#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trapforge/report.hpp"

namespace {

int run_command(const std::string& name, const std::string& config_path,
                const std::string& out_override, bool table2) {
    using namespace trapforge;
    const RunConfig config = parse_config(config_path);
    const std::string out_dir =
        out_override.empty() ? config.output.directory : out_override;

    std::vector<std::string> files;
    if (name == "geometry")
        files = run_geometry(config, out_dir);
    else if (name == "stability")
        files = run_stability(config, out_dir);
    else if (name == "dynamics")
        files = run_dynamics(config, out_dir);
    else if (name == "spectrum")
        files = run_spectrum(config, out_dir);
    else if (name == "noise")
        files = run_noise(config, out_dir, table2);

    for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trapforge: planar electron-ion ring-trap design workbench"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    bool table2 = false;

    const std::vector<std::string> names = {"geometry", "stability", "dynamics",
                                            "spectrum", "noise"};
    const std::vector<std::string> descriptions = {
        "ring-geometry optimization and pseudopotential profile",
        "two-frequency stability report and parametric resonances",
        "trajectory integration, boundedness scan, Coulomb check",
        "radial level ladder, spacing profile, regions, tuning curve",
        "heating and decoherence budget"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto* sub = app.add_subcommand(names[i], descriptions[i]);
        sub->add_option("--config", config_path, "path to the run configuration")
            ->required();
        sub->add_option("--out", out_dir,
                        "output directory (overrides output.directory)");
        if (names[i] == "noise")
            sub->add_flag("--table2", table2,
                          "emit all built-in trap models side by side");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string chosen = app.get_subcommands().front()->get_name();
    try {
        return run_command(chosen, config_path, out_dir, table2);
    } catch (const trapforge::ConfigError& err) {
        std::fprintf(stderr, "error.config: %s\n", err.what());
        return 2;
    } catch (const std::domain_error& err) {
        std::fprintf(stderr, "error.domain: %s\n", err.what());
        return 3;
    } catch (const std::invalid_argument& err) {
        std::fprintf(stderr, "error.domain: %s\n", err.what());
        return 3;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error.runtime: %s\n", err.what());
        return 4;
    }
}

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "config.hpp"

// udwforce: four-force evaluation for a uniformly moving, Gaussian-smeared
// two-level detector in free space or facing a reflecting plate.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
//             3 tolerance not met.

int main(int argc, char** argv) {
    CLI::App app{"relativistic detector four-force calculator"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", regime_flag, figure_id,
                suite = "full";
    int threads_flag = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* c = cmd->add_option("--config", config_path, "JSON run configuration");
        if (needs_config) c->required();
        cmd->add_option("--out", out_path, "output path ('-' for stdout)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--threads", threads_flag, "worker thread count");
        cmd->add_option("--regime", regime_flag, "switching regime override")
            ->check(CLI::IsMember({"finite", "long"}));
    };

    CLI::App* force_cmd = app.add_subcommand("force", "single-point four-force");
    add_common(force_cmd, true);
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter sweep");
    add_common(sweep_cmd, true);
    CLI::App* figure_cmd =
        app.add_subcommand("figure", "reproduce a catalogued figure's data");
    figure_cmd->add_option("id", figure_id, "figure id (fig1, fig2a..fig10b)")
        ->required();
    add_common(figure_cmd, false);
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the built-in verification suite");
    verify_cmd->add_option("suite", suite, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) return udwforce::cmd_verify(suite);

        if (figure_cmd->parsed()) {
            const int threads = udwforce::resolve_threads(threads_flag);
            return udwforce::cmd_figure(figure_id, out_path, threads);
        }

        udwforce::RunConfig cfg = udwforce::load_config(config_path);
        if (!regime_flag.empty())
            cfg.regime = regime_flag == "finite" ? udw::force::Regime::finite_time
                                                 : udw::force::Regime::long_time;
        if (out_path.empty() && cfg.out_path) out_path = *cfg.out_path;
        if (out_path.empty()) out_path = "-";
        if (format == "csv" && cfg.out_format) format = *cfg.out_format;
        int threads = threads_flag;
        if (threads <= 0 && cfg.threads) threads = *cfg.threads;
        threads = udwforce::resolve_threads(threads);

        if (force_cmd->parsed()) return udwforce::cmd_force(cfg, out_path, format);
        return udwforce::cmd_sweep(cfg, out_path, format, threads);
    } catch (const udw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

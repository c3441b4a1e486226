#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "harnack/commands.hpp"
#include "harnack/errors.hpp"
#include "harnack/scenario.hpp"

namespace {

int emit(const harnack::CommandOutput& out) {
    std::cout << out.output;
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp Harnack bounds for the half-Laplacian heat equation"};
    app.require_subcommand(1);

    std::string scenario_path;
    harnack::ReportOptions report_opts;
    harnack::LiYauOptions liyau_opts;
    harnack::SweepOptions sweep_opts;

    auto add_report_flags = [&](CLI::App* cmd, bool with_verify) {
        cmd->add_option("--scenario", scenario_path, "scenario file (JSON, schema 1)")
            ->required();
        cmd->add_option("--format", report_opts.format, "text | json | csv");
        cmd->add_option("--tol", report_opts.tol, "verification tolerance");
        if (with_verify)
            cmd->add_flag("--verify", report_opts.verify,
                          "run the extremal oracles and the chord identity");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "geometry and sharp bounds report");
    add_report_flags(bounds, true);

    CLI::App* identity = app.add_subcommand("identity", "chord/kernel identity check");
    add_report_flags(identity, false);

    CLI::App* widder = app.add_subcommand("widder", "solution-ratio containment check");
    add_report_flags(widder, false);

    CLI::App* liyau = app.add_subcommand("liyau", "nonlocal log-derivative table");
    liyau->add_option("--t", liyau_opts.t, "time slice (default 1)");
    liyau->add_option("--xmin", liyau_opts.xmin, "left end of the x range");
    liyau->add_option("--xmax", liyau_opts.xmax, "right end of the x range");
    liyau->add_option("--samples", liyau_opts.samples, "number of sample points");
    liyau->add_option("--convention", liyau_opts.convention, "standard | paper | both");
    liyau->add_option("--format", liyau_opts.format, "csv | text | json");
    liyau->add_option("--rel-tol", liyau_opts.quadrature.rel_tol, "quadrature tolerance");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep table");
    sweep->add_option("--scenario", scenario_path, "base scenario file")->required();
    sweep->add_option("--vary", sweep_opts.vary, "dx | t2 | dim")->required();
    sweep->add_option("--from", sweep_opts.from, "first parameter value")->required();
    sweep->add_option("--to", sweep_opts.to, "last parameter value")->required();
    sweep->add_option("--steps", sweep_opts.steps, "number of rows");
    sweep->add_option("--format", sweep_opts.format, "csv | text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (liyau->parsed()) return emit(harnack::cmd_liyau(liyau_opts));

        const harnack::Scenario sc = harnack::load_scenario(scenario_path);
        if (bounds->parsed()) return emit(harnack::cmd_bounds(sc, report_opts));
        if (identity->parsed()) return emit(harnack::cmd_identity(sc, report_opts));
        if (widder->parsed()) return emit(harnack::cmd_widder(sc, report_opts));
        if (sweep->parsed()) return emit(harnack::cmd_sweep(sc, sweep_opts));
    } catch (const harnack::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

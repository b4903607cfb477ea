#include <CLI11.hpp>
#include <iostream>

#include "hitchin/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Singular fibers of rank-2 Hitchin systems on P1 with two irregular poles: "
        "exact classification, numeric cross-checks, and wall-crossing reports"};
    app.require_subcommand(1);

    hitchin::RunConfig cfg;

    auto* classify = app.add_subcommand(
        "classify", "Report the singular-fiber configuration for one parameter set");
    classify->add_option("--params", cfg.params_input,
                         "parameter document: file path or inline JSON")
        ->required();
    classify->add_option("--weights", cfg.weights_input,
                         "parabolic weight document: file path or inline JSON");
    classify->add_option("--case", cfg.case_name,
                         "case tag; cross-checked against the parameter document");
    classify->add_option("--out", cfg.out_path, "write the JSON report to this file");

    auto* verify = app.add_subcommand(
        "verify", "Compare the classifier against the spectral-pencil numerics on "
                  "random parameter draws");
    verify->add_option("--case", cfg.case_name, "case tag to sample")->required();
    verify->add_option("--samples", cfg.samples, "number of random draws");
    verify->add_option("--seed", cfg.seed, "sampling seed");
    verify->add_option("--tol", cfg.tol, "root-residual tolerance");
    verify->add_option("--cluster-tol", cfg.cluster_tol,
                       "relative tolerance for grouping spectral points");
    verify->add_option("--out", cfg.out_path, "write the JSON report to this file");

    auto* sweep = app.add_subcommand(
        "sweep", "Tabulate fiber configurations over constructed per-branch witnesses "
                 "and random draws");
    sweep->add_option("--case", cfg.case_name, "case tag to sweep")->required();
    sweep->add_option("--samples", cfg.samples, "number of random rows");
    sweep->add_option("--seed", cfg.seed, "sampling seed");
    sweep->add_option("--branch", cfg.branch, "keep only rows on this branch");
    sweep->add_option("--out", cfg.out_path, "write the JSON table to this file");

    auto* wallcross = app.add_subcommand(
        "wallcross", "Classify across a range of extended first-puncture weights and "
                     "report every wall");
    wallcross->add_option("--params", cfg.params_input,
                          "parameter document: file path or inline JSON")
        ->required();
    wallcross->add_option("--weights", cfg.weights_input,
                          "base weight document; defaults to generic weights");
    wallcross->add_option("--from", cfg.wall_from,
                          "start of the extended-weight range (snapped to tenths)");
    wallcross->add_option("--to", cfg.wall_to,
                          "end of the extended-weight range (snapped to tenths)");
    wallcross->add_option("--out", cfg.out_path, "write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return hitchin::run(cfg, std::cout, std::cerr);
}

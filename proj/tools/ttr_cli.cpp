#include "ttr/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"tournament transitivity toolkit"};
    app.require_subcommand(1);

    ttr::CliConfig cfg;
    if (const char* env = std::getenv("TTR_CAP")) cfg.cap = std::atoi(env);

    std::string family_spec;
    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_option("--cap", cfg.cap, "exact-search vertex cap")->check(CLI::PositiveNumber);
        if (with_input) {
            sub->add_option("--family", family_spec, "family spec, e.g. path:5 or kmn:2,3");
            sub->add_option("--input", cfg.input_path, "edge-list file");
        }
    };

    auto* solve = app.add_subcommand("solve", "exact TTr (or Tr) by search");
    add_common(solve);
    solve->add_flag("--tr", cfg.solve_tr, "compute Tr instead of TTr");

    auto* verify = app.add_subcommand("verify", "check a partition file against a graph");
    add_common(verify);
    verify->add_option("--partition", cfg.partition_path, "partition file")->required();
    bool transitive_only = false;
    verify->add_flag("--transitive", transitive_only, "check plain transitivity");
    verify->add_flag("--tournament", [](int64_t) {}, "check tournament transitivity (default)");

    auto* tree = app.add_subcommand("tree", "polynomial tree algorithm");
    add_common(tree);

    auto* bcg = app.add_subcommand("bcg", "bipartite chain graph theorems");
    add_common(bcg);

    auto* formula = app.add_subcommand("formula", "closed forms for named families");
    add_common(formula);

    auto* gadget = app.add_subcommand("gadget", "hardness-reduction construction");
    add_common(gadget);
    gadget->add_option("--out-graph", cfg.out_graph, "write the gadget edge list here");
    gadget->add_option("--out-partition", cfg.out_partition, "write the lifted certificate here");

    auto* gen = app.add_subcommand("gen", "emit a family graph as an edge list");
    add_common(gen);

    auto* bounds = app.add_subcommand("bounds", "TTr bounds without search");
    add_common(bounds);

    auto* sweep = app.add_subcommand("sweep", "run the full verification corpus");
    add_common(sweep, false);
    sweep->add_option("--seed", cfg.seed, "corpus seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!family_spec.empty()) cfg.family = ttr::GraphFamily::parse(family_spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    cfg.tournament = !transitive_only;

    if (solve->parsed()) cfg.command = ttr::CliConfig::Command::Solve;
    if (verify->parsed()) cfg.command = ttr::CliConfig::Command::Verify;
    if (tree->parsed()) cfg.command = ttr::CliConfig::Command::Tree;
    if (bcg->parsed()) cfg.command = ttr::CliConfig::Command::Bcg;
    if (formula->parsed()) cfg.command = ttr::CliConfig::Command::Formula;
    if (gadget->parsed()) cfg.command = ttr::CliConfig::Command::Gadget;
    if (gen->parsed()) cfg.command = ttr::CliConfig::Command::Gen;
    if (bounds->parsed()) cfg.command = ttr::CliConfig::Command::Bounds;
    if (sweep->parsed()) cfg.command = ttr::CliConfig::Command::Sweep;

    return ttr::run(cfg, std::cout, std::cerr);
}

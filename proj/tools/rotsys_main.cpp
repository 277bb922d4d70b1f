#include <iostream>

#include <CLI11.hpp>

#include "rotsys/cli.hpp"
#include "rotsys/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rotation systems of complete-graph drawings: enumeration, SAT instances, "
                 "plane Hamiltonian structures"};
    app.require_subcommand(1);
    rotsys::cli::RunConfig cfg;

    auto add_property_flags = [&](CLI::App* sub) {
        sub->add_flag("-c,--convex", cfg.convex, "restrict to convex drawings");
        sub->add_flag("--hconvex", cfg.hconvex, "restrict to hereditarily convex drawings");
        sub->add_flag("--v4", cfg.v4, "keep even the 4-element obstruction");
        sub->add_flag("--v5", cfg.v5, "exclude only the 4-element obstruction");
        sub->add_flag("!--no-natural", cfg.natural, "drop the natural-labeling block");
    };
    auto add_task_flags = [&](CLI::App* sub) {
        sub->add_flag("--forbid-hc", cfg.forbid_hc, "forbid all plane Hamiltonian cycles");
        sub->add_flag("--forbid-hc2n3", cfg.forbid_hc2n3,
                      "forbid plane Hamiltonian subdrawings on 2n-3 edges");
        sub->add_flag("--unextendable-hc", cfg.unextendable_hc,
                      "assert a plane Hamiltonian cycle with no 2n-3 extension");
        sub->add_option("--matching", cfg.matching_k,
                        "assert every plane Hamiltonian cycle crosses the matching of size k");
        sub->add_flag("--all-edges-crossed", cfg.all_edges_crossed,
                      "assert every edge is crossed");
        sub->add_option("--empty-at-most", cfg.empty_at_most,
                        "assert at most k empty triangles");
        sub->add_option("--time-limit", cfg.time_limit, "solver wall-clock budget in seconds");
        sub->add_option("--cycle-bound", cfg.cycle_enumeration_bound,
                        "cap for explicit Hamiltonian-cycle enumeration");
        sub->add_option("--expect", cfg.expect, "fail unless the result is sat or unsat");
    };

    CLI::App* find = app.add_subcommand("find", "build and solve a rotation-system instance");
    find->add_option("n", cfg.n, "number of vertices")->required();
    add_property_flags(find);
    add_task_flags(find);
    find->add_flag("-a,--all", cfg.enumerate, "enumerate all solutions");
    find->add_flag("-l,--canonical", cfg.canonical_only,
                   "keep only lexicographically minimal solutions");
    find->add_flag("--check-crossing-pairs", cfg.crossing_pair_check,
                   "verify crossing pairs identify systems up to reflection");
    find->add_option("--nested-lemma-part", cfg.nested_lemma_part,
                     "check the bad-edge structure lemma (part 1 or 2)");
    find->add_option("--case", cfg.nested_lemma_case, "case for part 2");
    find->add_option("--cnf-out", cfg.cnf_out, "export the instance as DIMACS CNF");
    find->add_option("-o,--out", cfg.corpus_out, "write solutions as JSON lines");

    CLI::App* draw = app.add_subcommand("drawability",
                                        "decide drawability via the planarity certificate");
    draw->add_option("--in", cfg.corpus_in, "corpus of rotation systems (JSON lines)")
        ->required();
    draw->add_option("--planarization-out", cfg.planarization_out,
                     "prefix for planarization JSON files");

    CLI::App* hamc = app.add_subcommand("hamcycle",
                                        "construct and verify star-avoiding plane "
                                        "Hamiltonian cycles on convex drawings");
    hamc->add_option("--in", cfg.corpus_in, "corpus of rotation systems");
    hamc->add_option("--random-geometric", cfg.random_n,
                     "use a random point set of this size instead");
    hamc->add_option("--seed", cfg.seed, "random seed");
    hamc->add_option("--star", cfg.star, "star vertex (default: all)");
    hamc->add_option("--report", cfg.report_out, "verification report (JSON lines)");

    CLI::App* hamp = app.add_subcommand("hampath",
                                        "construct and verify plane Hamiltonian paths "
                                        "through a prescribed edge");
    hamp->add_option("--in", cfg.corpus_in, "corpus of rotation systems");
    hamp->add_option("--random-geometric", cfg.random_n, "random point set size");
    hamp->add_option("--seed", cfg.seed, "random seed");
    hamp->add_option("--edge", [&cfg](const std::vector<std::string>& vals) {
        return sscanf(vals[0].c_str(), "%d,%d", &cfg.edge_u, &cfg.edge_v) == 2;
    }, "prescribed edge u,v");
    hamp->add_flag("--all-edges", cfg.all_edges, "try every edge");
    hamp->add_flag("--oracle-check", cfg.oracle_check,
                   "confirm each path with the exhaustive search");
    hamp->add_option("--oracle-bound", cfg.oracle_bound,
                     "largest n the exhaustive search may touch");
    hamp->add_option("--report", cfg.report_out, "verification report (JSON lines)");

    CLI::App* cert = app.add_subcommand("certify",
                                        "solve an unsatisfiable instance with a DRAT proof "
                                        "and check the proof");
    cert->add_option("n", cfg.n, "number of vertices")->required();
    add_property_flags(cert);
    add_task_flags(cert);
    cert->add_option("--dir", cfg.certificate_dir, "output directory");

    CLI::App* rep = app.add_subcommand("reproduce", "run a named verification suite");
    rep->add_option("suite", cfg.suite, "suite name (see --list)");
    bool list_suites = false;
    rep->add_flag("--list", list_suites, "list available suites");

    CLI::App* boot = app.add_subcommand("bootstrap",
                                        "re-derive the obstruction catalog from scratch");
    boot->add_option("-o,--out", cfg.catalog_out, "write the catalog as JSON lines");

    CLI11_PARSE(app, argc, argv);

    if (rep->parsed() && list_suites) {
        for (const auto& s : rotsys::suites::registry())
            std::cout << s.name << (s.extended ? " (extended)" : "") << "  -  "
                      << s.description << "\n";
        return 0;
    }

    for (CLI::App* sub : {find, draw, hamc, hamp, cert, rep, boot})
        if (sub->parsed()) cfg.command = sub->get_name();
    return rotsys::cli::run(cfg, std::cout, std::cerr);
}

#pragma once

#include <iosfwd>
#include <string>

namespace rotsys {
namespace cli {

/// One parsed invocation. The front end fills this in; run() validates it,
/// dispatches and reports. Exit codes: 0 completed with the expected outcome,
/// 1 property violated or unexpected solver status, 2 configuration or tool
/// error.
struct RunConfig {
    std::string command;  // find | hamcycle | hampath | drawability | certify |
                          // reproduce | bootstrap

    int n = 0;

    // Property blocks.
    bool convex = false;
    bool hconvex = false;
    bool v4 = false;  // do not exclude the 4-element obstruction
    bool v5 = false;  // exclude only the 4-element obstruction
    bool natural = true;

    // Task blocks, mutually exclusive.
    bool forbid_hc = false;
    bool forbid_hc2n3 = false;
    bool unextendable_hc = false;
    int matching_k = -1;
    bool all_edges_crossed = false;
    int empty_at_most = -1;
    bool crossing_pair_check = false;
    int nested_lemma_part = 0;  // 1 or 2
    int nested_lemma_case = 0;  // 1..3 with part 2

    bool enumerate = false;
    bool canonical_only = false;

    // I/O.
    std::string cnf_out;
    std::string corpus_in;
    std::string corpus_out;
    std::string report_out;
    std::string certificate_dir = "certificates";
    std::string planarization_out;
    std::string catalog_out;

    // Budgets and bounds.
    double time_limit = -1;
    int oracle_bound = 10;
    int cycle_enumeration_bound = 10;

    // hamcycle / hampath inputs.
    int star = 0;  // 0: every star vertex
    int random_n = 0;
    std::uint64_t seed = 1;
    int edge_u = 0, edge_v = 0;
    bool all_edges = false;
    bool oracle_check = false;  // confirm paths with the exhaustive search

    std::string expect;  // "", "sat", "unsat"
    std::string suite;   // reproduce
};

// Throws ValidationError on contradictory flags, before any work happens.
void validate(const RunConfig& cfg);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace rotsys

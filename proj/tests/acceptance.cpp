// Acceptance battery: one pass/fail line per criterion, nonzero exit when
// anything fails. Criteria can be filtered by number on the command line,
// e.g. "rotsys_acceptance 1 9 12".

#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <set>
#include <vector>

#include "rotsys/suites.hpp"

using namespace rotsys;

namespace {

struct Criterion {
    int number;
    const char* title;
    void (*run)(const suites::Sink&);
};

void run_classification(const suites::Sink& s) { suites::classification(s); }
void run_drawability(const suites::Sink& s) { suites::drawability_agreement(s); }
void run_rafla(const suites::Sink& s) { suites::rafla_small(s, 8); }
void run_hc2n3(const suites::Sink& s) { suites::hamiltonian_2n3(s, 7); }
void run_uncrossed(const suites::Sink& s) { suites::uncrossed_edges(s); }
void run_empty(const suites::Sink& s) { suites::empty_triangle_bounds(s, 7); }
void run_nested(const suites::Sink& s) { suites::nested_lemma(s); }
void run_algorithm1(const suites::Sink& s) { suites::algorithm1(s, 8, true); }
void run_hampath(const suites::Sink& s) { suites::ham_paths(s, 7); }
void run_crossing_pairs(const suites::Sink& s) { suites::crossing_pairs(s); }
void run_oracle(const suites::Sink& s) { suites::oracle_equivalence(s); }
void run_planarity(const suites::Sink& s) { suites::planarity_fixed(s); }
void run_counterexamples(const suites::Sink& s) { suites::counterexamples(s); }

const Criterion kCriteria[] = {
    {1, "classification counts (3 / 7 / 5 / 102)", run_classification},
    {2, "drawability: certificate solver vs obstruction test", run_drawability},
    {3, "plane Hamiltonian cycle exists, n=3..8", run_rafla},
    {4, "plane Hamiltonian subdrawing on 2n-3 edges, n=4..7", run_hc2n3},
    {5, "uncrossed edges: bounds at n<=7, witness at n=8, convex n=8", run_uncrossed},
    {6, "empty triangles: at least 2n-4, witness recount, n=4..7", run_empty},
    {7, "bad-edge structure checks on convex enumerations", run_nested},
    {8, "star-avoiding Hamiltonian cycles: convex n<=8, geometric scaling", run_algorithm1},
    {9, "Hamiltonian path through every edge, convex n<=7", run_hampath},
    {10, "crossing pairs identify systems up to reflection", run_crossing_pairs},
    {11, "solver enumeration equals brute force, n=4,5", run_oracle},
    {12, "fixed-graph planarity: K4 / K5 / K33", run_planarity},
    {13, "known counterexamples on five vertices", run_counterexamples},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failed_criteria = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const Criterion& crit : kCriteria) {
        if (!wanted.empty() && !wanted.count(crit.number)) continue;
        int failures = 0;
        std::vector<std::string> details;
        auto tc = std::chrono::steady_clock::now();
        suites::Sink sink = [&](const suites::CheckResult& r) {
            if (!r.pass) {
                ++failures;
                details.push_back(r.name + (r.detail.empty() ? "" : " [" + r.detail + "]"));
            }
            std::printf("    %s  %s%s%s  (%.2fs)\n", r.pass ? "ok  " : "FAIL",
                        r.name.c_str(), r.detail.empty() ? "" : "  -- ",
                        r.detail.c_str(), r.seconds);
            std::fflush(stdout);
        };
        std::printf("criterion %d: %s\n", crit.number, crit.title);
        std::fflush(stdout);
        try {
            crit.run(sink);
        } catch (const std::exception& e) {
            ++failures;
            details.push_back(std::string("exception: ") + e.what());
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - tc).count();
        if (failures == 0) {
            std::printf("PASS criterion %d: %s (%.1fs)\n", crit.number, crit.title, dt);
        } else {
            ++failed_criteria;
            std::printf("FAIL criterion %d: %s (%.1fs)\n", crit.number, crit.title, dt);
            for (const auto& d : details) std::printf("      %s\n", d.c_str());
        }
        std::fflush(stdout);
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %d criterion(s) failed, %.1fs total\n",
                failed_criteria == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failed_criteria,
                total);
    return failed_criteria == 0 ? 0 : 1;
}

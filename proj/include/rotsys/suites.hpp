#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rotsys/encode.hpp"
#include "rotsys/rotation_system.hpp"

namespace rotsys {
namespace suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

using Sink = std::function<void(const CheckResult&)>;

// Canonical systems with the given property blocks, via SAT enumeration with
// the canonical filter. Results are memoized per (n, options) for the
// lifetime of the process.
const std::vector<RotationSystem>& enumerate_canonical(int n, const encode::EncodeOptions& opts);

// Crossing-pair uniqueness over all labeled pi4-free systems on n elements.
bool check_crossing_pairs(int n);

// Default verification batteries, one per acceptance concern.
void classification(const Sink& sink);
void drawability_agreement(const Sink& sink);
void rafla_small(const Sink& sink, int max_n = 8);
void hamiltonian_2n3(const Sink& sink, int max_n = 7);
void uncrossed_edges(const Sink& sink);
void empty_triangle_bounds(const Sink& sink, int max_n = 7);
void nested_lemma(const Sink& sink);
void algorithm1(const Sink& sink, int max_n = 8, bool with_timing = true);
void ham_paths(const Sink& sink, int max_n = 7);
void crossing_pairs(const Sink& sink);
void oracle_equivalence(const Sink& sink);
void planarity_fixed(const Sink& sink);
void counterexamples(const Sink& sink);

// Long-running confirmations, opt-in by name; see the registry below.
void rafla_extended(const Sink& sink, int n);
void hamiltonian_2n3_extended(const Sink& sink, int n);
void unextendable_hc(const Sink& sink, int max_n);
void hoffmann_toth(const Sink& sink, int max_n);
void all_edges_crossed_convex(const Sink& sink, int n, bool hconvex, bool expect_sat);
void empty_triangles_extended(const Sink& sink, int n);

struct SuiteInfo {
    std::string name;
    std::string description;
    bool extended = false;
};

const std::vector<SuiteInfo>& registry();

// Runs one registered suite; returns the number of failed checks.
int run_suite(const std::string& name, std::ostream& out);

}  // namespace suites
}  // namespace rotsys

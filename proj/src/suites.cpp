#include "rotsys/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "rotsys/canonical.hpp"
#include "rotsys/draw.hpp"
#include "rotsys/geometry.hpp"
#include "rotsys/hamconvex.hpp"
#include "rotsys/predicates.hpp"
#include "rotsys/solve.hpp"

namespace rotsys {
namespace suites {

namespace {

class Timer {
  public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void emit(const Sink& sink, const std::string& name, bool pass, const std::string& detail,
          double seconds) {
    sink(CheckResult{name, pass, detail, seconds});
}

encode::EncodeOptions base_opts(bool convex = false, bool hconvex = false) {
    encode::EncodeOptions opts;
    opts.convex = convex;
    opts.hconvex = hconvex;
    return opts;
}

encode::EncodeOptions crossing_opts(bool convex = false) {
    encode::EncodeOptions opts = base_opts(convex);
    opts.crossing_vars = true;
    return opts;
}

solve::Status solve_status(const CnfInstance& inst) {
    return solve::solve_instance(inst).status;
}

std::string status_name(solve::Status s) {
    switch (s) {
        case solve::Status::Sat: return "sat";
        case solve::Status::Unsat: return "unsat";
        default: return "limit";
    }
}

}  // namespace

const std::vector<RotationSystem>& enumerate_canonical(int n,
                                                       const encode::EncodeOptions& opts) {
    using MemoKey = std::tuple<int, bool, bool, bool, bool>;
    static std::map<MemoKey, std::vector<RotationSystem>> memo;
    MemoKey k{n, opts.forbid_pi4, opts.forbid_pi5, opts.convex, opts.hconvex};
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    encode::EncodeOptions run = opts;
    run.natural = true;
    run.crossing_vars = false;
    CnfInstance inst = encode::new_instance(n, run);
    std::vector<RotationSystem> out;
    solve::enumerate_all(inst, true, [&](const RotationSystem& rs, const std::vector<bool>&) {
        out.push_back(rs);
        return true;
    });
    std::sort(out.begin(), out.end());
    return memo.emplace(k, std::move(out)).first->second;
}

bool check_crossing_pairs(int n) {
    // Labeled systems grouped by crossing relation; every group must be a
    // system together with its reflection.
    std::map<std::vector<EdgePair>, std::vector<RotationSystem>> groups;
    for_each_pre_rotation_system(n, [&](const RotationSystem& rs) {
        if (contains_pi4(rs)) return;
        groups[crossing_relation(rs).pairs].push_back(rs);
    });
    for (const auto& [pairs, members] : groups) {
        if (members.size() > 2) return false;
        if (members.size() == 2 && reflect(members[0]) != members[1]) return false;
        if (members.size() == 1 && reflect(members[0]) != members[0]) {
            // The mirror partner must carry the same pairs; it lives in
            // another group only if the map is inconsistent.
            auto it = groups.find(crossing_relation(reflect(members[0])).pairs);
            if (it == groups.end() || &it->second == &members) return false;
        }
    }
    return true;
}

void classification(const Sink& sink) {
    struct Row {
        const char* name;
        int n;
        encode::EncodeOptions opts;
        int expected;
    };
    encode::EncodeOptions v4 = base_opts();
    v4.forbid_pi4 = v4.forbid_pi5 = false;
    encode::EncodeOptions v5 = base_opts();
    v5.forbid_pi5 = false;
    const Row rows[] = {
        {"classification: canonical pre-rotation systems, n=4", 4, v4, 3},
        {"classification: canonical pi4-free systems, n=5", 5, v5, 7},
        {"classification: canonical drawable systems, n=5", 5, base_opts(), 5},
        {"classification: canonical drawable systems, n=6", 6, base_opts(), 102},
    };
    for (const Row& row : rows) {
        Timer t;
        int got = (int)enumerate_canonical(row.n, row.opts).size();
        emit(sink, row.name, got == row.expected,
             "expected " + std::to_string(row.expected) + ", got " + std::to_string(got),
             t.elapsed());
    }
}

void drawability_agreement(const Sink& sink) {
    {
        Timer t;
        encode::EncodeOptions v5 = base_opts();
        v5.forbid_pi5 = false;
        int sat = 0, unsat = 0, disagreements = 0;
        for (const RotationSystem& rs : enumerate_canonical(5, v5)) {
            bool by_sat = draw::is_drawable_sat(rs);
            bool by_obstruction = is_drawable(rs);
            if (by_sat != by_obstruction) ++disagreements;
            (by_sat ? sat : unsat)++;
        }
        emit(sink, "drawability: certificate vs obstruction verdicts, n=5",
             sat == 5 && unsat == 2 && disagreements == 0,
             std::to_string(sat) + " drawable / " + std::to_string(unsat) + " not, " +
                 std::to_string(disagreements) + " disagreements",
             t.elapsed());
    }
    {
        Timer t;
        int sat = 0, disagreements = 0;
        for (const RotationSystem& rs : enumerate_canonical(6, base_opts())) {
            bool by_sat = draw::is_drawable_sat(rs);
            if (!by_sat || !is_drawable(rs)) ++disagreements;
            if (by_sat) ++sat;
        }
        emit(sink, "drawability: certificate vs obstruction verdicts, n=6",
             sat == 102 && disagreements == 0,
             std::to_string(sat) + " of 102 drawable, " + std::to_string(disagreements) +
                 " disagreements",
             t.elapsed());
    }
}

void rafla_small(const Sink& sink, int max_n) {
    for (int n = 3; n <= max_n; ++n) {
        Timer t;
        CnfInstance inst = encode::new_instance(n, crossing_opts());
        encode::forbid_plane_hamiltonian_cycle(inst);
        solve::Status st = solve_status(inst);
        emit(sink, "plane Hamiltonian cycle always exists, n=" + std::to_string(n),
             st == solve::Status::Unsat, status_name(st), t.elapsed());
    }
}

void hamiltonian_2n3(const Sink& sink, int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        Timer t;
        CnfInstance inst = encode::new_instance(n, crossing_opts());
        encode::forbid_plane_hamiltonian_2n3(inst, std::max(8, max_n));
        solve::Status st = solve_status(inst);
        emit(sink,
             "plane Hamiltonian subdrawing on 2n-3 edges exists, n=" + std::to_string(n),
             st == solve::Status::Unsat, status_name(st), t.elapsed());
    }
}

void uncrossed_edges(const Sink& sink) {
    for (int n = 4; n <= 7; ++n) {
        Timer t;
        CnfInstance inst = encode::new_instance(n, crossing_opts());
        encode::assert_all_edges_crossed(inst);
        solve::Status st = solve_status(inst);
        emit(sink, "uncrossed edge exists in every drawing, n=" + std::to_string(n),
             st == solve::Status::Unsat, status_name(st), t.elapsed());
    }
    {
        Timer t;
        CnfInstance inst = encode::new_instance(8, crossing_opts());
        encode::assert_all_edges_crossed(inst);
        solve::SolveResult res = solve::solve_instance(inst);
        bool ok = res.status == solve::Status::Sat;
        std::string detail = status_name(res.status);
        if (ok) {
            RotationSystem witness = solve::decode(inst, res.model);
            ok = is_drawable(witness) && !has_uncrossed_edge(witness);
            detail += ok ? ", witness re-verified" : ", witness fails re-check";
        }
        emit(sink, "all-edges-crossed drawing exists, n=8", ok, detail, t.elapsed());
    }
    {
        Timer t;
        CnfInstance inst = encode::new_instance(8, crossing_opts(true));
        encode::assert_all_edges_crossed(inst);
        solve::Status st = solve_status(inst);
        emit(sink, "uncrossed edge exists in every convex drawing, n=8",
             st == solve::Status::Unsat, status_name(st), t.elapsed());
    }
}

void empty_triangle_bounds(const Sink& sink, int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        Timer t;
        CnfInstance inst = encode::new_instance(n, crossing_opts());
        encode::assert_empty_triangles_atmost(inst, 2 * n - 5);
        solve::Status st = solve_status(inst);
        emit(sink, "at least 2n-4 empty triangles, n=" + std::to_string(n),
             st == solve::Status::Unsat, status_name(st), t.elapsed());

        Timer t2;
        CnfInstance sat_inst = encode::new_instance(n, crossing_opts());
        encode::assert_empty_triangles_atmost(sat_inst, 2 * n - 4);
        solve::SolveResult res = solve::solve_instance(sat_inst);
        bool ok = res.status == solve::Status::Sat;
        std::string detail = status_name(res.status);
        if (ok) {
            RotationSystem witness = solve::decode(sat_inst, res.model);
            int core_count = empty_triangles(witness).count;
            int model_count = 0;
            for_each_subset(n, 3, [&](const std::vector<Vertex>& tri) {
                if (res.model[sat_inst.var(key('T', {tri[0], tri[1], tri[2]}))]) ++model_count;
            });
            ok = core_count == model_count && core_count <= 2 * n - 4;
            detail += ", core recount " + std::to_string(core_count) + " vs model " +
                      std::to_string(model_count);
        }
        emit(sink, "witness with exactly 2n-4 empty triangles, n=" + std::to_string(n), ok,
             detail, t2.elapsed());
    }
}

void nested_lemma(const Sink& sink) {
    struct Row {
        int n;
        hamconvex::NestedLemmaCheck check;
        const char* name;
    };
    const Row rows[] = {
        {5, hamconvex::NestedLemmaCheck::Part1, "nested bad edges part 1, n=5"},
        {6, hamconvex::NestedLemmaCheck::Part1, "nested bad edges part 1, n=6"},
        {7, hamconvex::NestedLemmaCheck::Part1, "nested bad edges part 1, n=7"},
        {7, hamconvex::NestedLemmaCheck::Part2Case1, "nested bad edges part 2 case 1, n=7"},
        {7, hamconvex::NestedLemmaCheck::Part2Case2, "nested bad edges part 2 case 2, n=7"},
        {6, hamconvex::NestedLemmaCheck::Part2Case3, "nested bad edges part 2 case 3, n=6"},
    };
    for (const Row& row : rows) {
        Timer t;
        int violations = 0, total = 0;
        for (const RotationSystem& rs : enumerate_canonical(row.n, base_opts(true))) {
            ++total;
            if (!hamconvex::check_nested_lemma(rs, row.check)) ++violations;
        }
        emit(sink, row.name, violations == 0,
             std::to_string(total) + " convex systems, " + std::to_string(violations) +
                 " violations",
             t.elapsed());
    }
}

void algorithm1(const Sink& sink, int max_n, bool with_timing) {
    for (int n = 4; n <= max_n; ++n) {
        Timer t;
        const auto& corpus = enumerate_canonical(n, n >= 5 ? base_opts(true) : base_opts());
        int failures = 0, hconvex_failures = 0, total = 0, hconvex_total = 0;
        for (const RotationSystem& rs : corpus) {
            if (n >= 5 && !is_convex(rs)) continue;
            bool hc = is_hconvex(rs);
            for (Vertex star = 1; star <= n; ++star) {
                ++total;
                try {
                    hamconvex::HamCycleResult res = hamconvex::plane_hc_convex(rs, star);
                    hamconvex::VerifyReport rep = hamconvex::verify_hc(rs, star, res);
                    if (!rep.pass()) ++failures;
                    if (hc) {
                        ++hconvex_total;
                        if (!rep.rotation_order) ++hconvex_failures;
                    }
                } catch (const Error&) {
                    ++failures;
                }
            }
        }
        emit(sink, "star-avoiding plane Hamiltonian cycle, convex systems, n=" +
                       std::to_string(n),
             failures == 0,
             std::to_string(total) + " (system, star) pairs, " + std::to_string(failures) +
                 " failures",
             t.elapsed());
        emit(sink,
             "rotation-order traversal on hereditarily convex systems, n=" + std::to_string(n),
             hconvex_failures == 0,
             std::to_string(hconvex_total) + " pairs, " + std::to_string(hconvex_failures) +
                 " failures",
             0.0);
    }

    if (!with_timing) return;
    // Geometric instances: correctness at scale plus the quadratic trend.
    std::vector<int> sizes{100, 200, 400};
    std::vector<double> times;
    bool all_verified = true;
    Timer t_all;
    for (int n : sizes) {
        RotationSystem rs = rotation_from_points(random_points_general_position(n, 20240 + n));
        double best = -1;
        for (Vertex star : {1, n / 2, n}) {
            Timer t;
            hamconvex::HamCycleResult res = hamconvex::plane_hc_convex(rs, star);
            double dt = t.elapsed();
            if (best < 0 || dt < best) best = dt;
            if (!hamconvex::verify_hc(rs, star, res).pass(true)) all_verified = false;
        }
        times.push_back(best);
    }
    double r1 = times[1] / std::max(times[0], 1e-9);
    double r2 = times[2] / std::max(times[1], 1e-9);
    std::ostringstream detail;
    detail << "times " << times[0] << "s/" << times[1] << "s/" << times[2] << "s, ratios "
           << r1 << ", " << r2;
    emit(sink, "geometric instances n=100,200,400 verify with quadratic scaling",
         all_verified && r1 <= 6.0 && r2 <= 6.0, detail.str(), t_all.elapsed());
}

void ham_paths(const Sink& sink, int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        Timer t;
        const auto& corpus = enumerate_canonical(n, n >= 5 ? base_opts(true) : base_opts());
        int failures = 0, total = 0;
        for (const RotationSystem& rs : corpus) {
            if (n >= 5 && !is_convex(rs)) continue;
            for (Vertex u = 1; u <= n; ++u)
                for (Vertex v = u + 1; v <= n; ++v) {
                    ++total;
                    try {
                        hamconvex::HamCycleResult path =
                            hamconvex::plane_hp_with_edge(rs, Edge(u, v));
                        if (!hamconvex::verify_plane_path(rs, path, Edge(u, v))) ++failures;
                    } catch (const Error&) {
                        ++failures;
                    }
                }
        }
        emit(sink, "plane Hamiltonian path through every edge, convex systems, n=" +
                       std::to_string(n),
             failures == 0,
             std::to_string(total) + " (system, edge) pairs, " + std::to_string(failures) +
                 " failures",
             t.elapsed());
    }
}

void crossing_pairs(const Sink& sink) {
    for (int n : {4, 5}) {
        Timer t;
        bool ok = check_crossing_pairs(n);
        emit(sink, "crossing pairs identify systems up to reflection, n=" + std::to_string(n),
             ok, ok ? "all groups are mirror pairs" : "collision found", t.elapsed());
    }
}

void oracle_equivalence(const Sink& sink) {
    for (int n : {4, 5}) {
        for (int prop = 0; prop < 3; ++prop) {
            Timer t;
            encode::EncodeOptions opts =
                prop == 0 ? base_opts() : prop == 1 ? base_opts(true) : base_opts(true, true);
            if (n == 4) {
                opts.forbid_pi5 = false;
                opts.convex = false;
                opts.hconvex = false;
                if (prop > 0) {
                    // On 4 elements every drawable system is convex; the
                    // blocks add nothing and the comparison reduces to the
                    // drawable case.
                }
            }
            std::vector<RotationSystem> brute;
            for_each_pre_rotation_system(n, [&](const RotationSystem& rs) {
                bool keep = prop == 0   ? is_drawable(rs)
                            : prop == 1 ? is_drawable(rs) && is_convex(rs)
                                        : is_drawable(rs) && is_hconvex(rs);
                if (keep && is_canonical(rs)) brute.push_back(rs);
            });
            std::sort(brute.begin(), brute.end());
            const auto& sat = enumerate_canonical(n, opts);
            const char* names[] = {"drawable", "convex", "h-convex"};
            emit(sink,
                 std::string("solver enumeration equals brute force, ") + names[prop] +
                     ", n=" + std::to_string(n),
                 brute == sat,
                 std::to_string(brute.size()) + " brute vs " + std::to_string(sat.size()) +
                     " solver",
                 t.elapsed());
        }
    }
}

void planarity_fixed(const Sink& sink) {
    Timer t;
    draw::SimpleGraph k4{4, {}}, k5{5, {}}, k33{6, {}};
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) k4.edges.push_back({u, v});
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) k5.edges.push_back({u, v});
    for (int u = 1; u <= 3; ++u)
        for (int v = 4; v <= 6; ++v) k33.edges.push_back({u, v});
    bool ok = draw::planarity_fixed_graph(k4) && !draw::planarity_fixed_graph(k5) &&
              !draw::planarity_fixed_graph(k33);
    emit(sink, "order-dimension planarity: K4 planar, K5 and K33 not", ok, "", t.elapsed());
}

namespace {

// Non-star-crossing non-star edges for the given star vertex.
std::vector<Edge> usable_candidates(const RotationSystem& rs, Vertex star) {
    std::vector<Edge> out;
    int n = rs.n();
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            if (u == star || v == star) continue;
            Edge e(u, v);
            bool crossing_star = false;
            for (Vertex x = 1; x <= n && !crossing_star; ++x)
                if (x != star && !e.contains(x) && edges_cross(rs, e, Edge(star, x)))
                    crossing_star = true;
            if (!crossing_star) out.push_back(e);
        }
    return out;
}

// Distinct labeled variants of the twisted system.
std::vector<RotationSystem> twisted_labelings() {
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    std::vector<RotationSystem> out;
    std::vector<Vertex> perm{1, 2, 3, 4, 5};
    std::set<RotationSystem> seen;
    do {
        for (int refl = 0; refl < 2; ++refl) {
            RotationSystem rs =
                relabel(refl ? reflect(cat.twisted_T5) : cat.twisted_T5, perm);
            if (seen.insert(rs).second) out.push_back(rs);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

void counterexamples(const Sink& sink) {
    {
        Timer t;
        // Convex-position system labeled along the hull: {1,3} is a diagonal.
        RotationSystem c5 =
            rotation_from_points({{0, 0}, {10, 0}, {13, 9}, {5, 15}, {-3, 9}});
        bool no_cycle = !brute_force_plane_hamiltonian(c5, HamMode::Cycle, Edge(1, 3));
        bool has_path = brute_force_plane_hamiltonian(c5, HamMode::Path, Edge(1, 3)).has_value();
        emit(sink, "convex position: no plane Hamiltonian cycle through the diagonal {1,3}",
             no_cycle && has_path,
             no_cycle ? "cycle impossible, path exists" : "found an unexpected cycle",
             t.elapsed());
    }
    std::vector<RotationSystem> labelings = twisted_labelings();
    {
        Timer t;
        // With its picture's labels, the twisted system leaves only the edges
        // {1,2} and {2,3} plus their companion {2,4} usable next to star 5;
        // three edges through vertex 2 cannot carry a Hamiltonian cycle, so
        // the star-avoiding construction has no analogue here.
        int matching = 0;
        for (const RotationSystem& rs : labelings) {
            std::vector<Edge> cand = usable_candidates(rs, 5);
            if (cand == std::vector<Edge>{Edge(1, 2), Edge(2, 3), Edge(2, 4)}) ++matching;
        }
        emit(sink,
             "twisted system, star 5: only {1,2},{2,3} and their companion {2,4} usable",
             matching > 0, std::to_string(matching) + " labelings match", t.elapsed());
    }
    {
        Timer t;
        // With the other picture's labels, {1,5} lies on no plane Hamiltonian
        // path; exactly one edge is blocked in every labeling.
        int matching = 0;
        bool always_exactly_one = true;
        for (const RotationSystem& rs : labelings) {
            std::vector<Edge> blocked;
            for (Vertex u = 1; u <= 5; ++u)
                for (Vertex v = u + 1; v <= 5; ++v)
                    if (!brute_force_plane_hamiltonian(rs, HamMode::Path, Edge(u, v)))
                        blocked.push_back(Edge(u, v));
            if (blocked.size() != 1) always_exactly_one = false;
            if (blocked == std::vector<Edge>{Edge(1, 5)}) ++matching;
        }
        emit(sink, "twisted system: {1,5} lies on no plane Hamiltonian path",
             matching > 0 && always_exactly_one,
             std::to_string(matching) + " labelings match; always exactly one blocked edge",
             t.elapsed());
    }
}

void rafla_extended(const Sink& sink, int n) {
    Timer t;
    CnfInstance inst = encode::new_instance(n, crossing_opts());
    encode::forbid_plane_hamiltonian_cycle(inst, n);
    solve::Status st = solve_status(inst);
    emit(sink, "plane Hamiltonian cycle always exists, n=" + std::to_string(n),
         st == solve::Status::Unsat, status_name(st), t.elapsed());
}

void hamiltonian_2n3_extended(const Sink& sink, int n) {
    Timer t;
    CnfInstance inst = encode::new_instance(n, crossing_opts());
    encode::forbid_plane_hamiltonian_2n3(inst, n);
    solve::Status st = solve_status(inst);
    emit(sink, "plane Hamiltonian subdrawing on 2n-3 edges exists, n=" + std::to_string(n),
         st == solve::Status::Unsat, status_name(st), t.elapsed());
}

void unextendable_hc(const Sink& sink, int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        Timer t;
        encode::EncodeOptions opts = crossing_opts(true);
        opts.natural = false;
        CnfInstance inst = encode::new_instance(n, opts);
        encode::assert_unextendable_fixed_hc(inst);
        solve::Status st = solve_status(inst);
        emit(sink,
             "every plane Hamiltonian cycle extends to 2n-3 edges, convex, n=" +
                 std::to_string(n),
             st == solve::Status::Unsat, status_name(st), t.elapsed());
    }
    {
        Timer t;
        encode::EncodeOptions opts = crossing_opts();
        opts.natural = false;
        CnfInstance inst = encode::new_instance(8, opts);
        encode::assert_unextendable_fixed_hc(inst);
        solve::Status st = solve_status(inst);
        emit(sink, "unextendable plane Hamiltonian cycle exists, general, n=8",
             st == solve::Status::Sat, status_name(st), t.elapsed());
    }
}

void hoffmann_toth(const Sink& sink, int max_n) {
    for (int n = 4; n <= max_n; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            Timer t;
            encode::EncodeOptions opts = crossing_opts(true);
            opts.natural = false;
            CnfInstance inst = encode::new_instance(n, opts);
            encode::assert_matching_unavoidable(inst, k, std::max(11, n));
            solve::Status st = solve_status(inst);
            emit(sink,
                 "plane Hamiltonian cycle avoiding the matching, convex, n=" +
                     std::to_string(n) + " k=" + std::to_string(k),
                 st == solve::Status::Unsat, status_name(st), t.elapsed());
        }
}

void all_edges_crossed_convex(const Sink& sink, int n, bool hconvex, bool expect_sat) {
    Timer t;
    encode::EncodeOptions opts = crossing_opts(true);
    opts.hconvex = hconvex;
    CnfInstance inst = encode::new_instance(n, opts);
    encode::assert_all_edges_crossed(inst);
    solve::Status st = solve_status(inst);
    emit(sink,
         std::string(hconvex ? "h-convex" : "convex") + " all-edges-crossed drawing, n=" +
             std::to_string(n) + (expect_sat ? " (expect sat)" : " (expect unsat)"),
         st == (expect_sat ? solve::Status::Sat : solve::Status::Unsat), status_name(st),
         t.elapsed());
}

void empty_triangles_extended(const Sink& sink, int n) {
    Timer t;
    CnfInstance inst = encode::new_instance(n, crossing_opts());
    encode::assert_empty_triangles_atmost(inst, 2 * n - 5);
    solve::Status st = solve_status(inst);
    emit(sink, "at least 2n-4 empty triangles, n=" + std::to_string(n),
         st == solve::Status::Unsat, status_name(st), t.elapsed());
}

const std::vector<SuiteInfo>& registry() {
    static const std::vector<SuiteInfo> suites = {
        {"classification", "canonical counts on 4, 5 and 6 elements", false},
        {"drawability", "certificate solver vs obstruction test, n=5 and 6", false},
        {"rafla", "no drawing without a plane Hamiltonian cycle, n=3..8", false},
        {"hc2n3", "plane Hamiltonian subdrawings on 2n-3 edges, n=4..7", false},
        {"uncrossed", "uncrossed-edge bounds, n=4..8", false},
        {"empty-triangles", "empty-triangle bounds, n=4..7", false},
        {"nested-lemma", "bad-edge structure checks on convex systems", false},
        {"algorithm1", "star-avoiding Hamiltonian cycles on convex systems", false},
        {"hampath", "Hamiltonian paths through a prescribed edge", false},
        {"crossing-pairs", "crossing pairs determine the system, n=4, 5", false},
        {"oracle-equivalence", "solver enumeration vs brute force, n=4, 5", false},
        {"planarity", "fixed-graph planarity sanity checks", false},
        {"counterexamples", "known negative examples on 5 vertices", false},
        {"all", "every default suite above", false},
        {"rafla-extended", "plane Hamiltonian cycles, n=9 and 10 (CPU days)", true},
        {"hc2n3-extended", "2n-3 subdrawings, n=8 (CPU days)", true},
        {"unextendable", "cycle extension to 2n-3 edges, convex n<=8 and general n=8", true},
        {"hoffmann-toth", "matching-avoiding Hamiltonian cycles, convex n<=11 (CPU days)",
         true},
        {"hconvex-aec", "all-edges-crossed convex bounds, n=9..11 (long)", true},
        {"empty-triangles-extended", "empty-triangle bounds, n=8 and 9 (long)", true},
    };
    return suites;
}

int run_suite(const std::string& name, std::ostream& out) {
    int failures = 0;
    Sink sink = [&](const CheckResult& r) {
        if (!r.pass) ++failures;
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  (%.2fs)", r.seconds);
        out << buf << "\n";
        out.flush();
    };

    if (name == "classification") classification(sink);
    else if (name == "drawability") drawability_agreement(sink);
    else if (name == "rafla") rafla_small(sink);
    else if (name == "hc2n3") hamiltonian_2n3(sink);
    else if (name == "uncrossed") uncrossed_edges(sink);
    else if (name == "empty-triangles") empty_triangle_bounds(sink);
    else if (name == "nested-lemma") nested_lemma(sink);
    else if (name == "algorithm1") algorithm1(sink);
    else if (name == "hampath") ham_paths(sink);
    else if (name == "crossing-pairs") crossing_pairs(sink);
    else if (name == "oracle-equivalence") oracle_equivalence(sink);
    else if (name == "planarity") planarity_fixed(sink);
    else if (name == "counterexamples") counterexamples(sink);
    else if (name == "all") {
        for (const SuiteInfo& s : registry())
            if (!s.extended && s.name != "all") failures += run_suite(s.name, out);
        return failures;
    } else if (name == "rafla-extended") {
        rafla_extended(sink, 9);
        rafla_extended(sink, 10);
    } else if (name == "hc2n3-extended") {
        hamiltonian_2n3_extended(sink, 8);
    } else if (name == "unextendable") {
        unextendable_hc(sink, 8);
    } else if (name == "hoffmann-toth") {
        hoffmann_toth(sink, 11);
    } else if (name == "hconvex-aec") {
        all_edges_crossed_convex(sink, 9, false, false);
        all_edges_crossed_convex(sink, 10, false, false);
        all_edges_crossed_convex(sink, 11, true, true);
    } else if (name == "empty-triangles-extended") {
        empty_triangles_extended(sink, 8);
        empty_triangles_extended(sink, 9);
    } else {
        throw ValidationError("unknown suite: " + name);
    }
    return failures;
}

}  // namespace suites
}  // namespace rotsys

#include "rotsys/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rotsys/bootstrap.hpp"
#include "rotsys/canonical.hpp"
#include "rotsys/corpus_io.hpp"
#include "rotsys/draw.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/geometry.hpp"
#include "rotsys/hamconvex.hpp"
#include "rotsys/predicates.hpp"
#include "rotsys/solve.hpp"
#include "rotsys/suites.hpp"

#include <json.hpp>

namespace rotsys {
namespace cli {

namespace {

int task_flag_count(const RunConfig& c) {
    int k = 0;
    k += c.forbid_hc;
    k += c.forbid_hc2n3;
    k += c.unextendable_hc;
    k += c.matching_k >= 0;
    k += c.all_edges_crossed;
    k += c.empty_at_most >= 0;
    k += c.crossing_pair_check;
    k += c.nested_lemma_part > 0;
    return k;
}

bool task_needs_crossing_vars(const RunConfig& c) {
    return c.forbid_hc || c.forbid_hc2n3 || c.unextendable_hc || c.matching_k >= 0 ||
           c.all_edges_crossed || c.empty_at_most >= 0;
}

encode::EncodeOptions options_from(const RunConfig& c) {
    encode::EncodeOptions opts;
    opts.forbid_pi4 = !c.v4;
    opts.forbid_pi5 = !(c.v4 || c.v5);
    opts.convex = c.convex || c.hconvex;
    opts.hconvex = c.hconvex;
    opts.natural = c.natural;
    opts.crossing_vars = task_needs_crossing_vars(c);
    return opts;
}

CnfInstance build_instance(const RunConfig& c) {
    CnfInstance inst = encode::new_instance(c.n, options_from(c));
    if (c.forbid_hc) encode::forbid_plane_hamiltonian_cycle(inst, c.cycle_enumeration_bound);
    if (c.forbid_hc2n3)
        encode::forbid_plane_hamiltonian_2n3(inst, std::min(c.cycle_enumeration_bound, 8));
    if (c.unextendable_hc) encode::assert_unextendable_fixed_hc(inst);
    if (c.matching_k >= 0)
        encode::assert_matching_unavoidable(inst, c.matching_k, c.cycle_enumeration_bound);
    if (c.all_edges_crossed) encode::assert_all_edges_crossed(inst);
    if (c.empty_at_most >= 0) encode::assert_empty_triangles_atmost(inst, c.empty_at_most);
    return inst;
}

int check_expectation(const RunConfig& c, solve::Status st, std::ostream& out) {
    std::string got = st == solve::Status::Sat     ? "sat"
                      : st == solve::Status::Unsat ? "unsat"
                                                   : "limit";
    out << "result: " << got << "\n";
    if (st == solve::Status::Limit) return 1;
    if (!c.expect.empty() && c.expect != got) return 1;
    return 0;
}

std::vector<RotationSystem> input_systems(const RunConfig& c) {
    if (!c.corpus_in.empty()) return read_corpus_file(c.corpus_in);
    if (c.random_n > 0)
        return {rotation_from_points(random_points_general_position(c.random_n, c.seed))};
    throw ValidationError("no input systems: pass --in or --random-geometric");
}

int run_find(const RunConfig& c, std::ostream& out) {
    if (c.crossing_pair_check) {
        bool ok = suites::check_crossing_pairs(c.n);
        out << "crossing-pair uniqueness on " << c.n << " elements: "
            << (ok ? "holds" : "violated") << "\n";
        return ok ? 0 : 1;
    }
    if (c.nested_lemma_part > 0) {
        hamconvex::NestedLemmaCheck check =
            c.nested_lemma_part == 1 ? hamconvex::NestedLemmaCheck::Part1
            : c.nested_lemma_case == 1
                ? hamconvex::NestedLemmaCheck::Part2Case1
                : c.nested_lemma_case == 2 ? hamconvex::NestedLemmaCheck::Part2Case2
                                           : hamconvex::NestedLemmaCheck::Part2Case3;
        encode::EncodeOptions opts = options_from(c);
        opts.natural = true;
        int violations = 0, total = 0;
        for (const RotationSystem& rs : suites::enumerate_canonical(c.n, opts)) {
            ++total;
            if (!hamconvex::check_nested_lemma(rs, check)) ++violations;
        }
        out << total << " systems checked, " << violations << " violations\n";
        return violations == 0 ? 0 : 1;
    }

    CnfInstance inst = build_instance(c);
    if (!c.cnf_out.empty()) {
        solve::write_dimacs_file(inst, c.cnf_out);
        solve::write_varmap_file(inst, c.cnf_out + ".vars");
        out << "wrote " << c.cnf_out << " (" << inst.var_count() << " vars, "
            << inst.clause_count() << " clauses)\n";
        if (!c.enumerate && c.expect.empty()) return 0;
    }

    if (c.enumerate) {
        std::ofstream corpus;
        if (!c.corpus_out.empty()) {
            corpus.open(c.corpus_out);
            if (!corpus) throw ToolError("cannot write " + c.corpus_out);
        }
        solve::EnumerationReport rep = solve::enumerate_all(
            inst, c.canonical_only, [&](const RotationSystem& rs, const std::vector<bool>&) {
                if (corpus.is_open()) write_corpus_record(corpus, rs);
                return true;
            });
        out << "solutions: " << rep.total;
        if (c.canonical_only) out << " (" << rep.canonical << " canonical)";
        out << "\n";
        return 0;
    }

    solve::SolveResult res = solve::solve_instance(inst, {-1, c.time_limit});
    if (res.status == solve::Status::Sat) {
        RotationSystem rs = solve::decode(inst, res.model);
        write_corpus_record(out, rs);
        if (!c.corpus_out.empty()) write_corpus_file(c.corpus_out, {rs});
    }
    return check_expectation(c, res.status, out);
}

int run_drawability(const RunConfig& c, std::ostream& out) {
    std::vector<RotationSystem> systems = input_systems(c);
    int disagreements = 0, index = 0;
    for (const RotationSystem& rs : systems) {
        ++index;
        if (contains_pi4(rs)) {
            out << index << " non-drawable (4-element obstruction)\n";
            continue;
        }
        auto planarization = draw::find_planarization(rs);
        bool by_obstruction = is_drawable(rs);
        bool agree = planarization.has_value() == by_obstruction;
        if (!agree) ++disagreements;
        out << index << (planarization ? " drawable" : " non-drawable")
            << (agree ? "" : " [DISAGREES with obstruction test]") << "\n";
        if (planarization && !c.planarization_out.empty()) {
            std::ofstream pj(c.planarization_out + "." + std::to_string(index) + ".json");
            planarization->write_json(pj);
        }
    }
    return disagreements == 0 ? 0 : 1;
}

nlohmann::json report_record(int index, Vertex star, const hamconvex::VerifyReport& rep,
                             bool require_rotation) {
    return {{"system", index},
            {"star", star},
            {"hamiltonian", rep.hamiltonian},
            {"cycle_plane", rep.cycle_plane},
            {"star_avoiding", rep.star_avoiding},
            {"union_plane_2n3", rep.union_plane_2n3},
            {"rotation_order", rep.rotation_order},
            {"pass", rep.pass(require_rotation)}};
}

int run_hamcycle(const RunConfig& c, std::ostream& out) {
    std::vector<RotationSystem> systems = input_systems(c);
    std::ofstream report;
    if (!c.report_out.empty()) {
        report.open(c.report_out);
        if (!report) throw ToolError("cannot write " + c.report_out);
    }
    std::ostream& rep_out = report.is_open() ? report : out;
    int failures = 0, index = 0;
    for (const RotationSystem& rs : systems) {
        ++index;
        // The heredity check is only affordable on small instances.
        bool require_rotation = rs.n() <= 9 && is_hconvex(rs);
        std::vector<Vertex> stars;
        if (c.star > 0)
            stars.push_back(c.star);
        else
            for (Vertex s = 1; s <= rs.n(); ++s) stars.push_back(s);
        for (Vertex s : stars) {
            try {
                hamconvex::HamCycleResult cycle = hamconvex::plane_hc_convex(rs, s);
                hamconvex::VerifyReport rep = hamconvex::verify_hc(rs, s, cycle);
                if (!rep.pass(require_rotation)) ++failures;
                rep_out << report_record(index, s, rep, require_rotation).dump() << "\n";
            } catch (const NotConvexError& e) {
                ++failures;
                rep_out << nlohmann::json{{"system", index},
                                          {"star", s},
                                          {"pass", false},
                                          {"error", e.what()}}
                               .dump()
                        << "\n";
            }
        }
    }
    out << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int run_hampath(const RunConfig& c, std::ostream& out) {
    std::vector<RotationSystem> systems = input_systems(c);
    std::ofstream report;
    if (!c.report_out.empty()) {
        report.open(c.report_out);
        if (!report) throw ToolError("cannot write " + c.report_out);
    }
    std::ostream& rep_out = report.is_open() ? report : out;
    int failures = 0, index = 0;
    for (const RotationSystem& rs : systems) {
        ++index;
        std::vector<Edge> edges;
        if (c.all_edges) {
            for (Vertex u = 1; u <= rs.n(); ++u)
                for (Vertex v = u + 1; v <= rs.n(); ++v) edges.emplace_back(u, v);
        } else {
            if (c.edge_u <= 0 || c.edge_v <= 0)
                throw ValidationError("hampath needs --edge u,v or --all-edges");
            edges.emplace_back(c.edge_u, c.edge_v);
        }
        for (const Edge& e : edges) {
            bool ok = true;
            std::string error;
            try {
                hamconvex::HamCycleResult path = hamconvex::plane_hp_with_edge(rs, e);
                ok = hamconvex::verify_plane_path(rs, path, e);
                if (ok && c.oracle_check && rs.n() <= c.oracle_bound &&
                    !brute_force_plane_hamiltonian(rs, HamMode::Path, e)) {
                    ok = false;
                    error = "exhaustive search disagrees";
                }
                if (ok && !c.report_out.empty()) {
                    nlohmann::json j{{"system", index},
                                     {"edge", {e.u, e.v}},
                                     {"path", path.sequence},
                                     {"pass", true}};
                    rep_out << j.dump() << "\n";
                }
            } catch (const Error& ex) {
                ok = false;
                error = ex.what();
            }
            if (!ok) {
                ++failures;
                rep_out << nlohmann::json{{"system", index},
                                          {"edge", {e.u, e.v}},
                                          {"pass", false},
                                          {"error", error}}
                               .dump()
                        << "\n";
            }
        }
    }
    out << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int run_certify(const RunConfig& c, std::ostream& out) {
    CnfInstance inst = build_instance(c);
    std::ostringstream stem;
    stem << "n" << c.n;
    if (c.forbid_hc) stem << "_hc";
    if (c.forbid_hc2n3) stem << "_hc2n3";
    if (c.all_edges_crossed) stem << "_aec";
    if (c.empty_at_most >= 0) stem << "_et" << c.empty_at_most;
    if (c.matching_k >= 0) stem << "_ht" << c.matching_k;
    if (c.unextendable_hc) stem << "_hcpp";
    solve::CertificateReport rep;
    try {
        rep = solve::unsat_certificate(inst, c.certificate_dir, stem.str());
    } catch (const ValidationError& e) {
        // Satisfiable instances are an unexpected-status outcome, not a
        // configuration problem.
        out << e.what() << "\n";
        return 1;
    }
    out << "instance: " << rep.cnf_path << "\nproof: " << rep.proof_path << "\n"
        << (rep.verified ? "verified" : "NOT verified") << " (" << rep.detail << ")\n";
    return rep.verified ? 0 : 1;
}

int run_bootstrap(const RunConfig& c, std::ostream& out) {
    BootstrapCounts counts;
    ObstructionCatalog derived = bootstrap_catalog(&counts);
    out << "canonical n=4: " << counts.canonical4 << "\n"
        << "pi4-free n=5: " << counts.canonical5_pi4free << "\n"
        << "drawable n=5: " << counts.drawable5 << "\n"
        << "non-convex drawable n=5: " << counts.nonconvex5 << "\n"
        << "drawable n=6: " << counts.drawable6 << " (convex: " << counts.convex6 << ")\n"
        << "convex non-hereditary n=6: " << counts.nonhconvex6 << "\n";
    if (!c.catalog_out.empty()) {
        std::ofstream f(c.catalog_out);
        if (!f) throw ToolError("cannot write " + c.catalog_out);
        derived.write_jsonl(f);
        out << "wrote " << c.catalog_out << "\n";
    }
    bool match = derived == ObstructionCatalog::builtin();
    out << (match ? "matches the builtin catalog\n" : "DIFFERS from the builtin catalog\n");
    return match ? 0 : 1;
}

}  // namespace

void validate(const RunConfig& c) {
    const std::string& cmd = c.command;
    if (cmd != "find" && cmd != "hamcycle" && cmd != "hampath" && cmd != "drawability" &&
        cmd != "certify" && cmd != "reproduce" && cmd != "bootstrap")
        throw ValidationError("unknown command: " + cmd);
    if (cmd == "find" || cmd == "certify") {
        if (c.n < 3) throw ValidationError("n >= 3 required");
        if (task_flag_count(c) > 1) throw ValidationError("task flags are mutually exclusive");
        if ((c.unextendable_hc || c.matching_k >= 1) && c.natural)
            throw ValidationError(
                "the fixed cycle or matching consumes the labeling freedom; pass --no-natural");
        if (c.v4 && task_needs_crossing_vars(c))
            throw ValidationError("crossing-variable tasks need the 4-element obstruction block");
        if ((c.convex || c.hconvex) && (c.v4 || c.v5))
            throw ValidationError("convexity blocks contradict the relaxation flags");
        if (c.canonical_only && !c.natural)
            throw ValidationError("canonical filtering requires natural labeling");
        if (c.nested_lemma_part > 0 && !c.convex && !c.hconvex)
            throw ValidationError("the bad-edge checks run on convex enumerations; pass --convex");
        if (c.nested_lemma_part == 2 && (c.nested_lemma_case < 1 || c.nested_lemma_case > 3))
            throw ValidationError("part 2 needs --case 1, 2 or 3");
        if (c.matching_k >= 0 && 2 * c.matching_k > c.n)
            throw ValidationError("matching size out of range");
        if (!c.expect.empty() && c.expect != "sat" && c.expect != "unsat")
            throw ValidationError("--expect takes sat or unsat");
    }
    if (cmd == "reproduce") {
        bool known = false;
        for (const auto& s : suites::registry()) known |= s.name == c.suite;
        if (!known) throw ValidationError("unknown suite: " + c.suite);
    }
    if (cmd == "hampath" && !c.all_edges && (c.edge_u == c.edge_v))
        throw ValidationError("hampath needs --edge u,v with u != v, or --all-edges");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        if (cfg.command == "find") return run_find(cfg, out);
        if (cfg.command == "drawability") return run_drawability(cfg, out);
        if (cfg.command == "hamcycle") return run_hamcycle(cfg, out);
        if (cfg.command == "hampath") return run_hampath(cfg, out);
        if (cfg.command == "certify") return run_certify(cfg, out);
        if (cfg.command == "bootstrap") return run_bootstrap(cfg, out);
        if (cfg.command == "reproduce") return suites::run_suite(cfg.suite, out) == 0 ? 0 : 1;
        throw ValidationError("unknown command");
    } catch (const ToolError& e) {
        err << "tool error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EncodingError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace rotsys

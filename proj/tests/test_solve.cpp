#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "rotsys/canonical.hpp"
#include "rotsys/corpus_io.hpp"
#include "rotsys/drat.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/predicates.hpp"
#include "rotsys/sat_solver.hpp"
#include "rotsys/solve.hpp"

using namespace rotsys;

namespace {

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "rotsys_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("solver basics") {
    sat::Solver s;
    s.add_clause({1, 2});
    s.add_clause({-1, 2});
    s.add_clause({1, -2});
    CHECK(s.solve() == sat::Result::Sat);
    CHECK(s.model_value(1));
    CHECK(s.model_value(2));

    s.add_clause({-1, -2});
    CHECK(s.solve() == sat::Result::Unsat);

    sat::Solver contradiction;
    contradiction.add_clause({3});
    contradiction.add_clause({-3});
    CHECK(contradiction.solve() == sat::Result::Unsat);
}

TEST_CASE("solver agrees with brute force on random 3-SAT") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 60; ++round) {
        int vars = 8, clauses = 28;
        std::vector<std::vector<int>> formula;
        std::uniform_int_distribution<int> var(1, vars);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int i = 0; i < clauses; ++i) {
            std::set<int> cl;
            while ((int)cl.size() < 3) {
                int v = var(rng);
                cl.insert(coin(rng) ? v : -v);
            }
            formula.emplace_back(cl.begin(), cl.end());
        }
        bool brute_sat = false;
        for (int mask = 0; mask < (1 << vars) && !brute_sat; ++mask) {
            bool ok = true;
            for (const auto& cl : formula) {
                bool c = false;
                for (int lit : cl) c |= ((mask >> (std::abs(lit) - 1)) & 1) == (lit > 0);
                if (!c) {
                    ok = false;
                    break;
                }
            }
            brute_sat = ok;
        }
        sat::Solver s;
        for (const auto& cl : formula) s.add_clause(cl);
        CHECK((s.solve() == sat::Result::Sat) == brute_sat);
    }
}

TEST_CASE("pigeonhole instances are unsatisfiable") {
    // 5 pigeons, 4 holes.
    int pigeons = 5, holes = 4;
    auto var = [&](int p, int h) { return p * holes + h + 1; };
    sat::Solver s;
    for (int p = 0; p < pigeons; ++p) {
        std::vector<int> cl;
        for (int h = 0; h < holes; ++h) cl.push_back(var(p, h));
        s.add_clause(cl);
    }
    for (int h = 0; h < holes; ++h)
        for (int p1 = 0; p1 < pigeons; ++p1)
            for (int p2 = p1 + 1; p2 < pigeons; ++p2)
                s.add_clause({-var(p1, h), -var(p2, h)});
    CHECK(s.solve() == sat::Result::Unsat);
}

TEST_CASE("conflict budget reports a limit") {
    // Hard enough that 5 conflicts cannot settle it.
    int pigeons = 8, holes = 7;
    auto var = [&](int p, int h) { return p * holes + h + 1; };
    sat::Solver s;
    for (int p = 0; p < pigeons; ++p) {
        std::vector<int> cl;
        for (int h = 0; h < holes; ++h) cl.push_back(var(p, h));
        s.add_clause(cl);
    }
    for (int h = 0; h < holes; ++h)
        for (int p1 = 0; p1 < pigeons; ++p1)
            for (int p2 = p1 + 1; p2 < pigeons; ++p2)
                s.add_clause({-var(p1, h), -var(p2, h)});
    sat::Limits limits;
    limits.max_conflicts = 5;
    CHECK(s.solve(limits) == sat::Result::Unknown);
    CHECK(s.solve() == sat::Result::Unsat);
}

TEST_CASE("solve wrapper statuses") {
    encode::EncodeOptions opts;
    opts.crossing_vars = true;
    CnfInstance inst = encode::new_instance(6, opts);
    encode::forbid_plane_hamiltonian_cycle(inst);
    solve::SolveResult res = solve::solve_instance(inst);
    CHECK(res.status == solve::Status::Unsat);

    CnfInstance sat_inst = encode::new_instance(5, opts);
    solve::SolveResult res2 = solve::solve_instance(sat_inst);
    REQUIRE(res2.status == solve::Status::Sat);
    RotationSystem decoded = solve::decode(sat_inst, res2.model);
    CHECK(is_drawable(decoded));
}

TEST_CASE("enumeration visits every class exactly once") {
    encode::EncodeOptions opts;
    CnfInstance inst = encode::new_instance(5, opts);
    std::set<RotationSystem> classes;
    std::uint64_t seen = 0;
    solve::EnumerationReport rep = solve::enumerate_all(
        inst, true, [&](const RotationSystem& rs, const std::vector<bool>&) {
            ++seen;
            CHECK(is_canonical(rs));
            CHECK(is_drawable(rs));
            classes.insert(rs);
            return true;
        });
    CHECK(rep.canonical == 5);
    CHECK(rep.canonical == seen);
    CHECK(classes.size() == 5);
    CHECK(rep.total >= rep.canonical);

    encode::EncodeOptions v4;
    v4.forbid_pi4 = v4.forbid_pi5 = false;
    CnfInstance all4 = encode::new_instance(4, v4);
    solve::EnumerationReport rep4 =
        solve::enumerate_all(all4, true,
                             [&](const RotationSystem&, const std::vector<bool>&) { return true; });
    CHECK(rep4.canonical == 3);
}

TEST_CASE("decode-encode fixpoint") {
    encode::EncodeOptions opts;
    CnfInstance inst = encode::new_instance(5, opts);
    solve::SolveResult res = solve::solve_instance(inst);
    REQUIRE(res.status == solve::Status::Sat);
    RotationSystem first = solve::decode(inst, res.model);

    encode::EncodeOptions repin = opts;
    repin.natural = false;
    CnfInstance pinned = encode::new_instance(5, repin);
    for (Vertex a = 1; a <= 5; ++a)
        for (int i = 1; i <= 4; ++i)
            pinned.add_clause({encode::x_lit(pinned, a, i, first.row(a)[i - 1])});
    solve::SolveResult res2 = solve::solve_instance(pinned);
    REQUIRE(res2.status == solve::Status::Sat);
    CHECK(solve::decode(pinned, res2.model) == first);
}

TEST_CASE("model reader parses v lines") {
    std::vector<int> model = read_model("c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n", 4);
    CHECK(model[1] == 1);
    CHECK(model[2] == -1);
    CHECK(model[3] == 1);
    CHECK(model[4] == -1);
    CHECK_THROWS_AS(read_model("v 9 0\n", 4), ValidationError);
}

TEST_CASE("corpus round trip") {
    auto path = (temp_dir() / "corpus.jsonl").string();
    std::vector<RotationSystem> systems;
    for_each_pre_rotation_system(4, [&](const RotationSystem& rs) {
        if (is_canonical(rs)) systems.push_back(rs);
    });
    write_corpus_file(path, systems);
    CHECK(read_corpus_file(path) == systems);

    // Unnormalized rows are normalized on read.
    std::ofstream raw(path);
    raw << "{\"n\": 4, \"rows\": [[4,3,2],[1,3,4],[1,4,2],[1,2,3]]}\n";
    raw.close();
    auto loaded = read_corpus_file(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0].row(1) == std::vector<Vertex>{2, 4, 3});

    std::ofstream bad(path);
    bad << "{\"n\": 4}\n";
    bad.close();
    CHECK_THROWS(read_corpus_file(path));
}

TEST_CASE("DRAT checker accepts real proofs and rejects fabricated ones") {
    // A small unsatisfiable instance solved with proof logging.
    encode::EncodeOptions opts;
    opts.crossing_vars = true;
    CnfInstance inst = encode::new_instance(5, opts);
    encode::forbid_plane_hamiltonian_cycle(inst);

    auto dir = temp_dir();
    auto cnf = (dir / "hc5.cnf").string();
    auto proof = (dir / "hc5.drat").string();
    solve::write_dimacs_file(inst, cnf);
    {
        sat::Solver s;
        std::ofstream proof_out(proof);
        s.set_proof_stream(&proof_out);
        s.ensure_var(inst.var_count());
        for (const auto& c : inst.clauses()) s.add_clause(c);
        REQUIRE(s.solve() == sat::Result::Unsat);
    }
    drat::CheckReport rep = drat::check_files(cnf, proof);
    CHECK(rep.verified);

    // Tampering with the proof must be caught.
    {
        std::ifstream in(proof);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        // Deny a unit of the formula up front: neither RUP nor RAT.
        std::ofstream out(proof);
        out << "-1 0\n" << text;
    }
    drat::CheckReport bad = drat::check_files(cnf, proof);
    CHECK(!bad.verified);
}

TEST_CASE("RUP and RAT steps") {
    // x1 & (-x1 v x2) derive x2 via RUP; a clause introducing a fresh pure
    // literal is RAT though not RUP.
    std::vector<std::vector<int>> formula{{1}, {-1, 2}, {-2, -3}, {3, 4}, {-4, 2}};
    std::istringstream proof("2 0\n");
    CHECK(!drat::check(formula, proof).verified);  // no empty clause derived

    std::vector<std::vector<int>> unsat{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
    std::istringstream proof2("1 0\n0\n");
    CHECK(drat::check(unsat, proof2).verified);

    std::istringstream bogus("-5 0\n0\n");
    std::vector<std::vector<int>> sat_formula{{1, 2}};
    CHECK(!drat::check(sat_formula, bogus).verified);
}

TEST_CASE("unsat certificates round trip through the pipeline") {
    encode::EncodeOptions opts;
    opts.crossing_vars = true;
    CnfInstance inst = encode::new_instance(5, opts);
    encode::forbid_plane_hamiltonian_cycle(inst);
    auto dir = (temp_dir() / "certs").string();
    solve::CertificateReport rep = solve::unsat_certificate(inst, dir, "hc5");
    CHECK(rep.verified);
    CHECK(std::filesystem::exists(rep.cnf_path));
    CHECK(std::filesystem::exists(rep.proof_path));

    CnfInstance sat_inst = encode::new_instance(5, opts);
    CHECK_THROWS_AS(solve::unsat_certificate(sat_inst, dir, "sat5"), ValidationError);
}

TEST_CASE("blocking clauses terminate even without the canonical filter") {
    encode::EncodeOptions opts;
    CnfInstance inst = encode::new_instance(4, opts);
    std::uint64_t count = 0;
    solve::EnumerationReport rep = solve::enumerate_all(
        inst, false, [&](const RotationSystem&, const std::vector<bool>&) {
            ++count;
            return true;
        });
    CHECK(count == rep.total);
    CHECK(rep.total > 0);
    // Natural labeled drawable systems on 4 elements: identity row for vertex
    // 1 leaves the four systems of the standard picture.
    CHECK(rep.total == 4);
}

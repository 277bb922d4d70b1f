#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rotsys/canonical.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/geometry.hpp"
#include "rotsys/predicates.hpp"
#include "rotsys/solve.hpp"

using namespace rotsys;
using namespace rotsys::testing;
using encode::EncodeOptions;

namespace {

EncodeOptions drawable_opts(bool crossing = false) {
    EncodeOptions o;
    o.crossing_vars = crossing;
    return o;
}

// Unit clauses pinning the instance to one labeled system.
void pin_system(CnfInstance& inst, const RotationSystem& rs) {
    for (Vertex a = 1; a <= rs.n(); ++a)
        for (int i = 1; i <= rs.n() - 1; ++i)
            inst.add_clause({encode::x_lit(inst, a, i, rs.row(a)[i - 1])});
}

std::vector<RotationSystem> enumerate_decoded(const CnfInstance& inst, bool canonical_only) {
    std::vector<RotationSystem> out;
    solve::enumerate_all(inst, canonical_only,
                         [&](const RotationSystem& rs, const std::vector<bool>&) {
                             out.push_back(rs);
                             return true;
                         });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("option validation") {
    EncodeOptions bad;
    bad.hconvex = true;
    bad.convex = false;
    CHECK_THROWS_AS(bad.validate(), EncodingError);

    EncodeOptions relaxed;
    relaxed.forbid_pi5 = false;
    relaxed.convex = true;
    CHECK_THROWS_AS(relaxed.validate(), EncodingError);

    EncodeOptions crossing_without_pi4;
    crossing_without_pi4.forbid_pi4 = false;
    crossing_without_pi4.forbid_pi5 = false;
    crossing_without_pi4.crossing_vars = true;
    CHECK_THROWS_AS(crossing_without_pi4.validate(), EncodingError);
}

TEST_CASE("base instance, n=4: models are exactly the labeled drawable systems") {
    EncodeOptions opts = drawable_opts();
    opts.natural = false;
    CnfInstance inst = encode::new_instance(4, opts);
    std::vector<RotationSystem> decoded = enumerate_decoded(inst, false);

    std::vector<RotationSystem> expected;
    for_each_pre_rotation_system(4, [&](const RotationSystem& rs) {
        if (!contains_pi4(rs)) expected.push_back(rs);
    });
    std::sort(expected.begin(), expected.end());
    CHECK(decoded == expected);
    CHECK(decoded.size() == 8);

    std::set<RotationSystem> classes;
    for (const auto& rs : decoded) classes.insert(canonical_form(rs));
    CHECK(classes.size() == 2);
}

TEST_CASE("canonical enumeration counts on 5 elements") {
    EncodeOptions v5 = drawable_opts();
    v5.forbid_pi5 = false;
    CnfInstance pi4free = encode::new_instance(5, v5);
    CHECK(enumerate_decoded(pi4free, true).size() == 7);

    CnfInstance drawable = encode::new_instance(5, drawable_opts());
    CHECK(enumerate_decoded(drawable, true).size() == 5);
}

TEST_CASE("crossing variables mirror the crossing relation on every model") {
    CnfInstance inst = encode::new_instance(5, drawable_opts(true));
    int models = 0;
    solve::enumerate_all(inst, false, [&](const RotationSystem& rs,
                                          const std::vector<bool>& model) {
        ++models;
        CrossingRelation rel = crossing_relation(rs);
        for (Vertex a = 1; a <= 5; ++a)
            for (Vertex b = a + 1; b <= 5; ++b)
                for (Vertex c = a + 1; c <= 5; ++c)
                    for (Vertex d = c + 1; d <= 5; ++d) {
                        if (c == b || d == b) continue;
                        Edge e(a, b), f(c, d);
                        if (e.adjacent(f)) continue;
                        CHECK(model[encode::crossing_lit(inst, e, f)] == rel.crosses(e, f));
                    }
        return models < 40;  // a healthy sample is enough
    });
    CHECK(models > 0);
}

TEST_CASE("pinned systems force their crossing variables") {
    RotationSystem sq = rotation_from_points(square_points());
    EncodeOptions opts = drawable_opts(true);
    opts.natural = false;  // the pinned rows carry their own labeling
    CnfInstance inst = encode::new_instance(4, opts);
    pin_system(inst, sq);
    solve::SolveResult res = solve::solve_instance(inst);
    REQUIRE(res.status == solve::Status::Sat);
    CHECK(res.model[encode::crossing_lit(inst, Edge(1, 3), Edge(2, 4))]);
    CHECK(!res.model[encode::crossing_lit(inst, Edge(1, 2), Edge(3, 4))]);

    RotationSystem plane = rotation_from_points(plane_k4_points());
    CnfInstance inst2 = encode::new_instance(4, opts);
    pin_system(inst2, plane);
    solve::SolveResult res2 = solve::solve_instance(inst2);
    REQUIRE(res2.status == solve::Status::Sat);
    CHECK(!res2.model[encode::crossing_lit(inst2, Edge(1, 3), Edge(2, 4))]);
    CHECK(!res2.model[encode::crossing_lit(inst2, Edge(1, 2), Edge(3, 4))]);
    CHECK(!res2.model[encode::crossing_lit(inst2, Edge(1, 4), Edge(2, 3))]);
}

TEST_CASE("forbidding plane Hamiltonian cycles") {
    CnfInstance inst = encode::new_instance(5, drawable_opts(true));
    encode::forbid_plane_hamiltonian_cycle(inst);
    CHECK(solve::solve_instance(inst).status == solve::Status::Unsat);

    // Dropping the drawability block changes nothing at n=5: all seven
    // pi4-free systems carry a plane Hamiltonian cycle (checked against the
    // exhaustive oracle below). At n=6 a non-drawable witness appears.
    EncodeOptions v5 = drawable_opts(true);
    v5.forbid_pi5 = false;
    CnfInstance relaxed5 = encode::new_instance(5, v5);
    encode::forbid_plane_hamiltonian_cycle(relaxed5);
    CHECK(solve::solve_instance(relaxed5).status == solve::Status::Unsat);
    for_each_pre_rotation_system(5, [&](const RotationSystem& rs) {
        if (contains_pi4(rs) || !is_canonical(rs)) return;
        CHECK(brute_force_plane_hamiltonian(rs, HamMode::Cycle).has_value());
    });

    CnfInstance relaxed6 = encode::new_instance(6, v5);
    encode::forbid_plane_hamiltonian_cycle(relaxed6);
    solve::SolveResult res = solve::solve_instance(relaxed6);
    REQUIRE(res.status == solve::Status::Sat);
    RotationSystem witness = solve::decode(relaxed6, res.model);
    CHECK(!is_drawable(witness));
    CHECK(!brute_force_plane_hamiltonian(witness, HamMode::Cycle).has_value());

    CnfInstance too_big = encode::new_instance(5, drawable_opts(true));
    CHECK_THROWS_AS(encode::forbid_plane_hamiltonian_cycle(too_big, 4), EncodingError);

    CnfInstance no_vars = encode::new_instance(5, drawable_opts(false));
    CHECK_THROWS_AS(encode::forbid_plane_hamiltonian_cycle(no_vars), EncodingError);
}

TEST_CASE("2n-3 block generates the expected number of subsets") {
    CnfInstance inst = encode::new_instance(5, drawable_opts(true));
    std::size_t before = inst.clauses_emitted();
    encode::forbid_plane_hamiltonian_2n3(inst);
    // 12 Hamiltonian cycles times C(5,2) completions of the remaining edges.
    CHECK(inst.clauses_emitted() - before == 120);
    CHECK(solve::solve_instance(inst).status == solve::Status::Unsat);
}

TEST_CASE("fixed-cycle extension block") {
    EncodeOptions opts = drawable_opts(true);
    opts.natural = false;
    CnfInstance inst = encode::new_instance(4, opts);
    encode::assert_unextendable_fixed_hc(inst);
    CHECK(solve::solve_instance(inst).status == solve::Status::Unsat);

    CnfInstance with_natural = encode::new_instance(4, drawable_opts(true));
    CHECK_THROWS_AS(encode::assert_unextendable_fixed_hc(with_natural), EncodingError);

    EncodeOptions convex = opts;
    convex.convex = true;
    for (int n = 5; n <= 6; ++n) {
        CnfInstance c = encode::new_instance(n, convex);
        encode::assert_unextendable_fixed_hc(c);
        CHECK(solve::solve_instance(c).status == solve::Status::Unsat);
    }
}

TEST_CASE("matching block: k=0 degenerates to the cycle block") {
    EncodeOptions opts = drawable_opts(true);
    opts.natural = false;
    CnfInstance a = encode::new_instance(5, opts);
    encode::assert_matching_unavoidable(a, 0);
    CnfInstance b = encode::new_instance(5, opts);
    encode::forbid_plane_hamiltonian_cycle(b);
    auto sorted_clauses = [](const CnfInstance& inst) {
        std::vector<std::vector<int>> cs = inst.clauses();
        for (auto& c : cs) std::sort(c.begin(), c.end());
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    CHECK(sorted_clauses(a) == sorted_clauses(b));

    CnfInstance c = encode::new_instance(5, opts);
    CHECK_THROWS_AS(encode::assert_matching_unavoidable(c, 3), EncodingError);

    // Convex drawings always leave a cycle avoiding the matching.
    for (int k = 1; 2 * k <= 6; ++k) {
        EncodeOptions convex = opts;
        convex.convex = true;
        CnfInstance inst = encode::new_instance(6, convex);
        encode::assert_matching_unavoidable(inst, k);
        CHECK(solve::solve_instance(inst).status == solve::Status::Unsat);
    }
}

TEST_CASE("all-edges-crossed block at n=5") {
    CnfInstance inst = encode::new_instance(5, drawable_opts(true));
    encode::assert_all_edges_crossed(inst);
    CHECK(solve::solve_instance(inst).status == solve::Status::Unsat);
}

TEST_CASE("empty-triangle variables recount correctly") {
    CnfInstance inst = encode::new_instance(5, drawable_opts(true));
    encode::assert_empty_triangles_atmost(inst, 10);  // no effective bound
    int models = 0;
    solve::enumerate_all(inst, false, [&](const RotationSystem& rs,
                                          const std::vector<bool>& model) {
        ++models;
        EmptyTriangleReport rep = empty_triangles(rs);
        int model_count = 0;
        for_each_subset(5, 3, [&](const std::vector<Vertex>& t) {
            if (model[inst.var(key('T', {t[0], t[1], t[2]}))]) ++model_count;
        });
        CHECK(model_count == rep.count);
        return models < 30;
    });
    CHECK(models > 0);

    CnfInstance tight = encode::new_instance(4, drawable_opts(true));
    encode::assert_empty_triangles_atmost(tight, 3);
    CHECK(solve::solve_instance(tight).status == solve::Status::Unsat);
}

TEST_CASE("sequential counter bounds true literals") {
    // Ten fresh variables, bound three; compare against exhaustive counting.
    CnfInstance inst(3);
    std::vector<int> vars;
    for (int i = 0; i < 10; ++i) vars.push_back(inst.new_var(key('Z', {i})));
    encode::cardinality_atmost(inst, vars, 3);

    sat::Solver solver;
    solver.ensure_var(inst.var_count());
    for (const auto& c : inst.clauses()) solver.add_clause(c);
    int sat_assignments = 0;
    while (solver.solve() == sat::Result::Sat) {
        int trues = 0;
        std::vector<int> blocking;
        for (int v : vars) {
            bool val = solver.model_value(v);
            trues += val;
            blocking.push_back(val ? -v : v);
        }
        CHECK(trues <= 3);
        ++sat_assignments;
        solver.add_clause(blocking);
    }
    int expected = 0;
    for (int mask = 0; mask < 1024; ++mask)
        if (__builtin_popcount(mask) <= 3) ++expected;
    CHECK(sat_assignments == expected);

    CnfInstance zero(3);
    std::vector<int> vs{zero.new_var(key('Z', {0})), zero.new_var(key('Z', {1}))};
    encode::cardinality_atmost(zero, vs, 0);
    for (int v : vs) {
        bool found = false;
        for (const auto& c : zero.clauses()) found |= c == std::vector<int>{-v};
        CHECK(found);
    }

    CnfInstance loose(3);
    std::vector<int> ws{loose.new_var(key('Z', {0})), loose.new_var(key('Z', {1}))};
    std::size_t before = loose.clause_count();
    encode::cardinality_atmost(loose, ws, 2);
    CHECK(loose.clause_count() == before);
}

TEST_CASE("property blocks shrink the solution set monotonically") {
    EncodeOptions v5 = drawable_opts();
    v5.forbid_pi5 = false;
    std::vector<RotationSystem> pi4free =
        enumerate_decoded(encode::new_instance(5, v5), true);
    std::vector<RotationSystem> drawable =
        enumerate_decoded(encode::new_instance(5, drawable_opts()), true);
    EncodeOptions conv = drawable_opts();
    conv.convex = true;
    std::vector<RotationSystem> convex =
        enumerate_decoded(encode::new_instance(5, conv), true);

    CHECK(pi4free.size() == 7);
    CHECK(drawable.size() == 5);
    CHECK(convex.size() == 3);
    CHECK(std::includes(pi4free.begin(), pi4free.end(), drawable.begin(), drawable.end()));
    CHECK(std::includes(drawable.begin(), drawable.end(), convex.begin(), convex.end()));
}

TEST_CASE("DIMACS output is stable and parses back") {
    CnfInstance a = encode::new_instance(5, drawable_opts(true));
    CnfInstance b = encode::new_instance(5, drawable_opts(true));
    std::ostringstream da, db;
    a.write_dimacs(da);
    b.write_dimacs(db);
    CHECK(da.str() == db.str());
    CHECK(da.str().rfind("c n=5\n", 0) == 0);

    std::istringstream in(da.str());
    DimacsFile parsed = read_dimacs(in);
    CHECK(parsed.var_count == a.var_count());
    REQUIRE(parsed.clauses.size() == a.clause_count());
    auto norm = [](std::vector<std::vector<int>> cs) {
        for (auto& c : cs) std::sort(c.begin(), c.end());
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    CHECK(norm(parsed.clauses) == norm(a.clauses()));

    std::ostringstream vm;
    a.write_varmap(vm);
    std::string first_line = vm.str().substr(0, vm.str().find('\n'));
    CHECK(first_line == "1 X 1 1 2");
}

TEST_CASE("duplicate clauses are dropped, falsum is representable") {
    CnfInstance inst(3);
    int v = inst.new_var(key('Z', {1}));
    int w = inst.new_var(key('Z', {2}));
    inst.add_clause({v, -w});
    inst.add_clause({-w, v});
    CHECK(inst.clause_count() == 1);
    CHECK(inst.clauses_emitted() == 2);
    CHECK_THROWS_AS(inst.add_clause({v, w + 5}), EncodingError);
    CHECK_THROWS_AS(inst.add_clause({}), EncodingError);

    inst.add_falsum();
    sat::Solver s;
    s.ensure_var(inst.var_count());
    for (const auto& c : inst.clauses()) s.add_clause(c);
    CHECK(s.solve() == sat::Result::Unsat);
}

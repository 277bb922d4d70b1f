#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rotsys/canonical.hpp"
#include "rotsys/catalog.hpp"
#include "rotsys/geometry.hpp"
#include "rotsys/predicates.hpp"

using namespace rotsys;
using namespace rotsys::testing;

namespace {

std::vector<RotationSystem> drawable5_canonical() {
    std::vector<RotationSystem> out;
    for_each_pre_rotation_system(5, [&](const RotationSystem& rs) {
        if (is_canonical(rs) && is_drawable(rs)) out.push_back(rs);
    });
    return out;
}

std::vector<Vertex> random_permutation(int n, std::uint64_t seed) {
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("from_rows accepts, normalizes and validates") {
    RotationSystem direct =
        RotationSystem::from_rows(4, {{2, 4, 3}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}});
    CHECK(direct == rotation_from_points(plane_k4_points()));
    CHECK(direct.rows() == std::vector<std::vector<Vertex>>{
                               {2, 4, 3}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}});

    RotationSystem rotated =
        RotationSystem::from_rows(4, {{4, 3, 2}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}});
    CHECK(rotated.row(1) == std::vector<Vertex>{2, 4, 3});
    CHECK(rotated == direct);

    CHECK_THROWS_AS(
        RotationSystem::from_rows(4, {{2, 2, 3}, {1, 3, 4}, {1, 4, 2}, {1, 2, 3}}),
        ValidationError);
    CHECK_THROWS_AS(RotationSystem::from_rows(2, {{2}, {1}}), ValidationError);
    CHECK_THROWS_AS(RotationSystem::from_rows(4, {{2, 4, 3}, {1, 3, 4}, {1, 4, 2}}),
                    ValidationError);
}

TEST_CASE("rotation systems from points match segment intersections") {
    RotationSystem sq = rotation_from_points(square_points());
    CrossingRelation rel = crossing_relation(sq);
    CHECK(rel.pairs == std::vector<EdgePair>{EdgePair(Edge(1, 3), Edge(2, 4))});
    CHECK(rel.pairs == oracle_crossing_pairs(square_points()));

    CHECK(crossing_relation(rotation_from_points(plane_k4_points())).pairs.empty());

    CHECK(crossing_relation(rotation_from_points(convex5_points())).pairs.size() == 5);
    CHECK(crossing_relation(rotation_from_points(convex5_points())).pairs ==
          oracle_crossing_pairs(convex5_points()));

    for (std::uint64_t seed : {7u, 8u, 9u}) {
        std::vector<Point> pts = random_points_general_position(8, seed);
        CHECK(crossing_relation(rotation_from_points(pts)).pairs ==
              oracle_crossing_pairs(pts));
    }

    CHECK_THROWS_AS(rotation_from_points({{0, 0}, {1, 1}, {2, 2}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(rotation_from_points({{0, 0}, {1, 1}, {0, 0}, {1, 0}}), ValidationError);
}

TEST_CASE("ccw orientation laws") {
    RotationSystem rs = rotation_from_points(random_points_general_position(7, 3));
    const auto& row = rs.row(2);
    CHECK(rs.ccw(2, row[0], row[1], row[2]));

    for (Vertex a = 1; a <= 7; ++a)
        for (Vertex b = 1; b <= 7; ++b)
            for (Vertex c = 1; c <= 7; ++c)
                for (Vertex d = 1; d <= 7; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    CHECK(rs.ccw(a, b, c, d) != rs.ccw(a, b, d, c));
                    CHECK(rs.ccw(a, b, c, d) == rs.ccw(a, c, d, b));
                    CHECK(rs.ccw(a, b, c, d) == rs.ccw(a, d, b, c));
                }
    CHECK_THROWS_AS(rs.ccw(1, 1, 2, 3), ValidationError);
}

TEST_CASE("induced subsystems restrict and relabel in order") {
    RotationSystem c5 = rotation_from_points(convex5_points());
    CHECK(induced(c5, {1, 2, 3, 4, 5}) == c5);

    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    for_each_subset(5, 4, [&](const std::vector<Vertex>& s) {
        CHECK(canonical_form(induced(c5, s)) == cat.crossing_K4);
    });

    RotationSystem sub = induced(c5, {2, 3, 5});
    CHECK(sub.n() == 3);
    CHECK(sub.row(1) == std::vector<Vertex>{2, 3});

    CHECK_THROWS_AS(induced(c5, {1, 2}), ValidationError);
}

TEST_CASE("reflect is an involution preserving crossings") {
    for (std::uint64_t seed : {1u, 2u}) {
        RotationSystem rs = rotation_from_points(random_points_general_position(7, seed));
        CHECK(reflect(reflect(rs)) == rs);
        CHECK(crossing_relation(reflect(rs)).pairs == crossing_relation(rs).pairs);
    }
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    CHECK(canonical_form(reflect(cat.plane_K4)) == cat.plane_K4);
}

TEST_CASE("relabel is a group action and crossings are equivariant") {
    RotationSystem rs = rotation_from_points(random_points_general_position(6, 11));
    std::vector<Vertex> id{1, 2, 3, 4, 5, 6};
    CHECK(relabel(rs, id) == rs);

    std::vector<Vertex> perm = random_permutation(6, 5);
    std::vector<Vertex> inverse(6);
    for (int i = 0; i < 6; ++i) inverse[perm[i] - 1] = i + 1;
    CHECK(relabel(relabel(rs, perm), inverse) == rs);

    CrossingRelation before = crossing_relation(rs);
    CrossingRelation after = crossing_relation(relabel(rs, perm));
    std::vector<EdgePair> mapped;
    for (const EdgePair& p : before.pairs)
        mapped.emplace_back(Edge(perm[p.first.u - 1], perm[p.first.v - 1]),
                            Edge(perm[p.second.u - 1], perm[p.second.v - 1]));
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == after.pairs);

    CHECK_THROWS_AS(relabel(rs, {1, 1, 2, 3, 4, 5}), ValidationError);
}

TEST_CASE("canonical forms are orbit invariants") {
    RotationSystem rs = rotation_from_points(random_points_general_position(6, 17));
    RotationSystem cf = canonical_form(rs);
    CHECK(canonical_form(cf) == cf);
    CHECK(is_canonical(cf));
    CHECK(canonical_form(reflect(rs)) == cf);
    for (std::uint64_t seed : {21u, 22u, 23u})
        CHECK(canonical_form(relabel(rs, random_permutation(6, seed))) == cf);
}

TEST_CASE("exactly three canonical pre-rotation systems on 4 elements") {
    std::set<RotationSystem> canonical;
    int total = 0;
    for_each_pre_rotation_system(4, [&](const RotationSystem& rs) {
        ++total;
        canonical.insert(canonical_form(rs));
        if (is_canonical(rs)) CHECK(canonical_form(rs) == rs);
    });
    CHECK(total == 16);
    CHECK(canonical.size() == 3);
}

TEST_CASE("exactly seven canonical pi4-free systems on 5 elements") {
    int canonical = 0, total = 0;
    for_each_pre_rotation_system(5, [&](const RotationSystem& rs) {
        ++total;
        if (!contains_pi4(rs) && is_canonical(rs)) ++canonical;
    });
    CHECK(total == 7776);
    CHECK(canonical == 7);
}

TEST_CASE("non-identity relabelings of an asymmetric system are not canonical") {
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    RotationSystem shuffled = relabel(cat.hconvex6, {2, 1, 3, 4, 5, 6});
    CHECK(canonical_form(shuffled) == cat.hconvex6);
    CHECK(shuffled != cat.hconvex6);
    CHECK(!is_canonical(shuffled));
}

TEST_CASE("crossings of a quadruple") {
    RotationSystem sq = rotation_from_points(square_points());
    auto pair = crossing_of_quadruple(sq, 1, 2, 3, 4);
    REQUIRE(pair.has_value());
    CHECK(*pair == EdgePair(Edge(1, 3), Edge(2, 4)));

    RotationSystem plane = rotation_from_points(plane_k4_points());
    CHECK(!crossing_of_quadruple(plane, 1, 2, 3, 4).has_value());

    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    CHECK_THROWS_AS(crossing_of_quadruple(cat.pi4_obstruction, 1, 2, 3, 4), ValidationError);
    CHECK(contains_pi4(cat.pi4_obstruction));
    CHECK(!contains_pi4(plane));
    CHECK(!contains_pi4(rotation_from_points(random_points_general_position(8, 5))));
}

TEST_CASE("subconfiguration containment") {
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    CHECK(contains_subconfiguration(cat.twisted_T5, cat.twisted_T5));
    CHECK(contains_subconfiguration(cat.twisted_T5, cat.crossing_K4));
    CHECK(!contains_subconfiguration(cat.convex_C5, cat.convex5_1));
}

TEST_CASE("drawability splits the five-element systems five to two") {
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    CHECK(!is_drawable(cat.pi5A));
    CHECK(!is_drawable(cat.pi5B));
    CHECK(is_drawable(rotation_from_points(random_points_general_position(7, 1))));

    int drawable = 0, total = 0;
    for_each_pre_rotation_system(5, [&](const RotationSystem& rs) {
        if (contains_pi4(rs) || !is_canonical(rs)) return;
        ++total;
        if (is_drawable(rs)) ++drawable;
    });
    CHECK(total == 7);
    CHECK(drawable == 5);
}

TEST_CASE("side membership agrees with the point oracle") {
    for (auto& pts : {plane_k4_points(), square_points()}) {
        RotationSystem rs = rotation_from_points(pts);
        for_each_subset(4, 3, [&](const std::vector<Vertex>& t) {
            SideRef plus(t[0], t[1], t[2]);
            Vertex d = 1;
            while (d == t[0] || d == t[1] || d == t[2]) ++d;
            CHECK(side_contains_vertex(rs, plus, d) == oracle_side_contains(pts, plus, d));
            CHECK(side_contains_vertex(rs, plus.opposite(), d) ==
                  oracle_side_contains(pts, plus.opposite(), d));
            CHECK(side_contains_vertex(rs, plus, d) !=
                  side_contains_vertex(rs, plus.opposite(), d));
        });
    }
    std::vector<Point> pts = random_points_general_position(7, 33);
    RotationSystem rs = rotation_from_points(pts);
    for_each_subset(7, 3, [&](const std::vector<Vertex>& t) {
        SideRef side(t[0], t[2], t[1]);
        for (Vertex d = 1; d <= 7; ++d) {
            if (d == t[0] || d == t[1] || d == t[2]) continue;
            CHECK(side_contains_vertex(rs, side, d) == oracle_side_contains(pts, side, d));
        }
    });
    CHECK_THROWS_AS(side_contains_vertex(rs, SideRef(1, 2, 3), 2), ValidationError);
}

TEST_CASE("convex sides") {
    RotationSystem plane = rotation_from_points(plane_k4_points());
    for_each_subset(4, 3, [&](const std::vector<Vertex>& t) {
        CHECK(side_is_convex(plane, SideRef(t[0], t[1], t[2])));
        CHECK(side_is_convex(plane, SideRef(t[0], t[2], t[1])));
    });

    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    int nonconvex_sides = 0;
    for_each_subset(5, 3, [&](const std::vector<Vertex>& t) {
        SideRef s(t[0], t[1], t[2]);
        if (!side_is_convex(cat.twisted_T5, s)) ++nonconvex_sides;
        if (!side_is_convex(cat.twisted_T5, s.opposite())) ++nonconvex_sides;
    });
    CHECK(nonconvex_sides > 0);

    RotationSystem geo = rotation_from_points(random_points_general_position(7, 41));
    for_each_subset(7, 3, [&](const std::vector<Vertex>& t) {
        SideRef s(t[0], t[1], t[2]);
        CHECK((side_is_convex(geo, s) || side_is_convex(geo, s.opposite())));
    });
}

TEST_CASE("convexity hierarchy") {
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    for (std::uint64_t seed : {2u, 3u}) {
        RotationSystem geo = rotation_from_points(random_points_general_position(7, seed));
        CHECK(is_drawable(geo));
        CHECK(is_convex(geo));
        CHECK(is_convex_obstruction(geo));
        CHECK(is_hconvex(geo));
        CHECK(is_hconvex_definitional(geo));
    }
    CHECK(!is_convex(cat.twisted_T5));
    CHECK(!is_convex(cat.convex5_2));
    CHECK(is_convex(cat.hconvex6));
    CHECK(!is_hconvex(cat.hconvex6));
    CHECK(!is_hconvex_definitional(cat.hconvex6));

    for_each_pre_rotation_system(5, [&](const RotationSystem& rs) {
        if (!is_canonical(rs) || !is_drawable(rs)) return;
        CHECK(is_convex(rs) == is_convex_obstruction(rs));
    });
}

TEST_CASE("empty triangles") {
    for (auto& pts : {plane_k4_points(), square_points()})
        CHECK(empty_triangles(rotation_from_points(pts)).count == 4);

    int min_count = 1000;
    for (const RotationSystem& rs : drawable5_canonical())
        min_count = std::min(min_count, empty_triangles(rs).count);
    CHECK(min_count == 6);  // 2n-4 at n=5

    CHECK(empty_triangles(rotation_from_points(convex5_points())).count >= 6);
}

TEST_CASE("plane subsets") {
    RotationSystem c5 = rotation_from_points(convex5_points());
    CHECK(is_plane_subset(c5, {Edge(1, 3)}));
    std::vector<Edge> hull_fan{Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5),
                               Edge(1, 5), Edge(1, 3), Edge(1, 4)};
    CHECK(hull_fan.size() == 2u * 5 - 3);
    CHECK(is_plane_subset(c5, hull_fan));

    RotationSystem sq = rotation_from_points(square_points());
    CHECK(!is_plane_subset(sq, {Edge(1, 3), Edge(2, 4)}));
}

TEST_CASE("exhaustive plane Hamiltonian search") {
    RotationSystem c5 = rotation_from_points(convex5_points());
    auto cycle = brute_force_plane_hamiltonian(c5, HamMode::Cycle);
    REQUIRE(cycle.has_value());
    CHECK(*cycle == std::vector<Vertex>{1, 2, 3, 4, 5});
    CHECK(!brute_force_plane_hamiltonian(c5, HamMode::Cycle, Edge(1, 3)).has_value());
    CHECK(brute_force_plane_hamiltonian(c5, HamMode::Path, Edge(1, 3)).has_value());

    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    int blocked_edges = 0;
    for (Vertex u = 1; u <= 5; ++u)
        for (Vertex v = u + 1; v <= 5; ++v)
            if (!brute_force_plane_hamiltonian(cat.twisted_T5, HamMode::Path, Edge(u, v)))
                ++blocked_edges;
    CHECK(blocked_edges >= 1);

    CHECK_THROWS_AS(brute_force_plane_hamiltonian(c5, HamMode::Cycle, std::nullopt, 4),
                    ValidationError);
}

TEST_CASE("uncrossed edges at small n") {
    CHECK(has_uncrossed_edge(rotation_from_points(plane_k4_points())));
    for (const RotationSystem& rs : drawable5_canonical()) CHECK(has_uncrossed_edge(rs));
    CHECK(has_uncrossed_edge(ObstructionCatalog::builtin().hconvex6));
}

TEST_CASE("equal crossing relations on 4 elements mean equal or reflected") {
    std::map<std::vector<EdgePair>, std::vector<RotationSystem>> groups;
    for_each_pre_rotation_system(4, [&](const RotationSystem& rs) {
        if (contains_pi4(rs)) return;
        groups[crossing_relation(rs).pairs].push_back(rs);
    });
    for (const auto& [pairs, members] : groups) {
        REQUIRE(members.size() <= 2);
        if (members.size() == 2) CHECK(reflect(members[0]) == members[1]);
    }
}

TEST_CASE("catalog entries are canonical and classified as documented") {
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    for (const auto& [name, rs] : cat.entries()) {
        INFO(name);
        CHECK(is_canonical(*rs));
    }
    CHECK(!is_drawable(cat.pi5A));
    CHECK(!is_drawable(cat.pi5B));
    CHECK(is_drawable(cat.convex5_1));
    CHECK(is_drawable(cat.convex5_2));
    CHECK(!is_convex(cat.convex5_1));
    CHECK(!is_convex(cat.convex5_2));
    CHECK(is_convex(cat.hconvex6));
    CHECK(!is_hconvex(cat.hconvex6));
    CHECK(cat.twisted_T5 == cat.convex5_1);
    CHECK(crossing_relation(cat.twisted_T5).pairs.size() == 5);
    CHECK(crossing_relation(cat.convex_C5).pairs.size() == 5);
    CHECK(canonical_form(rotation_from_points(convex5_points())) == cat.convex_C5);
}

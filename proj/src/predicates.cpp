#include "rotsys/predicates.hpp"

#include <algorithm>
#include <array>

#include "rotsys/canonical.hpp"

namespace rotsys {

namespace {

std::array<Vertex, 4> sorted4(Vertex a, Vertex b, Vertex c, Vertex d) {
    std::array<Vertex, 4> q{a, b, c, d};
    std::sort(q.begin(), q.end());
    if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3])
        throw ValidationError("quadruple vertices must be distinct");
    return q;
}

const QuadInfo& quad_info(const RotationSystem& rs, const std::array<Vertex, 4>& q) {
    const QuadInfo& info = quad_table()[quad_signature(rs, q[0], q[1], q[2], q[3])];
    if (info.kind == QuadKind::Obstruction)
        throw ValidationError("quadruple induces the 4-element drawability obstruction");
    return info;
}

EdgePair pairing_edges(const std::array<Vertex, 4>& q, int pair_index) {
    switch (pair_index) {
        case 0: return EdgePair(Edge(q[0], q[1]), Edge(q[2], q[3]));
        case 1: return EdgePair(Edge(q[0], q[2]), Edge(q[1], q[3]));
        default: return EdgePair(Edge(q[0], q[3]), Edge(q[1], q[2]));
    }
}

}  // namespace

bool CrossingRelation::crosses(Edge e, Edge f) const {
    if (e.adjacent(f)) return false;
    return std::binary_search(pairs.begin(), pairs.end(), EdgePair(e, f));
}

bool CrossingRelation::edge_is_crossed(Edge e) const {
    for (const auto& p : pairs)
        if (p.first == e || p.second == e) return true;
    return false;
}

std::optional<EdgePair> crossing_of_quadruple(const RotationSystem& rs, Vertex a, Vertex b,
                                              Vertex c, Vertex d) {
    auto q = sorted4(a, b, c, d);
    const QuadInfo& info = quad_info(rs, q);
    if (info.kind == QuadKind::Plane) return std::nullopt;
    return pairing_edges(q, info.pair_index);
}

bool edges_cross(const RotationSystem& rs, Edge e, Edge f) {
    if (e.adjacent(f)) return false;
    auto q = sorted4(e.u, e.v, f.u, f.v);
    const QuadInfo& info = quad_info(rs, q);
    if (info.kind == QuadKind::Plane) return false;
    return pairing_edges(q, info.pair_index) == EdgePair(e, f);
}

CrossingRelation crossing_relation(const RotationSystem& rs) {
    CrossingRelation rel;
    rel.n = rs.n();
    for_each_subset(rs.n(), 4, [&](const std::vector<Vertex>& s) {
        if (auto p = crossing_of_quadruple(rs, s[0], s[1], s[2], s[3])) rel.pairs.push_back(*p);
    });
    std::sort(rel.pairs.begin(), rel.pairs.end());
    return rel;
}

bool contains_pi4(const RotationSystem& rs) {
    int n = rs.n();
    const auto& table = quad_table();
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            for (Vertex c = b + 1; c <= n; ++c)
                for (Vertex d = c + 1; d <= n; ++d)
                    if (table[quad_signature(rs, a, b, c, d)].kind == QuadKind::Obstruction)
                        return true;
    return false;
}

namespace {

bool contains_any5(const RotationSystem& rs, const RotationSystem& cf1,
                   const RotationSystem& cf2) {
    if (rs.n() < 5) return false;
    bool found = false;
    for_each_subset(rs.n(), 5, [&](const std::vector<Vertex>& s) {
        if (found) return;
        RotationSystem cf = canonical_form(induced(rs, s));
        if (cf == cf1 || cf == cf2) found = true;
    });
    return found;
}

}  // namespace

bool is_drawable(const RotationSystem& rs, const ObstructionCatalog& cat) {
    if (contains_pi4(rs)) return false;
    return !contains_any5(rs, cat.pi5A, cat.pi5B);
}

bool side_contains_vertex(const RotationSystem& rs, const SideRef& side, Vertex d) {
    if (d == side.a || d == side.b || d == side.c)
        throw ValidationError("vertex lies on the triangle");
    auto q = sorted4(side.a, side.b, side.c, d);
    const QuadInfo& info = quad_info(rs, q);
    int excl = (int)(std::find(q.begin(), q.end(), d) - q.begin());
    // Orientation of the query triple relative to the sorted triple.
    std::array<Vertex, 3> t{side.a, side.b, side.c};
    std::array<Vertex, 3> s = t;
    std::sort(s.begin(), s.end());
    bool plus = (t == std::array<Vertex, 3>{s[0], s[1], s[2]}) ||
                (t == std::array<Vertex, 3>{s[1], s[2], s[0]}) ||
                (t == std::array<Vertex, 3>{s[2], s[0], s[1]});
    return plus ? info.side_plus[excl] : !info.side_plus[excl];
}

bool side_is_convex(const RotationSystem& rs, const SideRef& side) {
    int n = rs.n();
    const std::array<Edge, 3> tri{Edge(side.a, side.b), Edge(side.b, side.c),
                                  Edge(side.a, side.c)};
    auto in_closed_side = [&](Vertex v) {
        return v == side.a || v == side.b || v == side.c || side_contains_vertex(rs, side, v);
    };
    std::vector<char> member(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) member[v] = in_closed_side(v);
    for (Vertex u = 1; u <= n; ++u) {
        if (!member[u]) continue;
        for (Vertex v = u + 1; v <= n; ++v) {
            if (!member[v]) continue;
            Edge e(u, v);
            for (const Edge& t : tri)
                if (!e.adjacent(t) && edges_cross(rs, e, t)) return false;
        }
    }
    return true;
}

bool is_convex(const RotationSystem& rs) {
    bool ok = true;
    for_each_subset(rs.n(), 3, [&](const std::vector<Vertex>& s) {
        if (!ok) return;
        SideRef plus(s[0], s[1], s[2]);
        if (!side_is_convex(rs, plus) && !side_is_convex(rs, plus.opposite())) ok = false;
    });
    return ok;
}

bool is_convex_obstruction(const RotationSystem& rs, const ObstructionCatalog& cat) {
    return !contains_any5(rs, cat.convex5_1, cat.convex5_2);
}

bool is_hconvex(const RotationSystem& rs, const ObstructionCatalog& cat) {
    return is_convex(rs) && !contains_subconfiguration(rs, cat.hconvex6, true);
}

bool side_contained_in(const RotationSystem& rs, const SideRef& s1, const SideRef& s2) {
    std::array<Vertex, 3> t1{s1.a, s1.b, s1.c}, t2{s2.a, s2.b, s2.c};
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    if (t1 == t2) return s1.same_side(s2);

    auto in_set = [](const std::array<Vertex, 3>& t, Vertex v) {
        return v == t[0] || v == t[1] || v == t[2];
    };
    // Boundaries may not cross.
    const std::array<Edge, 3> e1{Edge(s1.a, s1.b), Edge(s1.b, s1.c), Edge(s1.a, s1.c)};
    const std::array<Edge, 3> e2{Edge(s2.a, s2.b), Edge(s2.b, s2.c), Edge(s2.a, s2.c)};
    for (const Edge& x : e1)
        for (const Edge& y : e2)
            if (!x.adjacent(y) && edges_cross(rs, x, y)) return false;
    // Corners of the inner triangle sit in the closed outer side.
    for (Vertex v : t1)
        if (!in_set(t2, v) && !side_contains_vertex(rs, s2, v)) return false;
    // The complement region of s2 is attached to the corners of its triangle,
    // so those corners must avoid the open side s1.
    for (Vertex x : t2)
        if (!in_set(t1, x) && side_contains_vertex(rs, s1, x)) return false;
    // Remaining vertices respect the nesting.
    for (Vertex d = 1; d <= rs.n(); ++d) {
        if (in_set(t1, d) || in_set(t2, d)) continue;
        if (side_contains_vertex(rs, s1, d) && !side_contains_vertex(rs, s2, d)) return false;
    }
    return true;
}

bool is_hconvex_definitional(const RotationSystem& rs) {
    if (!is_convex(rs)) return false;
    std::vector<SideRef> sides;
    for_each_subset(rs.n(), 3, [&](const std::vector<Vertex>& s) {
        sides.emplace_back(s[0], s[1], s[2]);
        sides.push_back(sides.back().opposite());
    });
    // Heredity asks for a coherent choice of convex sides: a chosen side may
    // not contain any non-convex side of another triangle. Whether a side is
    // eligible is independent of the other choices, so the choice exists iff
    // every triangle has an eligible convex side.
    auto eligible = [&](const SideRef& s2) {
        if (!side_is_convex(rs, s2)) return false;
        for (const SideRef& s1 : sides) {
            std::array<Vertex, 3> t1{s1.a, s1.b, s1.c}, t2{s2.a, s2.b, s2.c};
            std::sort(t1.begin(), t1.end());
            std::sort(t2.begin(), t2.end());
            if (t1 == t2) continue;
            if (!side_is_convex(rs, s1) && side_contained_in(rs, s1, s2)) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < sides.size(); i += 2)
        if (!eligible(sides[i]) && !eligible(sides[i + 1])) return false;
    return true;
}

EmptyTriangleReport empty_triangles(const RotationSystem& rs) {
    EmptyTriangleReport rep;
    int n = rs.n();
    for_each_subset(n, 3, [&](const std::vector<Vertex>& s) {
        SideRef plus(s[0], s[1], s[2]);
        bool empty_plus = true, empty_minus = true;
        for (Vertex d = 1; d <= n && (empty_plus || empty_minus); ++d) {
            if (d == s[0] || d == s[1] || d == s[2]) continue;
            if (side_contains_vertex(rs, plus, d))
                empty_plus = false;
            else
                empty_minus = false;
        }
        if (empty_plus || empty_minus) rep.triples.push_back({s[0], s[1], s[2]});
    });
    rep.count = (int)rep.triples.size();
    return rep;
}

bool is_plane_subset(const RotationSystem& rs, const std::vector<Edge>& edges) {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].adjacent(edges[j]) && edges_cross(rs, edges[i], edges[j])) return false;
    return true;
}

bool has_uncrossed_edge(const RotationSystem& rs) {
    CrossingRelation rel = crossing_relation(rs);
    for (Vertex u = 1; u <= rs.n(); ++u)
        for (Vertex v = u + 1; v <= rs.n(); ++v)
            if (!rel.edge_is_crossed(Edge(u, v))) return true;
    return false;
}

namespace {

struct HamSearch {
    const CrossingRelation& rel;
    HamMode mode;
    std::optional<Edge> required;
    int n;
    std::vector<Vertex> path;
    std::vector<char> used;

    bool contains_required() const {
        if (!required) return true;
        for (int i = 0; i + 1 < n; ++i)
            if (Edge(path[i], path[i + 1]) == *required) return true;
        if (mode == HamMode::Cycle && Edge(path[n - 1], path[0]) == *required) return true;
        return false;
    }

    bool edge_ok(Edge e) const {
        for (int i = 0; i + 1 < (int)path.size(); ++i)
            if (rel.crosses(Edge(path[i], path[i + 1]), e)) return false;
        return true;
    }

    bool extend() {
        if ((int)path.size() == n) {
            if (mode == HamMode::Cycle) {
                Edge close(path.back(), path.front());
                if (!edge_ok(close)) return false;
            }
            return contains_required();
        }
        for (Vertex v = 1; v <= n; ++v) {
            if (used[v]) continue;
            // Skip reversed duplicates of cycles.
            if (mode == HamMode::Cycle && (int)path.size() == n - 1 && v < path[1]) continue;
            Edge e(path.back(), v);
            if (!edge_ok(e)) continue;
            used[v] = 1;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> brute_force_plane_hamiltonian(const RotationSystem& rs,
                                                                 HamMode mode,
                                                                 std::optional<Edge> required_edge,
                                                                 int oracle_bound) {
    if (rs.n() > oracle_bound)
        throw ValidationError("instance exceeds the exhaustive-search bound");
    CrossingRelation rel = crossing_relation(rs);
    HamSearch search{rel, mode, required_edge, rs.n(), {}, std::vector<char>(rs.n() + 1, 0)};
    std::vector<Vertex> starts;
    if (mode == HamMode::Cycle)
        starts = {1};
    else
        for (Vertex v = 1; v <= rs.n(); ++v) starts.push_back(v);
    for (Vertex s : starts) {
        search.path = {s};
        std::fill(search.used.begin(), search.used.end(), 0);
        search.used[s] = 1;
        if (search.extend()) return search.path;
    }
    return std::nullopt;
}

}  // namespace rotsys

#pragma once

// Test-only ground truth computed straight from integer coordinates, kept
// independent of the lookup-table code paths it checks.

#include <algorithm>
#include <vector>

#include "rotsys/geometry.hpp"
#include "rotsys/predicates.hpp"

namespace rotsys {
namespace testing {

inline std::vector<EdgePair> oracle_crossing_pairs(const std::vector<Point>& pts) {
    int n = (int)pts.size();
    std::vector<EdgePair> out;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            for (Vertex c = a + 1; c <= n; ++c)
                for (Vertex d = c + 1; d <= n; ++d) {
                    if (c == b || d == b) continue;
                    if (Edge(a, b) < Edge(c, d) &&
                        segments_cross(pts[a - 1], pts[b - 1], pts[c - 1], pts[d - 1]))
                        out.emplace_back(Edge(a, b), Edge(c, d));
                }
    std::sort(out.begin(), out.end());
    return out;
}

// Membership of point d in the side of triangle (a,b,c) that reads a,b,c
// counterclockwise from its interior.
inline bool oracle_side_contains(const std::vector<Point>& pts, const SideRef& side, Vertex d) {
    const Point& pa = pts[side.a - 1];
    const Point& pb = pts[side.b - 1];
    const Point& pc = pts[side.c - 1];
    const Point& pd = pts[d - 1];
    bool inside = point_in_triangle(pd, pa, pb, pc);
    return (orientation(pa, pb, pc) > 0) == inside;
}

inline std::vector<Point> plane_k4_points() { return {{0, 0}, {4, 0}, {2, 4}, {2, 1}}; }
inline std::vector<Point> square_points() { return {{0, 0}, {4, 0}, {4, 4}, {0, 4}}; }
inline std::vector<Point> convex5_points() {
    return {{0, 0}, {10, 0}, {13, 9}, {5, 15}, {-3, 9}};
}

}  // namespace testing
}  // namespace rotsys

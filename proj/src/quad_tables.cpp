#include "rotsys/quad_tables.hpp"

#include <algorithm>

#include "rotsys/geometry.hpp"

namespace rotsys {

namespace {

struct DerivedQuad {
    bool defined = false;
    QuadInfo info;
};

int signature_of_labeled(const RotationSystem& rs) {
    int sig = 0;
    static const int triples[4][3] = {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
    for (int i = 0; i < 4; ++i)
        if (rs.ccw(i + 1, triples[i][0], triples[i][1], triples[i][2])) sig |= 1 << i;
    return sig;
}

std::array<QuadInfo, 16> derive() {
    const std::vector<Point> plane_pts = {{0, 0}, {4, 0}, {2, 4}, {2, 1}};
    const std::vector<Point> cross_pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    static const int pairings[3][4] = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}};

    std::array<DerivedQuad, 16> table{};
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        for (int mirror = 0; mirror < 2; ++mirror) {
            for (const auto& base : {plane_pts, cross_pts}) {
                std::vector<Point> pts(4);
                for (int i = 0; i < 4; ++i) {
                    pts[i] = base[perm[i]];
                    if (mirror) pts[i].y = -pts[i].y;
                }
                RotationSystem rs = rotation_from_points(pts);
                QuadInfo info;
                info.kind = QuadKind::Plane;
                for (int p = 0; p < 3; ++p) {
                    Point a = pts[pairings[p][0] - 1], b = pts[pairings[p][1] - 1];
                    Point c = pts[pairings[p][2] - 1], d = pts[pairings[p][3] - 1];
                    if (segments_cross(a, b, c, d)) {
                        info.kind = QuadKind::Crossing;
                        info.pair_index = p;
                        info.left_to_right = orientation(a, b, c) > 0;
                    }
                }
                for (int excl = 0; excl < 4; ++excl) {
                    int t[3], k = 0;
                    for (int i = 0; i < 4; ++i)
                        if (i != excl) t[k++] = i;
                    const Point &x = pts[t[0]], &y = pts[t[1]], &z = pts[t[2]];
                    bool inside = point_in_triangle(pts[excl], x, y, z);
                    // The side reading x,y,z counterclockwise is the bounded one
                    // exactly when the corners are in counterclockwise position.
                    info.side_plus[excl] = (orientation(x, y, z) > 0) == inside;
                }
                int sig = signature_of_labeled(rs);
                if (table[sig].defined) {
                    const QuadInfo& prev = table[sig].info;
                    if (prev.kind != info.kind || prev.pair_index != info.pair_index ||
                        prev.left_to_right != info.left_to_right ||
                        prev.side_plus != info.side_plus)
                        throw Error("inconsistent 4-element derivation");
                } else {
                    table[sig] = {true, info};
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::array<QuadInfo, 16> out{};
    int planes = 0, crossings = 0;
    for (int sig = 0; sig < 16; ++sig) {
        if (table[sig].defined) {
            out[sig] = table[sig].info;
            (out[sig].kind == QuadKind::Plane ? planes : crossings)++;
        } else {
            out[sig].kind = QuadKind::Obstruction;
        }
    }
    if (planes != 2 || crossings != 6)
        throw Error("unexpected 4-element classification counts");
    return out;
}

}  // namespace

const std::array<QuadInfo, 16>& quad_table() {
    static const std::array<QuadInfo, 16> table = derive();
    return table;
}

int quad_signature(const RotationSystem& rs, Vertex a, Vertex b, Vertex c, Vertex d) {
    int sig = 0;
    if (rs.ccw(a, b, c, d)) sig |= 1;
    if (rs.ccw(b, a, c, d)) sig |= 2;
    if (rs.ccw(c, a, b, d)) sig |= 4;
    if (rs.ccw(d, a, b, c)) sig |= 8;
    return sig;
}

const std::vector<int>& obstruction_signatures() {
    static const std::vector<int> sigs = [] {
        std::vector<int> s;
        for (int sig = 0; sig < 16; ++sig)
            if (quad_table()[sig].kind == QuadKind::Obstruction) s.push_back(sig);
        return s;
    }();
    return sigs;
}

}  // namespace rotsys

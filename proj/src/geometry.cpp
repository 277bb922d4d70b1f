#include "rotsys/geometry.hpp"

#include <algorithm>
#include <random>

namespace rotsys {

int orientation(const Point& p, const Point& q, const Point& r) {
    // Coordinates are kept small enough that the products fit in int64.
    std::int64_t det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == c || a == d || b == c || b == d) return false;
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

bool point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    int o1 = orientation(a, b, p), o2 = orientation(b, c, p), o3 = orientation(c, a, p);
    return o1 != 0 && o1 == o2 && o2 == o3;
}

void require_general_position(const std::vector<Point>& pts) {
    int n = (int)pts.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) throw ValidationError("duplicate point");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(pts[i], pts[j], pts[k]) == 0)
                    throw ValidationError("collinear triple of points");
}

namespace {

// Half-plane index for the direction (dx,dy): 0 for angles in [0,pi), 1 for [pi,2pi).
int half(std::int64_t dx, std::int64_t dy) {
    return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
}

}  // namespace

RotationSystem rotation_from_points(const std::vector<Point>& pts) {
    int n = (int)pts.size();
    if (n < 3) throw ValidationError("need at least 3 points");
    require_general_position(pts);

    std::vector<std::vector<Vertex>> rows(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Vertex> others;
        for (int u = 0; u < n; ++u)
            if (u != v) others.push_back(u + 1);
        const Point& pv = pts[v];
        std::sort(others.begin(), others.end(), [&](Vertex a, Vertex b) {
            const Point& pa = pts[a - 1];
            const Point& pb = pts[b - 1];
            int ha = half(pa.x - pv.x, pa.y - pv.y);
            int hb = half(pb.x - pv.x, pb.y - pv.y);
            if (ha != hb) return ha < hb;
            return orientation(pv, pa, pb) > 0;
        });
        rows[v] = std::move(others);
    }
    return RotationSystem::from_rows(n, std::move(rows));
}

std::vector<Point> random_points_general_position(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Box grows with n^2 so collinear rejections stay rare; coordinates stay
    // far below the int64 overflow bound of the orientation test.
    std::int64_t box = std::max<std::int64_t>(64, (std::int64_t)n * n * 4);
    std::uniform_int_distribution<std::int64_t> coord(0, box - 1);
    std::vector<Point> pts;
    pts.reserve(n);
    while ((int)pts.size() < n) {
        Point p{coord(rng), coord(rng)};
        bool ok = true;
        for (size_t i = 0; ok && i < pts.size(); ++i) {
            if (pts[i] == p) ok = false;
            for (size_t j = i + 1; ok && j < pts.size(); ++j)
                if (orientation(pts[i], pts[j], p) == 0) ok = false;
        }
        if (ok) pts.push_back(p);
    }
    return pts;
}

}  // namespace rotsys

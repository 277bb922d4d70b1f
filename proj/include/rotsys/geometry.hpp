#pragma once

#include <cstdint>
#include <vector>

#include "rotsys/rotation_system.hpp"

namespace rotsys {

// Integer-coordinate planar point. All predicates are exact sign tests.
struct Point {
    std::int64_t x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// Proper interior crossing of segments ab and cd (shared endpoints do not count).
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// Strict interior of triangle abc.
bool point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

// No two points equal, no three collinear.
void require_general_position(const std::vector<Point>& pts);

/// Rotation system of the straight-line drawing on the given points (vertex i+1
/// at pts[i]): row v lists the other points counterclockwise by angle around v.
RotationSystem rotation_from_points(const std::vector<Point>& pts);

// Random integer points in general position, deterministic in the seed.
std::vector<Point> random_points_general_position(int n, std::uint64_t seed);

}  // namespace rotsys

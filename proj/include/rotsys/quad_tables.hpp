#pragma once

#include <array>
#include <optional>

#include "rotsys/rotation_system.hpp"

namespace rotsys {

// A 4-element rotation system on fixed labels is determined by one bit per
// vertex (each row is one of two cyclic orders). For a sorted quadruple
// q0<q1<q2<q3 the signature packs bit i = ccw(q_i, remaining three ascending).
// 16 signatures: 2 are the plane K4, 6 the crossing K4 (one per crossing pair
// and traversal direction), and the remaining 8 form the drawability
// obstruction on 4 elements.
enum class QuadKind { Plane, Crossing, Obstruction };

struct QuadInfo {
    QuadKind kind = QuadKind::Obstruction;
    // For Crossing: which pairing crosses, indexed 0:{q0,q1}x{q2,q3},
    // 1:{q0,q2}x{q1,q3}, 2:{q0,q3}x{q1,q2}.
    int pair_index = -1;
    // For Crossing: true iff the directed second edge (low to high label)
    // traverses the directed first edge from its left to its right.
    bool left_to_right = false;
    // side_plus[i]: the excluded vertex q_i lies in the side of the remaining
    // sorted triple (x,y,z) from whose interior x,y,z read counterclockwise.
    std::array<bool, 4> side_plus{};
};

// The 16-entry table, derived once from two straight-line drawings (a plane
// K4 and a crossed K4) under all relabelings and reflections.
const std::array<QuadInfo, 16>& quad_table();

// Signature of the 4-subsystem induced by a<b<c<d.
int quad_signature(const RotationSystem& rs, Vertex a, Vertex b, Vertex c, Vertex d);

// Signatures classified as the 4-element obstruction, ascending.
const std::vector<int>& obstruction_signatures();

}  // namespace rotsys

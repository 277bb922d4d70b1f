#pragma once

#include <optional>

#include "rotsys/catalog.hpp"
#include "rotsys/quad_tables.hpp"
#include "rotsys/rotation_system.hpp"
#include "rotsys/types.hpp"

namespace rotsys {

/// All crossing pairs of a pi4-obstruction-free pre-rotation system: the set
/// of unordered pairs of independent edges whose induced 4-subsystem crosses.
struct CrossingRelation {
    int n = 0;
    std::vector<EdgePair> pairs;  // sorted, each stored once

    bool crosses(Edge e, Edge f) const;
    bool edge_is_crossed(Edge e) const;
};

// The unique crossing pair of the quadruple, or nothing for a plane K4.
// Throws if the induced 4-subsystem is the 4-element obstruction.
std::optional<EdgePair> crossing_of_quadruple(const RotationSystem& rs, Vertex a, Vertex b,
                                              Vertex c, Vertex d);

// Point query without materializing the full relation; e and f independent.
bool edges_cross(const RotationSystem& rs, Edge e, Edge f);

CrossingRelation crossing_relation(const RotationSystem& rs);

// Some quadruple induces the 4-element obstruction.
bool contains_pi4(const RotationSystem& rs);

// No pi4 obstruction and neither 5-element obstruction occurs.
bool is_drawable(const RotationSystem& rs,
                 const ObstructionCatalog& cat = ObstructionCatalog::builtin());

// Membership of d in the open side S_{a,b,c}; d must avoid the triangle and
// the 4-subsystem must be drawable.
bool side_contains_vertex(const RotationSystem& rs, const SideRef& side, Vertex d);

// Every edge with both endpoints in the closed side stays inside: none of
// them crosses a triangle edge.
bool side_is_convex(const RotationSystem& rs, const SideRef& side);

// Every triangle has a convex side.
bool is_convex(const RotationSystem& rs);
// Equivalent obstruction form: neither 5-element convexity obstruction occurs.
bool is_convex_obstruction(const RotationSystem& rs,
                           const ObstructionCatalog& cat = ObstructionCatalog::builtin());

// Convex and free of the 6-element heredity obstruction.
bool is_hconvex(const RotationSystem& rs,
                const ObstructionCatalog& cat = ObstructionCatalog::builtin());

// Definitional heredity test: every triangle side fully contained in a convex
// side of another triangle is itself convex. Containment is decided by vertex
// membership plus boundary non-crossing; used as a cross-check and by the
// catalog derivation.
bool is_hconvex_definitional(const RotationSystem& rs);

// Side s1 of its triangle lies fully inside side s2 of a different triangle.
bool side_contained_in(const RotationSystem& rs, const SideRef& s1, const SideRef& s2);

struct EmptyTriangleReport {
    int count = 0;                              // per 3-set
    std::vector<std::array<Vertex, 3>> triples;  // sorted
};

// 3-sets with at least one side whose interior holds no vertex.
EmptyTriangleReport empty_triangles(const RotationSystem& rs);

// No pair of the given edges crosses.
bool is_plane_subset(const RotationSystem& rs, const std::vector<Edge>& edges);

bool has_uncrossed_edge(const RotationSystem& rs);

enum class HamMode { Cycle, Path };

// Exhaustive search with crossing-based pruning; n is capped by oracle_bound.
std::optional<std::vector<Vertex>> brute_force_plane_hamiltonian(
    const RotationSystem& rs, HamMode mode, std::optional<Edge> required_edge = std::nullopt,
    int oracle_bound = 10);

}  // namespace rotsys

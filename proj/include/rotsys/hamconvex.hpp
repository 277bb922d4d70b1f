#pragma once

#include <optional>

#include "rotsys/predicates.hpp"
#include "rotsys/rotation_system.hpp"

namespace rotsys {
namespace hamconvex {

/// Structure of the rotation-consecutive edges around a star vertex after the
/// canonical relabeling: the star vertex becomes n, the others 1..n-1 in
/// rotation order, cyclically shifted so all witnesses get labels below all
/// bad-edge vertices and the last bad edge is {n-2, n-1}.
///
/// Local labels throughout; to_global maps back to the input labeling.
struct BadEdgeDecomposition {
    int n = 0;
    Vertex star = 0;                 // original label of the star vertex
    std::vector<Vertex> to_global;   // local 1..n -> original
    std::vector<Vertex> to_local;    // original 1..n -> local

    // Bad edge i (0-based) is {v[i], v[i]+1}; 1 < v[0] < ... < v[m-1] = n-2.
    std::vector<int> v;
    std::vector<int> witness_min;    // w^L per bad edge
    std::vector<int> witness_max;    // w^R per bad edge

    // l-tables, one per block between consecutive bad edges: l_table[i][r -
    // (v[i]+1)] for r in v[i]+1 .. v[i+1]; kNoLeft for "-infinity".
    static constexpr int kNoLeft = -1;
    std::vector<std::vector<int>> l_table;

    int bad_edge_count() const { return (int)v.size(); }
};

struct HamCycleResult {
    std::vector<Vertex> sequence;  // original labels; closed when cycle
    bool is_cycle = true;
    std::vector<Edge> edges() const;
};

struct VerifyReport {
    bool hamiltonian = false;
    bool cycle_plane = false;
    bool star_avoiding = false;
    bool union_plane_2n3 = false;
    bool rotation_order = false;  // traversal follows the rotation around the star

    bool pass(bool require_rotation_order = false) const {
        return hamiltonian && cycle_plane && star_avoiding && union_plane_2n3 &&
               (!require_rotation_order || rotation_order);
    }
};

/// Classifies the rotation-consecutive edges around the star vertex as good
/// or bad, picks the cyclic shift giving sidedness and nestedness, and fills
/// witness extremes, blocks and l-tables. Throws NotConvexError when no shift
/// satisfies the invariants only convex drawings guarantee.
BadEdgeDecomposition find_bad_edges(const RotationSystem& rs, Vertex star);

/// Plane Hamiltonian cycle avoiding all edges incident to the star vertex,
/// in O(n^2): the rotation cycle when at most one bad edge exists, otherwise
/// the block construction over the decomposition. The result is verified
/// before it is returned.
HamCycleResult plane_hc_convex(const RotationSystem& rs, Vertex star);

/// Independent checker: Hamiltonicity, pairwise non-crossing cycle, no
/// crossing with star edges, star and cycle forming 2n-3 plane edges, and
/// rotation-order traversal.
VerifyReport verify_hc(const RotationSystem& rs, Vertex star, const HamCycleResult& result);

/// Plane Hamiltonian path containing the edge e, from the star construction
/// at e's endpoint plus a reroute when e is a chord of that cycle.
HamCycleResult plane_hp_with_edge(const RotationSystem& rs, Edge e);

// Pure path/cycle checker used by plane_hp_with_edge and tests.
bool verify_plane_path(const RotationSystem& rs, const HamCycleResult& result,
                       std::optional<Edge> required_edge);

enum class NestedLemmaCheck {
    Part1,        // distinct witnesses, cyclic order w' w v v'
    Part2Case1,   // v' avoids the non-convex side of {v, v+1, star}
    Part2Case2,   // v'+1 avoids it when v+1 != v'
    Part2Case3,   // v'+1 avoids it when v+1 == v'
};

// True iff the property holds for every star vertex and every pair of bad edges.
bool check_nested_lemma(const RotationSystem& rs, NestedLemmaCheck check);

// Number of rotation-consecutive edges around the star that cross a star edge.
int star_bad_edge_count(const RotationSystem& rs, Vertex star);

}  // namespace hamconvex
}  // namespace rotsys

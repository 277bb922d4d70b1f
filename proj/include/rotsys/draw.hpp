#pragma once

#include <iosfwd>
#include <map>

#include "rotsys/cnf.hpp"
#include "rotsys/predicates.hpp"
#include "rotsys/rotation_system.hpp"

namespace rotsys {
namespace draw {

// Vertices 1..vertex_count, undirected simple edges.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Planar graph obtained from a drawing by replacing each crossing with a
/// degree-4 vertex: original vertices 1..n, crossing vertex i at id n+i.
struct Planarization {
    int n = 0;
    std::vector<EdgePair> crossings;  // index i -> vertex id n+1+i
    std::map<Edge, std::vector<int>> sigma;  // per edge: u, crossings..., v
    std::vector<std::pair<int, int>> adjacency;  // sorted, unique

    int vertex_count() const { return n + (int)crossings.size(); }
    SimpleGraph graph() const { return SimpleGraph{vertex_count(), adjacency}; }
    void write_json(std::ostream& out) const;
};

// Crossings along each edge, as indices into crossing_relation(rs).pairs.
std::map<Edge, std::vector<int>> crossing_segments(const RotationSystem& rs);

/// Satisfiable iff some order of the crossings along each edge yields a
/// planar graph, certified by three total orders meeting the incidence
/// condition: for every edge {p,q} and vertex w some order puts both p and q
/// below w. Decides drawability of a pi4-obstruction-free system.
CnfInstance encode_drawability(const RotationSystem& rs);

Planarization extract_planarization(const RotationSystem& rs, const CnfInstance& inst,
                                    const std::vector<bool>& model);

// One-call variant: build, solve, extract.
std::optional<Planarization> find_planarization(const RotationSystem& rs);

bool is_drawable_sat(const RotationSystem& rs);

// Order-dimension planarity test for an arbitrary fixed graph.
bool planarity_fixed_graph(const SimpleGraph& g);

}  // namespace draw
}  // namespace rotsys

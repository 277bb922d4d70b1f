#pragma once

#include "rotsys/catalog.hpp"
#include "rotsys/cnf.hpp"
#include "rotsys/rotation_system.hpp"

namespace rotsys {
namespace encode {

struct EncodeOptions {
    bool forbid_pi4 = true;   // off: "v4" relaxation, nothing is excluded
    bool forbid_pi5 = true;   // off: "v5" relaxation, only the 4-element obstruction
    bool convex = false;
    bool hconvex = false;
    bool natural = true;      // row of vertex 1 fixed to the identity
    bool crossing_vars = false;

    void validate() const;
};

/// Base instance over the X/Y families: cyclic-permutation rows, first-entry
/// normalization, X-Y synchronization, the selected obstruction blocks, and
/// optionally the crossing variables. Satisfying assignments decode to exactly
/// the pre-rotation systems with the selected properties.
CnfInstance new_instance(int n, const EncodeOptions& opts,
                         const ObstructionCatalog* cat = &ObstructionCatalog::builtin());

// One clause per labeled variant of obs per |obs|-subset of [n].
void add_forbidden_subconfiguration(CnfInstance& inst, const RotationSystem& obs);

// C/D variables for every quadruple, each D tied to the Y-pattern of its
// unique labeled 4-element rotation system; C = D or D-reversed.
void add_crossing_vars(CnfInstance& inst);

// Crossing variable of two independent edges as a positive literal.
int crossing_lit(const CnfInstance& inst, Edge e, Edge f);

// For every undirected Hamiltonian cycle, some pair of its edges crosses.
void forbid_plane_hamiltonian_cycle(CnfInstance& inst, int enumeration_bound = 10);

// For every Hamiltonian cycle and every completion to 2n-3 edges, some pair crosses.
void forbid_plane_hamiltonian_2n3(CnfInstance& inst, int enumeration_bound = 8);

// The cycle 1,2,...,n is plane but no (n-3)-edge completion keeps it plane.
void assert_unextendable_fixed_hc(CnfInstance& inst);

// The matching {1,2},...,{2k-1,2k} is plane and every Hamiltonian cycle
// either self-crosses or crosses it; includes the rotation-of-vertex-1
// symmetry-breaking units.
void assert_matching_unavoidable(CnfInstance& inst, int k, int enumeration_bound = 10);

// Every edge crosses some other edge.
void assert_all_edges_crossed(CnfInstance& inst);

// Side-emptiness variables plus a bound on the number of empty 3-sets.
void assert_empty_triangles_atmost(CnfInstance& inst, int k);

// At most k of the literals are true; sequential-counter auxiliaries.
void cardinality_atmost(CnfInstance& inst, const std::vector<int>& lits, int k);

// True literal of X_{a,i,b}.
int x_lit(const CnfInstance& inst, Vertex a, int i, Vertex b);
// Signed literal meaning ccw(a, b, c, d).
int y_lit(const CnfInstance& inst, Vertex a, Vertex b, Vertex c, Vertex d);

}  // namespace encode
}  // namespace rotsys

#pragma once

#include <functional>

#include "rotsys/rotation_system.hpp"

namespace rotsys {

/// Lexicographic minimum of the flattened row matrix over all natural
/// relabelings (choice of first and second vertex, n(n-1) of them) of rs and
/// of reflect(rs).
RotationSystem canonical_form(const RotationSystem& rs);

bool is_canonical(const RotationSystem& rs);

// True iff some induced |obs.n|-subsystem of rs is isomorphic to obs.
bool contains_subconfiguration(const RotationSystem& rs, const RotationSystem& obs);
bool contains_subconfiguration(const RotationSystem& rs, const RotationSystem& obs_canonical_form,
                               bool already_canonical);

// All sorted k-subsets of [1..n].
void for_each_subset(int n, int k, const std::function<void(const std::vector<Vertex>&)>& fn);

// Every normalized pre-rotation system on n elements ((n-2)!^n of them);
// intended for small n.
void for_each_pre_rotation_system(int n, const std::function<void(const RotationSystem&)>& fn);

}  // namespace rotsys

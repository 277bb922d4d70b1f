#pragma once

#include "rotsys/catalog.hpp"

namespace rotsys {

struct BootstrapCounts {
    int canonical4 = 0;          // canonical pre-rotation systems on 4 elements
    int canonical5_pi4free = 0;  // canonical pi4-free systems on 5 elements
    int drawable5 = 0;
    int nonconvex5 = 0;          // drawable but not convex on 5 elements
    int drawable6 = 0;
    int convex6 = 0;
    int nonhconvex6 = 0;  // convex but not hereditarily convex on 6 elements
};

/// Derives the full catalog from scratch: the 4-element obstruction by
/// brute-force classification, the 5-element drawability obstructions by the
/// planarity-certificate solver, the convexity obstructions by the
/// triangle-side test, and the 6-element heredity obstruction from the
/// enumerated drawable 6-element systems. Throws if any derived count
/// disagrees with the expected 3/7/5/2/1 pattern.
ObstructionCatalog bootstrap_catalog(BootstrapCounts* counts = nullptr);

}  // namespace rotsys

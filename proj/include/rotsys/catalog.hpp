#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/rotation_system.hpp"

namespace rotsys {

/// Canonical forms of the forbidden subconfigurations plus reference systems.
/// pi5A/pi5B fail drawability; convex5_1/convex5_2 are drawable but not
/// convex (convex5_1 is the perfect twisted T5); hconvex6 is convex but not
/// hereditarily convex. All entries are stored lexicographically minimal.
struct ObstructionCatalog {
    RotationSystem pi4_obstruction;
    RotationSystem pi5A, pi5B;
    RotationSystem convex5_1, convex5_2;
    RotationSystem hconvex6;

    RotationSystem plane_K4, crossing_K4;
    RotationSystem convex_C5, twisted_T5;

    // Name/value view in a fixed order.
    std::vector<std::pair<std::string, const RotationSystem*>> entries() const;

    void write_jsonl(std::ostream& out) const;
    static ObstructionCatalog read_jsonl(std::istream& in);

    friend bool operator==(const ObstructionCatalog&, const ObstructionCatalog&) = default;

    // The derived catalog baked into the library. A regression path re-derives
    // it from scratch (see bootstrap_catalog) and must reproduce these values.
    static const ObstructionCatalog& builtin();
};

}  // namespace rotsys

#include "rotsys/bootstrap.hpp"

#include <algorithm>
#include <optional>

#include "rotsys/canonical.hpp"
#include "rotsys/draw.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/geometry.hpp"
#include "rotsys/hamconvex.hpp"
#include "rotsys/predicates.hpp"
#include "rotsys/solve.hpp"

namespace rotsys {

namespace {

std::vector<RotationSystem> canonical_pre_rotation_systems(int n, bool pi4_free) {
    std::vector<RotationSystem> out;
    for_each_pre_rotation_system(n, [&](const RotationSystem& rs) {
        if (pi4_free && contains_pi4(rs)) return;
        if (is_canonical(rs)) out.push_back(rs);
    });
    std::sort(out.begin(), out.end());
    return out;
}

void expect(bool cond, const char* what) {
    if (!cond) throw Error(std::string("catalog derivation failed: ") + what);
}

}  // namespace

ObstructionCatalog bootstrap_catalog(BootstrapCounts* counts) {
    BootstrapCounts c;

    // Reference systems from integer point sets.
    RotationSystem plane_k4 =
        canonical_form(rotation_from_points({{0, 0}, {4, 0}, {2, 4}, {2, 1}}));
    RotationSystem crossing_k4 =
        canonical_form(rotation_from_points({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
    RotationSystem convex_c5 = canonical_form(
        rotation_from_points({{0, 0}, {10, 0}, {13, 9}, {5, 15}, {-3, 9}}));

    // 4 elements: two drawable classes plus the obstruction.
    std::vector<RotationSystem> can4 = canonical_pre_rotation_systems(4, false);
    c.canonical4 = (int)can4.size();
    expect(c.canonical4 == 3, "expected 3 canonical systems on 4 elements");
    std::optional<RotationSystem> pi4;
    for (const auto& rs : can4)
        if (rs != plane_k4 && rs != crossing_k4) {
            expect(!pi4.has_value(), "two candidate 4-element obstructions");
            pi4 = rs;
        }
    expect(pi4.has_value() && contains_pi4(*pi4), "4-element obstruction not identified");

    // 5 elements: the drawability solver splits the pi4-free systems.
    std::vector<RotationSystem> can5 = canonical_pre_rotation_systems(5, true);
    c.canonical5_pi4free = (int)can5.size();
    expect(c.canonical5_pi4free == 7, "expected 7 canonical pi4-free systems on 5 elements");
    std::vector<RotationSystem> drawable5, obstructions5;
    for (const auto& rs : can5)
        (draw::is_drawable_sat(rs) ? drawable5 : obstructions5).push_back(rs);
    c.drawable5 = (int)drawable5.size();
    expect(c.drawable5 == 5, "expected 5 drawable systems on 5 elements");
    expect(obstructions5.size() == 2, "expected 2 drawability obstructions on 5 elements");

    // Convexity obstructions: drawable 5-element systems without a convex
    // side for some triangle. The twisted one is the crossing-maximal
    // drawable system that is not the convex C5.
    std::vector<RotationSystem> nonconvex5;
    for (const auto& rs : drawable5)
        if (!is_convex(rs)) nonconvex5.push_back(rs);
    c.nonconvex5 = (int)nonconvex5.size();
    expect(c.nonconvex5 == 2, "expected 2 convexity obstructions on 5 elements");

    std::optional<RotationSystem> twisted;
    for (const auto& rs : drawable5) {
        if (rs == convex_c5) continue;
        if (crossing_relation(rs).pairs.size() == 5) {
            expect(!twisted.has_value(), "two crossing-maximal non-convex candidates");
            twisted = rs;
        }
    }
    expect(twisted.has_value(), "crossing-maximal twisted system not found");
    expect(crossing_relation(convex_c5).pairs.size() == 5,
           "convex position system must have 5 crossings");
    // convex5_1 is the twisted system; convex5_2 the other non-convex one.
    RotationSystem convex5_1 = *twisted;
    std::optional<RotationSystem> convex5_2;
    for (const auto& rs : nonconvex5)
        if (rs != convex5_1) convex5_2 = rs;
    expect(convex5_2.has_value() && std::count(nonconvex5.begin(), nonconvex5.end(),
                                               convex5_1) == 1,
           "twisted system must be one of the two convexity obstructions");

    // 6 elements: enumerate the drawable systems with the SAT pipeline using
    // the freshly derived 5-element obstructions, then split off the single
    // convex-but-not-hereditarily-convex one.
    ObstructionCatalog partial{*pi4,     obstructions5[0], obstructions5[1], convex5_1,
                               *convex5_2, convex_c5,       plane_k4,         crossing_k4,
                               convex_c5, convex5_1};
    encode::EncodeOptions opts;
    CnfInstance inst6 = encode::new_instance(6, opts, &partial);
    std::vector<RotationSystem> drawable6;
    solve::enumerate_all(inst6, true, [&](const RotationSystem& rs, const std::vector<bool>&) {
        drawable6.push_back(rs);
        return true;
    });
    std::sort(drawable6.begin(), drawable6.end());
    c.drawable6 = (int)drawable6.size();
    expect(c.drawable6 == 102, "expected 102 drawable systems on 6 elements");

    std::optional<RotationSystem> hconvex6;
    for (const auto& rs : drawable6) {
        if (!is_convex(rs)) continue;
        ++c.convex6;
        bool heredity_fails = !is_hconvex_definitional(rs);
        // Independent route: hereditarily convex drawings leave at most one
        // bad rotation-consecutive edge around every star vertex.
        bool multi_bad_star = false;
        for (Vertex star = 1; star <= 6; ++star)
            if (hamconvex::star_bad_edge_count(rs, star) >= 2) multi_bad_star = true;
        expect(heredity_fails == multi_bad_star,
               "heredity test and bad-edge criterion disagree on 6 elements");
        if (heredity_fails) {
            ++c.nonhconvex6;
            expect(!hconvex6.has_value(),
                   "expected exactly one non-hereditary convex system on 6 elements");
            hconvex6 = rs;
        }
    }
    expect(hconvex6.has_value(), "6-element heredity obstruction not found");

    ObstructionCatalog catalog{*pi4,      obstructions5[0], obstructions5[1], convex5_1,
                               *convex5_2, *hconvex6,       plane_k4,         crossing_k4,
                               convex_c5, convex5_1};
    for (const auto& [name, rs] : catalog.entries())
        expect(is_canonical(*rs), "catalog entry not canonical");
    if (counts) *counts = c;
    return catalog;
}

}  // namespace rotsys

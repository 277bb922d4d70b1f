#include "rotsys/catalog.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "rotsys/corpus_io.hpp"

namespace rotsys {

std::vector<std::pair<std::string, const RotationSystem*>> ObstructionCatalog::entries() const {
    return {
        {"pi4_obstruction", &pi4_obstruction},
        {"pi5A", &pi5A},
        {"pi5B", &pi5B},
        {"convex5_1", &convex5_1},
        {"convex5_2", &convex5_2},
        {"hconvex6", &hconvex6},
        {"plane_K4", &plane_K4},
        {"crossing_K4", &crossing_K4},
        {"convex_C5", &convex_C5},
        {"twisted_T5", &twisted_T5},
    };
}

void ObstructionCatalog::write_jsonl(std::ostream& out) const {
    for (const auto& [name, rs] : entries()) write_corpus_record(out, *rs, name);
}

ObstructionCatalog ObstructionCatalog::read_jsonl(std::istream& in) {
    std::map<std::string, RotationSystem> named;
    read_corpus(in, [&](RotationSystem rs, const std::string& name) {
        if (name.empty()) throw ValidationError("catalog record without a name");
        named.emplace(name, std::move(rs));
    });
    auto get = [&](const char* name) -> const RotationSystem& {
        auto it = named.find(name);
        if (it == named.end())
            throw ValidationError(std::string("catalog file misses entry ") + name);
        return it->second;
    };
    return ObstructionCatalog{get("pi4_obstruction"), get("pi5A"),        get("pi5B"),
                              get("convex5_1"),       get("convex5_2"),   get("hconvex6"),
                              get("plane_K4"),        get("crossing_K4"), get("convex_C5"),
                              get("twisted_T5")};
}

namespace {

RotationSystem rs4(std::vector<std::vector<Vertex>> rows) {
    return RotationSystem::from_rows(4, std::move(rows));
}
RotationSystem rs5(std::vector<std::vector<Vertex>> rows) {
    return RotationSystem::from_rows(5, std::move(rows));
}

}  // namespace

// Generated once by bootstrap_catalog (tools/rotsys bootstrap); the counts
// 3/7/5/2/1 behind this data are re-derived and re-checked by the test suite.
const ObstructionCatalog& ObstructionCatalog::builtin() {
    static const ObstructionCatalog catalog{
        /*pi4_obstruction=*/rs4({{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 3, 2}}),
        /*pi5A=*/rs5({{2, 3, 4, 5}, {1, 3, 4, 5}, {1, 4, 2, 5}, {1, 5, 3, 2}, {1, 4, 2, 3}}),
        /*pi5B=*/rs5({{2, 3, 4, 5}, {1, 3, 5, 4}, {1, 4, 2, 5}, {1, 5, 3, 2}, {1, 2, 4, 3}}),
        /*convex5_1=*/
        rs5({{2, 3, 4, 5}, {1, 3, 4, 5}, {1, 2, 4, 5}, {1, 2, 5, 3}, {1, 2, 4, 3}}),
        /*convex5_2=*/
        rs5({{2, 3, 4, 5}, {1, 3, 5, 4}, {1, 2, 4, 5}, {1, 2, 5, 3}, {1, 4, 2, 3}}),
        /*hconvex6=*/
        RotationSystem::from_rows(6, {{2, 3, 4, 5, 6},
                                      {1, 3, 4, 5, 6},
                                      {1, 2, 6, 4, 5},
                                      {1, 2, 3, 5, 6},
                                      {1, 2, 3, 4, 6},
                                      {1, 2, 4, 5, 3}}),
        /*plane_K4=*/rs4({{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}),
        /*crossing_K4=*/rs4({{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}),
        /*convex_C5=*/
        rs5({{2, 3, 4, 5}, {1, 3, 4, 5}, {1, 2, 4, 5}, {1, 2, 3, 5}, {1, 2, 3, 4}}),
        /*twisted_T5=*/
        rs5({{2, 3, 4, 5}, {1, 3, 4, 5}, {1, 2, 4, 5}, {1, 2, 5, 3}, {1, 2, 4, 3}}),
    };
    return catalog;
}

}  // namespace rotsys

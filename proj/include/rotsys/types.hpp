#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rotsys {

// Vertices are 1-based labels in [1..n].
using Vertex = int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid arguments or violated operation preconditions.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Bad flag combinations or unsupported constraint blocks.
struct EncodingError : Error {
    explicit EncodingError(const std::string& msg) : Error(msg) {}
};

// A convexity-requiring routine detected structure only non-convex inputs can have.
struct NotConvexError : Error {
    explicit NotConvexError(const std::string& msg) : Error(msg) {}
};

// Missing or failing external executables, I/O trouble.
struct ToolError : Error {
    explicit ToolError(const std::string& msg) : Error(msg) {}
};

// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0, v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw ValidationError("edge endpoints must differ");
    }

    bool contains(Vertex x) const { return x == u || x == v; }
    bool adjacent(const Edge& o) const {
        return contains(o.u) || contains(o.v);
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) <=> std::tie(b.u, b.v);
    }
};

// Unordered pair of independent (vertex-disjoint) edges, stored with first < second.
struct EdgePair {
    Edge first, second;

    EdgePair() = default;
    EdgePair(Edge a, Edge b) {
        if (a.adjacent(b)) throw ValidationError("crossing pair must be independent");
        if (b < a) std::swap(a, b);
        first = a;
        second = b;
    }

    friend bool operator==(const EdgePair&, const EdgePair&) = default;
    friend auto operator<=>(const EdgePair& a, const EdgePair& b) {
        return std::tie(a.first, a.second) <=> std::tie(b.first, b.second);
    }
};

// One side of the triangle {a,b,c}: the side from whose interior a,b,c read
// counterclockwise. S_{a,b,c} = S_{b,c,a} = S_{c,a,b}; the other side is S_{a,c,b}.
struct SideRef {
    Vertex a = 0, b = 0, c = 0;

    SideRef() = default;
    SideRef(Vertex x, Vertex y, Vertex z) : a(x), b(y), c(z) {
        if (x == y || y == z || x == z)
            throw ValidationError("side requires three distinct vertices");
    }

    SideRef opposite() const { return SideRef(a, c, b); }

    // Same cyclic class?
    bool same_side(const SideRef& o) const {
        return (a == o.a && b == o.b && c == o.c) ||
               (a == o.b && b == o.c && c == o.a) ||
               (a == o.c && b == o.a && c == o.b);
    }
};

}  // namespace rotsys

#pragma once

#include <vector>

#include "rotsys/types.hpp"

namespace rotsys {

/// A (pre-)rotation system on n >= 3 vertices: one counterclockwise cyclic
/// order of the other n-1 vertices per vertex. Rows are stored rotated so the
/// first entry is the smallest element of the row (row 1 starts with 2, rows
/// v >= 2 start with 1). The type does not guarantee drawability.
class RotationSystem {
  public:
    static RotationSystem from_rows(int n, std::vector<std::vector<Vertex>> rows);

    int n() const { return n_; }
    const std::vector<Vertex>& row(Vertex v) const { return rows_[v - 1]; }
    const std::vector<std::vector<Vertex>>& rows() const { return rows_; }

    // Index of b in row a, in [0, n-2].
    int position(Vertex a, Vertex b) const { return pos_[(a - 1) * (n_ + 1) + b]; }

    // True iff b, c, d appear counterclockwise around a, i.e. the positions
    // i, j, k of b, c, d in row a satisfy i<j<k, k<i<j, or j<k<i.
    bool ccw(Vertex a, Vertex b, Vertex c, Vertex d) const;

    // Flattened row concatenation; the comparison key for canonical forms.
    std::vector<Vertex> flat() const;

    friend bool operator==(const RotationSystem& x, const RotationSystem& y) {
        return x.n_ == y.n_ && x.rows_ == y.rows_;
    }
    friend auto operator<=>(const RotationSystem& x, const RotationSystem& y) {
        if (auto c = x.n_ <=> y.n_; c != 0) return c;
        return x.rows_ <=> y.rows_;
    }

  private:
    RotationSystem(int n, std::vector<std::vector<Vertex>> rows);

    int n_ = 0;
    std::vector<std::vector<Vertex>> rows_;
    std::vector<int> pos_;  // (a-1)*(n+1)+b -> index of b in row a
};

// Rotate a cyclic sequence so its minimum comes first.
std::vector<Vertex> normalize_row(std::vector<Vertex> row);

// Every row reversed, then renormalized. Involution.
RotationSystem reflect(const RotationSystem& rs);

// Vertex v becomes perm[v-1] everywhere; rows reordered and renormalized.
RotationSystem relabel(const RotationSystem& rs, const std::vector<Vertex>& perm);

// Rows restricted to the given vertices, which are relabelled 1..k in
// increasing original order.
RotationSystem induced(const RotationSystem& rs, const std::vector<Vertex>& subset);

}  // namespace rotsys

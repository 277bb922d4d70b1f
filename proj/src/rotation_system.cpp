#include "rotsys/rotation_system.hpp"

#include <algorithm>

namespace rotsys {

std::vector<Vertex> normalize_row(std::vector<Vertex> row) {
    auto it = std::min_element(row.begin(), row.end());
    std::rotate(row.begin(), it, row.end());
    return row;
}

RotationSystem RotationSystem::from_rows(int n, std::vector<std::vector<Vertex>> rows) {
    if (n < 3) throw ValidationError("rotation system needs n >= 3");
    if ((int)rows.size() != n)
        throw ValidationError("expected " + std::to_string(n) + " rows, got " +
                              std::to_string(rows.size()));
    for (Vertex v = 1; v <= n; ++v) {
        auto& row = rows[v - 1];
        if ((int)row.size() != n - 1)
            throw ValidationError("row " + std::to_string(v) + " has wrong length");
        std::vector<char> seen(n + 1, 0);
        for (Vertex x : row) {
            if (x < 1 || x > n || x == v || seen[x])
                throw ValidationError("row " + std::to_string(v) +
                                      " is not a permutation of the other vertices");
            seen[x] = 1;
        }
        row = normalize_row(std::move(row));
    }
    return RotationSystem(n, std::move(rows));
}

RotationSystem::RotationSystem(int n, std::vector<std::vector<Vertex>> rows)
    : n_(n), rows_(std::move(rows)), pos_(n * (n + 1), -1) {
    for (Vertex a = 1; a <= n_; ++a)
        for (int i = 0; i < n_ - 1; ++i) pos_[(a - 1) * (n_ + 1) + rows_[a - 1][i]] = i;
}

bool RotationSystem::ccw(Vertex a, Vertex b, Vertex c, Vertex d) const {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw ValidationError("ccw requires four distinct vertices");
    int i = position(a, b), j = position(a, c), k = position(a, d);
    return (i < j && j < k) || (k < i && i < j) || (j < k && k < i);
}

std::vector<Vertex> RotationSystem::flat() const {
    std::vector<Vertex> out;
    out.reserve(n_ * (n_ - 1));
    for (auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    return out;
}

RotationSystem reflect(const RotationSystem& rs) {
    std::vector<std::vector<Vertex>> rows = rs.rows();
    for (auto& r : rows) std::reverse(r.begin(), r.end());
    return RotationSystem::from_rows(rs.n(), std::move(rows));
}

RotationSystem relabel(const RotationSystem& rs, const std::vector<Vertex>& perm) {
    int n = rs.n();
    if ((int)perm.size() != n) throw ValidationError("relabel: permutation has wrong size");
    std::vector<char> seen(n + 1, 0);
    for (Vertex x : perm) {
        if (x < 1 || x > n || seen[x]) throw ValidationError("relabel: not a bijection on [n]");
        seen[x] = 1;
    }
    std::vector<std::vector<Vertex>> rows(n);
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<Vertex> r;
        r.reserve(n - 1);
        for (Vertex x : rs.row(v)) r.push_back(perm[x - 1]);
        rows[perm[v - 1] - 1] = std::move(r);
    }
    return RotationSystem::from_rows(n, std::move(rows));
}

RotationSystem induced(const RotationSystem& rs, const std::vector<Vertex>& subset) {
    std::vector<Vertex> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if ((int)verts.size() < 3) throw ValidationError("induced subsystem needs >= 3 vertices");
    std::vector<int> local(rs.n() + 1, 0);
    for (int i = 0; i < (int)verts.size(); ++i) {
        if (verts[i] < 1 || verts[i] > rs.n()) throw ValidationError("induced: vertex out of range");
        local[verts[i]] = i + 1;
    }
    std::vector<std::vector<Vertex>> rows(verts.size());
    for (Vertex v : verts) {
        std::vector<Vertex> r;
        r.reserve(verts.size() - 1);
        for (Vertex x : rs.row(v))
            if (local[x]) r.push_back(local[x]);
        rows[local[v] - 1] = std::move(r);
    }
    return RotationSystem::from_rows((int)verts.size(), std::move(rows));
}

}  // namespace rotsys

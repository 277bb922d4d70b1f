#include "rotsys/canonical.hpp"

#include <algorithm>
#include <optional>

namespace rotsys {

RotationSystem canonical_form(const RotationSystem& rs) {
    int n = rs.n();
    std::optional<RotationSystem> best;
    std::vector<Vertex> best_flat;
    std::vector<Vertex> perm(n);
    for (int refl = 0; refl < 2; ++refl) {
        RotationSystem base = refl ? reflect(rs) : rs;
        for (Vertex v1 = 1; v1 <= n; ++v1) {
            const auto& row = base.row(v1);
            for (int s = 0; s < n - 1; ++s) {
                // v1 becomes 1; the rest get labels 2..n along the rotation of
                // v1 starting at row[s], so the new first row is the identity.
                perm[v1 - 1] = 1;
                for (int t = 0; t < n - 1; ++t) perm[row[(s + t) % (n - 1)] - 1] = t + 2;
                RotationSystem cand = relabel(base, perm);
                auto f = cand.flat();
                if (!best || f < best_flat) {
                    best = std::move(cand);
                    best_flat = std::move(f);
                }
            }
        }
    }
    return *best;
}

bool is_canonical(const RotationSystem& rs) { return rs == canonical_form(rs); }

bool contains_subconfiguration(const RotationSystem& rs, const RotationSystem& obs_cf,
                               bool already_canonical) {
    RotationSystem target = already_canonical ? obs_cf : canonical_form(obs_cf);
    int k = target.n();
    if (k > rs.n()) return false;
    if (k == rs.n()) return canonical_form(rs) == target;
    bool found = false;
    for_each_subset(rs.n(), k, [&](const std::vector<Vertex>& subset) {
        if (found) return;
        if (canonical_form(induced(rs, subset)) == target) found = true;
    });
    return found;
}

bool contains_subconfiguration(const RotationSystem& rs, const RotationSystem& obs) {
    return contains_subconfiguration(rs, obs, false);
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<Vertex>&)>& fn) {
    if (k > n || k <= 0) return;
    std::vector<Vertex> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    while (true) {
        fn(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

void for_each_pre_rotation_system(int n, const std::function<void(const RotationSystem&)>& fn) {
    if (n < 3) throw ValidationError("n >= 3 required");
    // Normalized rows of vertex v: the smallest other vertex first, then any
    // permutation of the remaining n-2.
    std::vector<std::vector<std::vector<Vertex>>> row_choices(n);
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<Vertex> others;
        for (Vertex u = 1; u <= n; ++u)
            if (u != v) others.push_back(u);
        std::vector<Vertex> tail(others.begin() + 1, others.end());
        std::sort(tail.begin(), tail.end());
        do {
            std::vector<Vertex> row;
            row.push_back(others[0]);
            row.insert(row.end(), tail.begin(), tail.end());
            row_choices[v - 1].push_back(row);
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    std::vector<size_t> pick(n, 0);
    std::vector<std::vector<Vertex>> rows(n);
    while (true) {
        for (int v = 0; v < n; ++v) rows[v] = row_choices[v][pick[v]];
        fn(RotationSystem::from_rows(n, rows));
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == row_choices[i].size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
}

}  // namespace rotsys

#include "rotsys/hamconvex.hpp"

#include <algorithm>
#include <set>

namespace rotsys {
namespace hamconvex {

namespace {

// Local labels: star becomes n, the others 1..n-1 along the rotation of the
// star, cyclically shifted by `shift`.
struct LocalView {
    RotationSystem local;
    std::vector<Vertex> to_global;  // local -> original, index 0 unused
    std::vector<Vertex> to_local;   // original -> local, index 0 unused
};

LocalView star_view(const RotationSystem& rs, Vertex star, int shift) {
    int n = rs.n();
    if (star < 1 || star > n) throw ValidationError("star vertex out of range");
    const auto& row = rs.row(star);
    std::vector<Vertex> perm(n, 0);  // original -> local
    perm[star - 1] = n;
    for (int t = 0; t < n - 1; ++t) {
        int local_label = (t + shift) % (n - 1) + 1;
        perm[row[t] - 1] = local_label;
    }
    LocalView view{relabel(rs, perm), std::vector<Vertex>(n + 1, 0),
                   std::vector<Vertex>(n + 1, 0)};
    for (Vertex g = 1; g <= n; ++g) {
        view.to_local[g] = perm[g - 1];
        view.to_global[perm[g - 1]] = g;
    }
    return view;
}

int succ_label(int v, int n) { return v % (n - 1) + 1; }

// Witnesses per rotation-consecutive edge {v, succ(v)} in local labels.
std::vector<std::vector<int>> witness_sets(const RotationSystem& local) {
    int n = local.n();
    std::vector<std::vector<int>> w(n);  // indexed by v in 1..n-1
    for (int v = 1; v <= n - 1; ++v) {
        int s = succ_label(v, n);
        Edge e(v, s);
        for (int x = 1; x <= n - 1; ++x) {
            if (x == v || x == s) continue;
            if (edges_cross(local, e, Edge(x, n))) w[v].push_back(x);
        }
    }
    return w;
}

}  // namespace

std::vector<Edge> HamCycleResult::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
        out.emplace_back(sequence[i], sequence[i + 1]);
    if (is_cycle && sequence.size() > 2) out.emplace_back(sequence.back(), sequence.front());
    return out;
}

BadEdgeDecomposition find_bad_edges(const RotationSystem& rs, Vertex star) {
    int n = rs.n();
    LocalView base = star_view(rs, star, 0);
    std::vector<std::vector<int>> wit = witness_sets(base.local);

    std::vector<int> bad;
    for (int v = 1; v <= n - 1; ++v)
        if (!wit[v].empty()) bad.push_back(v);
    int m = (int)bad.size();

    auto finish = [&](int shift) {
        BadEdgeDecomposition dec;
        dec.n = n;
        dec.star = star;
        LocalView view = star_view(rs, star, shift);
        dec.to_global = view.to_global;
        dec.to_local = view.to_local;

        auto shifted = [&](int x) { return (x - 1 + shift) % (n - 1) + 1; };
        std::vector<std::pair<int, std::vector<int>>> edges;  // (v', witnesses')
        for (int v : bad) {
            std::vector<int> ws;
            for (int w : wit[v]) ws.push_back(shifted(w));
            std::sort(ws.begin(), ws.end());
            edges.push_back({shifted(v), std::move(ws)});
        }
        std::sort(edges.begin(), edges.end());
        for (auto& [v, ws] : edges) {
            dec.v.push_back(v);
            dec.witness_min.push_back(ws.front());
            dec.witness_max.push_back(ws.back());
        }
        return dec;
    };

    if (m == 0) return finish(0);
    if (m == 1) {
        // Shift the lone bad edge onto {n-1, 1}.
        int v = bad[0];
        int s = succ_label(v, n);
        int shift = (1 - s % (n - 1) + (n - 1)) % (n - 1);
        return finish(shift);
    }

    for (int shift = 0; shift < n - 1; ++shift) {
        auto shifted = [&](int x) { return (x - 1 + shift) % (n - 1) + 1; };
        bool ok = true;
        int vmax = 0;
        std::vector<std::pair<int, std::pair<int, int>>> edges;  // v' -> (wL, wR)
        for (int v : bad) {
            int vs = shifted(v);
            if (vs <= 1 || vs >= n - 1) {  // no wrap-around, 1 < v_1
                ok = false;
                break;
            }
            int lo = n, hi = 0;
            for (int w : wit[v]) {
                int wsft = shifted(w);
                if (wsft >= vs) {  // sidedness
                    ok = false;
                    break;
                }
                lo = std::min(lo, wsft);
                hi = std::max(hi, wsft);
            }
            if (!ok) break;
            vmax = std::max(vmax, vs);
            edges.push_back({vs, {lo, hi}});
        }
        if (!ok || vmax != n - 2) continue;
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0; ok && i + 1 < edges.size(); ++i)
            if (edges[i + 1].second.second >= edges[i].second.first) ok = false;  // nestedness
        if (!ok) continue;

        BadEdgeDecomposition dec = finish(shift);

        // Useful-edge invariant: {w^L, v+1} and {w^R, v} avoid star edges.
        LocalView view = star_view(rs, star, shift);
        for (int i = 0; i < dec.bad_edge_count(); ++i) {
            for (Edge e : {Edge(dec.witness_min[i], dec.v[i] + 1),
                           Edge(dec.witness_max[i], dec.v[i])})
                for (int x = 1; x <= n - 1; ++x)
                    if (!e.contains(x) && edges_cross(view.local, e, Edge(x, n)))
                        throw NotConvexError(
                            "witness edge crosses a star edge; the input is not convex");
        }

        // l-tables per block, by the descending two-pointer scan.
        dec.l_table.resize(dec.bad_edge_count() - 1);
        for (int i = 0; i + 1 < dec.bad_edge_count(); ++i) {
            int l_min = dec.witness_max[i + 1] + 1;
            int l_max = dec.witness_min[i] - 1;  // L_i = [l_min, l_max], may be empty
            int r_lo = dec.v[i] + 1, r_hi = dec.v[i + 1];
            auto& table = dec.l_table[i];
            table.assign(r_hi - r_lo + 1, BadEdgeDecomposition::kNoLeft);
            int cand = l_max;
            for (int r = r_lo; r <= r_hi; ++r) {
                auto crosses_left = [&](int l) {
                    for (int lp = l_min; lp < l; ++lp)
                        if (edges_cross(view.local, Edge(l, n), Edge(lp, r))) return true;
                    return false;
                };
                while (cand >= l_min && !crosses_left(cand)) --cand;
                if (cand < l_min) break;  // -infinity from here on
                table[r - r_lo] = cand;
            }
            for (std::size_t k = 0; k + 1 < table.size(); ++k)
                if (table[k + 1] != BadEdgeDecomposition::kNoLeft && table[k + 1] > table[k])
                    throw NotConvexError("left-anchor table is not monotone");
        }
        return dec;
    }
    throw NotConvexError("no cyclic shift separates witnesses from bad edges");
}

HamCycleResult plane_hc_convex(const RotationSystem& rs, Vertex star) {
    int n = rs.n();
    if (n < 3) throw ValidationError("n >= 3 required");
    BadEdgeDecomposition dec = find_bad_edges(rs, star);
    int m = dec.bad_edge_count();

    std::vector<int> local_path;  // local labels
    if (m <= 1) {
        local_path.push_back(n);
        for (int v = 1; v <= n - 1; ++v) local_path.push_back(v);
    } else {
        constexpr int kNoLeft = BadEdgeDecomposition::kNoLeft;
        local_path = {n, dec.v[0]};
        int anchor = dec.v[0] - 1;  // u_i: next vertex after each bad-edge vertex
        auto descend = [&](int from, int to) {
            for (int x = from; x >= to; --x) local_path.push_back(x);
        };
        auto ascend = [&](int from, int to) {
            for (int x = from; x <= to; ++x) local_path.push_back(x);
        };
        for (int i = 0; i + 1 < m; ++i) {
            int r_lo = dec.v[i] + 1, r_hi = dec.v[i + 1];
            const auto& table = dec.l_table[i];
            auto l_of = [&](int r) { return table[r - r_lo]; };
            local_path.push_back(anchor);
            int current = anchor;  // end of the path inside the left block
            int r = r_lo;
            while (r <= r_hi) {
                if (l_of(r) == kNoLeft) {
                    descend(current - 1, dec.witness_max[i + 1] + 1);
                    ascend(r, r_hi);
                    anchor = dec.witness_max[i + 1];
                    break;
                }
                int l = l_of(r);
                descend(current - 1, l + 1);
                // Jump {l+1, r}, then collect the run of equal anchors.
                int rp = r;
                while (rp + 1 <= r_hi && l_of(rp + 1) == l) ++rp;
                ascend(r, rp);
                if (rp < r_hi) {
                    local_path.push_back(l);
                    current = l;
                } else {
                    anchor = l;
                }
                r = rp + 1;
            }
        }
        local_path.push_back(anchor);
        for (int x = anchor - 1; x >= 1; --x) local_path.push_back(x);
        local_path.push_back(dec.v[m - 1] + 1);  // {1, v_m + 1}, then close at the star
    }

    HamCycleResult result;
    result.is_cycle = true;
    for (int x : local_path) result.sequence.push_back(dec.to_global[x]);

    VerifyReport rep = verify_hc(rs, star, result);
    if (!rep.pass())
        throw NotConvexError("constructed cycle failed verification; input is not convex "
                             "or the decomposition is inconsistent");
    return result;
}

VerifyReport verify_hc(const RotationSystem& rs, Vertex star, const HamCycleResult& result) {
    VerifyReport rep;
    int n = rs.n();
    const auto& seq = result.sequence;

    std::set<Vertex> seen(seq.begin(), seq.end());
    rep.hamiltonian = (int)seq.size() == n && (int)seen.size() == n && *seen.begin() == 1 &&
                      *seen.rbegin() == n && result.is_cycle;
    if (!rep.hamiltonian) return rep;

    std::vector<Edge> cyc = result.edges();
    rep.cycle_plane = true;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        for (std::size_t j = i + 1; j < cyc.size(); ++j)
            if (!cyc[i].adjacent(cyc[j]) && edges_cross(rs, cyc[i], cyc[j]))
                rep.cycle_plane = false;

    rep.star_avoiding = true;
    for (const Edge& e : cyc)
        for (Vertex x = 1; x <= n; ++x) {
            if (x == star || e.contains(x) || e.contains(star)) continue;
            if (edges_cross(rs, e, Edge(star, x))) rep.star_avoiding = false;
        }

    std::set<Edge> union_edges(cyc.begin(), cyc.end());
    for (Vertex x = 1; x <= n; ++x)
        if (x != star) union_edges.insert(Edge(star, x));
    rep.union_plane_2n3 = (int)union_edges.size() == 2 * n - 3 &&
                          is_plane_subset(rs, {union_edges.begin(), union_edges.end()});

    // Cyclic traversal order of the non-star vertices vs. the star's rotation.
    std::vector<Vertex> order;
    for (Vertex x : seq)
        if (x != star) order.push_back(x);
    const auto& row = rs.row(star);
    rep.rotation_order = false;
    for (int dir = 0; dir < 2 && !rep.rotation_order; ++dir) {
        for (int off = 0; off < n - 1 && !rep.rotation_order; ++off) {
            bool match = true;
            for (int i = 0; i < n - 1 && match; ++i) {
                int idx = dir == 0 ? (off + i) % (n - 1) : (off - i + 2 * (n - 1)) % (n - 1);
                if (row[idx] != order[i]) match = false;
            }
            rep.rotation_order = match;
        }
    }
    return rep;
}

bool verify_plane_path(const RotationSystem& rs, const HamCycleResult& result,
                       std::optional<Edge> required_edge) {
    int n = rs.n();
    const auto& seq = result.sequence;
    if (result.is_cycle || (int)seq.size() != n) return false;
    if (std::set<Vertex>(seq.begin(), seq.end()).size() != (std::size_t)n) return false;
    std::vector<Edge> edges = result.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].adjacent(edges[j]) && edges_cross(rs, edges[i], edges[j])) return false;
    if (required_edge &&
        std::find(edges.begin(), edges.end(), *required_edge) == edges.end())
        return false;
    return true;
}

HamCycleResult plane_hp_with_edge(const RotationSystem& rs, Edge e) {
    int n = rs.n();
    HamCycleResult cycle = plane_hc_convex(rs, e.u);

    // Rotate so the star endpoint comes first.
    std::vector<Vertex> seq = cycle.sequence;
    auto it = std::find(seq.begin(), seq.end(), e.u);
    std::rotate(seq.begin(), it, seq.end());

    HamCycleResult path;
    path.is_cycle = false;
    int i = (int)(std::find(seq.begin(), seq.end(), e.v) - seq.begin());  // in 1..n-1
    if (i == 1) {
        path.sequence = seq;
    } else if (i == n - 1) {
        path.sequence.assign(seq.begin() + 1, seq.end());
        path.sequence.push_back(e.u);
    } else {
        // Walk the cycle prefix backwards to its start, cross the star, take
        // e, then finish along the cycle.
        for (int k = i - 1; k >= 1; --k) path.sequence.push_back(seq[k]);
        path.sequence.push_back(e.u);
        for (int k = i; k <= n - 1; ++k) path.sequence.push_back(seq[k]);
    }
    if (!verify_plane_path(rs, path, e))
        throw Error("rerouted Hamiltonian path failed verification");
    return path;
}

namespace {

// The tuple appears in this cyclic order around the star (labels are circle
// positions); equal values may share a position only when listed adjacently.
bool cyclic_weak_order(const std::vector<int>& tuple, int n, bool reversed) {
    int base = tuple[0];
    auto offset = [&](int x) {
        int d = reversed ? base - x : x - base;
        return ((d % (n - 1)) + (n - 1)) % (n - 1);
    };
    int prev = 0;
    for (std::size_t k = 1; k < tuple.size(); ++k) {
        int o = offset(tuple[k]);
        if (tuple[k] == tuple[k - 1]) {
            if (o != prev) return false;
            continue;
        }
        if (o <= prev) return false;
        prev = o;
    }
    return true;
}

bool all_distinct_except(const std::vector<int>& tuple, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            if (i == a && j == b) continue;
            if (tuple[i] == tuple[j]) return false;
        }
    return true;
}

}  // namespace

int star_bad_edge_count(const RotationSystem& rs, Vertex star) {
    int n = rs.n();
    const auto& row = rs.row(star);
    int bad = 0;
    for (int i = 0; i < n - 1; ++i) {
        Edge e(row[i], row[(i + 1) % (n - 1)]);
        for (Vertex w = 1; w <= n; ++w) {
            if (w == star || e.contains(w)) continue;
            if (edges_cross(rs, e, Edge(star, w))) {
                ++bad;
                break;
            }
        }
    }
    return bad;
}

bool check_nested_lemma(const RotationSystem& rs, NestedLemmaCheck check) {
    int n = rs.n();
    for (Vertex star = 1; star <= n; ++star) {
        LocalView view = star_view(rs, star, 0);
        std::vector<std::vector<int>> wit = witness_sets(view.local);
        std::vector<int> bad;
        for (int v = 1; v <= n - 1; ++v)
            if (!wit[v].empty()) bad.push_back(v);

        for (int v : bad)
            for (int vp : bad) {
                if (v == vp) continue;
                int v1 = succ_label(v, n), vp1 = succ_label(vp, n);
                for (int w : wit[v])
                    for (int wp : wit[vp]) {
                        if (check == NestedLemmaCheck::Part1) {
                            if (w == wp) return false;
                            if (!cyclic_weak_order({wp, w, v, vp}, n, false) &&
                                !cyclic_weak_order({wp, w, v, vp}, n, true))
                                return false;
                            continue;
                        }
                        // Part 2: only configurations in the canonical cyclic
                        // order with at most the v+1 = v' coincidence.
                        std::vector<int> tuple{wp, w, v, v1, vp, vp1};
                        if (!all_distinct_except(tuple, 3, 4)) continue;
                        if (!cyclic_weak_order(tuple, n, false) &&
                            !cyclic_weak_order(tuple, n, true))
                            continue;
                        bool meeting = v1 == vp;
                        Vertex target = 0;
                        switch (check) {
                            case NestedLemmaCheck::Part2Case1:
                                if (meeting) continue;
                                target = vp;
                                break;
                            case NestedLemmaCheck::Part2Case2:
                                if (meeting) continue;
                                target = vp1;
                                break;
                            default:
                                if (!meeting) continue;
                                target = vp1;
                                break;
                        }
                        if (target == v || target == v1) continue;
                        SideRef side(v, v1, n);
                        if (!side_contains_vertex(view.local, side, w)) side = side.opposite();
                        if (side_contains_vertex(view.local, side, target)) return false;
                    }
            }
    }
    return true;
}

}  // namespace hamconvex
}  // namespace rotsys

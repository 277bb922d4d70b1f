#include "rotsys/draw.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <json.hpp>

#include "rotsys/solve.hpp"

namespace rotsys {
namespace draw {

namespace {

constexpr char kFamOrder = 'L';    // (i, p, q) p<q: p comes before q in order i
constexpr char kFamSeq = 'O';      // (edge_id, x, y) x<y: crossing x precedes y along the edge
constexpr char kFamBetween = 'B';  // (edge_id, x, y, z): x < z < y along the edge
constexpr char kFamAdj = 'a';      // (edge_id, p, q): p immediately precedes q
constexpr char kFamWit = 'W';      // (i, p, q, w): p and q both precede w in order i

int ord_lit(const CnfInstance& inst, int i, int p, int q) {
    if (p < q) return inst.var(key(kFamOrder, {i, p, q}));
    return -inst.var(key(kFamOrder, {i, q, p}));
}

int seq_lit(const CnfInstance& inst, int edge_id, int x, int y) {
    if (x < y) return inst.var(key(kFamSeq, {edge_id, x, y}));
    return -inst.var(key(kFamSeq, {edge_id, y, x}));
}

void add_total_orders(CnfInstance& inst, int m) {
    for (int i = 1; i <= 3; ++i)
        for (int p = 1; p <= m; ++p)
            for (int q = p + 1; q <= m; ++q) inst.new_var(key(kFamOrder, {i, p, q}));
    for (int i = 1; i <= 3; ++i)
        for (int p = 1; p <= m; ++p)
            for (int q = 1; q <= m; ++q) {
                if (q == p) continue;
                for (int r = 1; r <= m; ++r) {
                    if (r == p || r == q) continue;
                    inst.add_clause({-ord_lit(inst, i, p, q), -ord_lit(inst, i, q, r),
                                     ord_lit(inst, i, p, r)});
                }
            }
}

int witness_var(CnfInstance& inst, int i, int p, int q, int w) {
    if (p > q) std::swap(p, q);
    VarKey k = key(kFamWit, {i, p, q, w});
    if (inst.has_var(k)) return inst.var(k);
    int v = inst.new_var(k);
    inst.add_clause({-v, ord_lit(inst, i, p, w)});
    inst.add_clause({-v, ord_lit(inst, i, q, w)});
    return v;
}

// For every other vertex w, some order puts both endpoints below w.
void add_incidence_condition(CnfInstance& inst, int m, int p, int q, int guard_lit) {
    for (int w = 1; w <= m; ++w) {
        if (w == p || w == q) continue;
        std::vector<int> clause;
        if (guard_lit) clause.push_back(-guard_lit);
        for (int i = 1; i <= 3; ++i) clause.push_back(witness_var(inst, i, p, q, w));
        inst.add_clause(clause);
    }
}

}  // namespace

std::map<Edge, std::vector<int>> crossing_segments(const RotationSystem& rs) {
    CrossingRelation rel = crossing_relation(rs);
    std::map<Edge, std::vector<int>> segs;
    for (Vertex u = 1; u <= rs.n(); ++u)
        for (Vertex v = u + 1; v <= rs.n(); ++v) segs[Edge(u, v)] = {};
    for (int i = 0; i < (int)rel.pairs.size(); ++i) {
        segs[rel.pairs[i].first].push_back(i);
        segs[rel.pairs[i].second].push_back(i);
    }
    return segs;
}

CnfInstance encode_drawability(const RotationSystem& rs) {
    int n = rs.n();
    CrossingRelation rel = crossing_relation(rs);
    auto segs = crossing_segments(rs);
    int m = n + (int)rel.pairs.size();  // planarization vertex count

    CnfInstance inst(n);
    inst.set_meta("n", std::to_string(n));
    inst.set_meta("kind", "drawability");
    inst.set_meta("crossings", std::to_string(rel.pairs.size()));

    // Orders of the crossings along each edge.
    int edge_id = 0;
    std::map<Edge, int> edge_ids;
    for (const auto& [e, xs] : segs) {
        edge_ids[e] = ++edge_id;
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b) {
                int x = std::min(xs[a], xs[b]), y = std::max(xs[a], xs[b]);
                inst.new_var(key(kFamSeq, {edge_ids[e], x, y}));
            }
        if (xs.size() >= 3)
            for (int x : xs)
                for (int y : xs) {
                    if (x == y) continue;
                    for (int z : xs) {
                        if (z == x || z == y) continue;
                        inst.add_clause({-seq_lit(inst, edge_ids[e], x, y),
                                         -seq_lit(inst, edge_ids[e], y, z),
                                         seq_lit(inst, edge_ids[e], x, z)});
                    }
                }
    }

    add_total_orders(inst, m);

    // Candidate adjacencies of the planarization, with presence conditions.
    for (const auto& [e, xs] : segs) {
        int eid = edge_ids[e];
        int u = e.u, v = e.v;
        auto cross_vertex = [&](int x) { return n + 1 + x; };
        if (xs.empty()) {
            add_incidence_condition(inst, m, u, v, 0);
            continue;
        }
        if (xs.size() == 1) {
            add_incidence_condition(inst, m, u, cross_vertex(xs[0]), 0);
            add_incidence_condition(inst, m, cross_vertex(xs[0]), v, 0);
            continue;
        }
        for (int x : xs) {
            // x first along e: adjacent to u.
            int first = inst.new_var(key(kFamAdj, {eid, 0, x}));
            std::vector<int> some_before{first};
            for (int y : xs) {
                if (y == x) continue;
                inst.add_clause({-first, seq_lit(inst, eid, x, y)});
                some_before.push_back(seq_lit(inst, eid, y, x));
            }
            inst.add_clause(some_before);
            add_incidence_condition(inst, m, u, cross_vertex(x), first);
            // x last along e: adjacent to v.
            int last = inst.new_var(key(kFamAdj, {eid, x, m + 1}));
            std::vector<int> some_after{last};
            for (int y : xs) {
                if (y == x) continue;
                inst.add_clause({-last, seq_lit(inst, eid, y, x)});
                some_after.push_back(seq_lit(inst, eid, x, y));
            }
            inst.add_clause(some_after);
            add_incidence_condition(inst, m, cross_vertex(x), v, last);
        }
        for (int x : xs)
            for (int y : xs) {
                if (x == y) continue;
                // x immediately before y.
                int adj = inst.new_var(key(kFamAdj, {eid, x + 1, y + 1}));
                inst.add_clause({-adj, seq_lit(inst, eid, x, y)});
                std::vector<int> converse{adj, -seq_lit(inst, eid, x, y)};
                for (int z : xs) {
                    if (z == x || z == y) continue;
                    int b = inst.new_var(key(kFamBetween, {eid, x, y, z}));
                    inst.add_clause({-b, seq_lit(inst, eid, x, z)});
                    inst.add_clause({-b, seq_lit(inst, eid, z, y)});
                    inst.add_clause({b, -seq_lit(inst, eid, x, z), -seq_lit(inst, eid, z, y)});
                    inst.add_clause({-adj, -b});
                    converse.push_back(b);
                }
                inst.add_clause(converse);
                add_incidence_condition(inst, m, cross_vertex(x), cross_vertex(y), adj);
            }
    }
    return inst;
}

Planarization extract_planarization(const RotationSystem& rs, const CnfInstance& inst,
                                    const std::vector<bool>& model) {
    Planarization pl;
    pl.n = rs.n();
    CrossingRelation rel = crossing_relation(rs);
    pl.crossings = rel.pairs;
    auto segs = crossing_segments(rs);

    int edge_id = 0;
    std::set<std::pair<int, int>> adj;
    auto add_adj = [&](int p, int q) {
        if (p > q) std::swap(p, q);
        if (!adj.insert({p, q}).second)
            throw ValidationError("planarization has a multi-edge");
    };
    for (const auto& [e, xs_const] : segs) {
        ++edge_id;
        std::vector<int> xs = xs_const;
        std::sort(xs.begin(), xs.end(), [&](int x, int y) {
            return model[std::abs(seq_lit(inst, edge_id, x, y))] ==
                   (seq_lit(inst, edge_id, x, y) > 0);
        });
        std::vector<int> sigma{e.u};
        for (int x : xs) sigma.push_back(pl.n + 1 + x);
        sigma.push_back(e.v);
        for (std::size_t i = 0; i + 1 < sigma.size(); ++i) add_adj(sigma[i], sigma[i + 1]);
        pl.sigma[e] = std::move(sigma);
    }
    pl.adjacency.assign(adj.begin(), adj.end());

    std::size_t expected = (std::size_t)rs.n() * (rs.n() - 1) / 2 + 2 * rel.pairs.size();
    if (pl.adjacency.size() != expected)
        throw ValidationError("planarization edge count mismatch");
    std::vector<int> uses(pl.crossings.size(), 0);
    for (const auto& [e, sig] : pl.sigma)
        for (int x : sig)
            if (x > pl.n) ++uses[x - pl.n - 1];
    for (int u : uses)
        if (u != 2) throw ValidationError("crossing vertex not on exactly two edges");
    return pl;
}

std::optional<Planarization> find_planarization(const RotationSystem& rs) {
    CnfInstance inst = encode_drawability(rs);
    solve::SolveResult res = solve::solve_instance(inst);
    if (res.status == solve::Status::Unsat) return std::nullopt;
    if (res.status != solve::Status::Sat) throw ToolError("drawability solve hit a budget");
    return extract_planarization(rs, inst, res.model);
}

bool is_drawable_sat(const RotationSystem& rs) { return find_planarization(rs).has_value(); }

bool planarity_fixed_graph(const SimpleGraph& g) {
    CnfInstance inst(std::max(g.vertex_count, 3));
    inst.set_meta("kind", "planarity");
    add_total_orders(inst, g.vertex_count);
    for (auto [p, q] : g.edges) {
        if (p == q || p < 1 || q < 1 || p > g.vertex_count || q > g.vertex_count)
            throw ValidationError("bad edge in graph");
        add_incidence_condition(inst, g.vertex_count, p, q, 0);
    }
    solve::SolveResult res = solve::solve_instance(inst);
    if (res.status == solve::Status::Limit) throw ToolError("planarity solve hit a budget");
    return res.status == solve::Status::Sat;
}

void Planarization::write_json(std::ostream& out) const {
    nlohmann::json j;
    j["n"] = n;
    j["crossings"] = nlohmann::json::array();
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        j["crossings"].push_back({{"vertex", n + 1 + (int)i},
                                  {"edges",
                                   {{crossings[i].first.u, crossings[i].first.v},
                                    {crossings[i].second.u, crossings[i].second.v}}}});
    }
    j["sigma"] = nlohmann::json::array();
    for (const auto& [e, sig] : sigma)
        j["sigma"].push_back({{"edge", {e.u, e.v}}, {"traversal", sig}});
    j["adjacency"] = adjacency;
    out << j.dump(2) << "\n";
}

}  // namespace draw
}  // namespace rotsys

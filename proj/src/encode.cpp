#include "rotsys/encode.hpp"

#include <algorithm>
#include <set>

#include "rotsys/canonical.hpp"
#include "rotsys/quad_tables.hpp"

namespace rotsys {
namespace encode {

namespace {

constexpr char kFamX = 'X';
constexpr char kFamY = 'Y';
constexpr char kFamD = 'D';
constexpr char kFamC = 'C';
constexpr char kFamSideEmpty = 'e';  // E^d: (triple, orientation, d)
constexpr char kFamEmpty = 'E';      // E:   (triple, orientation)
constexpr char kFamTriple = 'T';     // per 3-set empty indicator
constexpr char kFamAux = 'A';

// Literals of the four row bits identifying one labeled 4-system, positive
// when the bit is set in sig.
std::array<int, 4> sig_literals(const CnfInstance& inst, const std::array<Vertex, 4>& q,
                                int sig) {
    std::array<int, 4> lits{};
    for (int i = 0; i < 4; ++i) {
        int t[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) t[k++] = q[j];
        int v = inst.var(key(kFamY, {q[i], t[0], t[1], t[2]}));
        lits[i] = (sig >> i & 1) ? v : -v;
    }
    return lits;
}

}  // namespace

void EncodeOptions::validate() const {
    if (hconvex && !convex) throw EncodingError("h-convex block requires the convex block");
    if ((convex || hconvex) && !(forbid_pi4 && forbid_pi5))
        throw EncodingError("convexity blocks require the drawability block");
    if (crossing_vars && !forbid_pi4)
        throw EncodingError("crossing variables require the 4-element obstruction block");
}

int x_lit(const CnfInstance& inst, Vertex a, int i, Vertex b) {
    return inst.var(key(kFamX, {a, i, b}));
}

int y_lit(const CnfInstance& inst, Vertex a, Vertex b, Vertex c, Vertex d) {
    // One variable per (a, sorted triple); odd permutations of the triple
    // flip the orientation.
    std::array<Vertex, 3> t{b, c, d};
    int swaps = 0;
    if (t[0] > t[1]) { std::swap(t[0], t[1]); ++swaps; }
    if (t[1] > t[2]) { std::swap(t[1], t[2]); ++swaps; }
    if (t[0] > t[1]) { std::swap(t[0], t[1]); ++swaps; }
    int v = inst.var(key(kFamY, {a, t[0], t[1], t[2]}));
    return (swaps % 2 == 0) ? v : -v;
}

CnfInstance new_instance(int n, const EncodeOptions& opts, const ObstructionCatalog* cat) {
    if (n < 3) throw EncodingError("n >= 3 required");
    opts.validate();
    if ((opts.forbid_pi5 || opts.convex) && cat == nullptr)
        throw EncodingError("obstruction blocks need a catalog");

    CnfInstance inst(n);
    inst.set_meta("n", std::to_string(n));
    inst.set_meta("pi4", opts.forbid_pi4 ? "1" : "0");
    inst.set_meta("pi5", opts.forbid_pi5 ? "1" : "0");
    inst.set_meta("convex", opts.convex ? "1" : "0");
    inst.set_meta("hconvex", opts.hconvex ? "1" : "0");
    inst.set_meta("natural", opts.natural ? "1" : "0");

    // X block.
    for (Vertex a = 1; a <= n; ++a)
        for (int i = 1; i <= n - 1; ++i)
            for (Vertex b = 1; b <= n; ++b)
                if (b != a) inst.new_var(key(kFamX, {a, i, b}));

    // Y block: one orientation bit per vertex and ascending triple.
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = 1; b <= n; ++b)
            for (Vertex c = b + 1; c <= n; ++c)
                for (Vertex d = c + 1; d <= n; ++d)
                    if (b != a && c != a && d != a) inst.new_var(key(kFamY, {a, b, c, d}));

    // Each row position holds exactly one vertex, each vertex one position.
    for (Vertex a = 1; a <= n; ++a) {
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> alo;
            for (Vertex b = 1; b <= n; ++b)
                if (b != a) alo.push_back(x_lit(inst, a, i, b));
            inst.add_clause(alo);
            for (Vertex b1 = 1; b1 <= n; ++b1)
                for (Vertex b2 = b1 + 1; b2 <= n; ++b2)
                    if (b1 != a && b2 != a)
                        inst.add_clause({-x_lit(inst, a, i, b1), -x_lit(inst, a, i, b2)});
        }
        for (Vertex b = 1; b <= n; ++b)
            if (b != a)
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = i + 1; j <= n - 1; ++j)
                        inst.add_clause({-x_lit(inst, a, i, b), -x_lit(inst, a, j, b)});
    }

    // Row normalization: every row starts with its smallest element.
    inst.add_clause({x_lit(inst, 1, 1, 2)});
    for (Vertex a = 2; a <= n; ++a) inst.add_clause({x_lit(inst, a, 1, 1)});
    if (opts.natural)
        for (int i = 1; i <= n - 1; ++i) inst.add_clause({x_lit(inst, 1, i, i + 1)});

    // X-Y synchronization: ascending positions put the values counterclockwise.
    for (Vertex a = 1; a <= n; ++a) {
        std::vector<Vertex> others;
        for (Vertex b = 1; b <= n; ++b)
            if (b != a) others.push_back(b);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                for (int k = j + 1; k <= n - 1; ++k)
                    for (Vertex b : others)
                        for (Vertex c : others)
                            for (Vertex d : others) {
                                if (b == c || b == d || c == d) continue;
                                inst.add_clause({-x_lit(inst, a, i, b), -x_lit(inst, a, j, c),
                                                 -x_lit(inst, a, k, d),
                                                 y_lit(inst, a, b, c, d)});
                            }
    }

    if (opts.forbid_pi4) {
        for (Vertex a = 1; a <= n; ++a)
            for (Vertex b = a + 1; b <= n; ++b)
                for (Vertex c = b + 1; c <= n; ++c)
                    for (Vertex d = c + 1; d <= n; ++d) {
                        std::array<Vertex, 4> q{a, b, c, d};
                        for (int sig : obstruction_signatures()) {
                            auto lits = sig_literals(inst, q, sig);
                            inst.add_clause({-lits[0], -lits[1], -lits[2], -lits[3]});
                        }
                    }
    }
    if (opts.forbid_pi5) {
        add_forbidden_subconfiguration(inst, cat->pi5A);
        add_forbidden_subconfiguration(inst, cat->pi5B);
    }
    if (opts.convex) {
        add_forbidden_subconfiguration(inst, cat->convex5_1);
        add_forbidden_subconfiguration(inst, cat->convex5_2);
    }
    if (opts.hconvex) add_forbidden_subconfiguration(inst, cat->hconvex6);

    if (opts.crossing_vars) add_crossing_vars(inst);
    return inst;
}

void add_forbidden_subconfiguration(CnfInstance& inst, const RotationSystem& obs) {
    int k = obs.n();
    int n = inst.n();
    if (k > n) return;

    // All labeled variants of the obstruction class.
    std::set<RotationSystem> variants;
    std::vector<Vertex> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    do {
        variants.insert(relabel(obs, perm));
        variants.insert(relabel(reflect(obs), perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
        for (const RotationSystem& v : variants) {
            std::vector<int> clause;
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b)
                    for (int c = b + 1; c <= k; ++c)
                        for (int d = c + 1; d <= k; ++d) {
                            if (b == a || c == a || d == a) continue;
                            int lit = y_lit(inst, s[a - 1], s[b - 1], s[c - 1], s[d - 1]);
                            clause.push_back(v.ccw(a, b, c, d) ? -lit : lit);
                        }
            inst.add_clause(clause);
        }
    });
}

void add_crossing_vars(CnfInstance& inst) {
    int n = inst.n();
    if (inst.meta_value("pi4") != "1")
        throw EncodingError("crossing variables require the 4-element obstruction block");
    if (n < 4) {
        inst.set_meta("crossing_vars", "1");
        return;
    }
    // Signature of each crossing case, indexed by [pairing][left_to_right].
    int cross_sig[3][2];
    for (int p = 0; p < 3; ++p) cross_sig[p][0] = cross_sig[p][1] = -1;
    for (int sig = 0; sig < 16; ++sig) {
        const QuadInfo& info = quad_table()[sig];
        if (info.kind == QuadKind::Crossing)
            cross_sig[info.pair_index][info.left_to_right ? 1 : 0] = sig;
    }

    for_each_subset(n, 4, [&](const std::vector<Vertex>& s) {
        std::array<Vertex, 4> q{s[0], s[1], s[2], s[3]};
        for (int p = 0; p < 3; ++p) {
            int dvar[2];
            for (int dir = 0; dir < 2; ++dir) {
                int v = inst.new_var(key(kFamD, {q[0], q[1], q[2], q[3], p * 2 + dir}));
                dvar[dir] = v;
                auto lits = sig_literals(inst, q, cross_sig[p][dir]);
                std::vector<int> rev{v};
                for (int l : lits) {
                    inst.add_clause({-v, l});
                    rev.push_back(-l);
                }
                inst.add_clause(rev);
            }
            int c = inst.new_var(key(kFamC, {q[0], q[1], q[2], q[3], p}));
            inst.add_clause({-dvar[0], c});
            inst.add_clause({-dvar[1], c});
            inst.add_clause({-c, dvar[0], dvar[1]});
        }
    });
    inst.set_meta("crossing_vars", "1");
}

int crossing_lit(const CnfInstance& inst, Edge e, Edge f) {
    if (e.adjacent(f)) throw EncodingError("crossing literal needs independent edges");
    std::array<Vertex, 4> q{e.u, e.v, f.u, f.v};
    std::sort(q.begin(), q.end());
    Edge first = e.contains(q[0]) ? e : f;
    int p = first.v == q[1] ? 0 : first.v == q[2] ? 1 : 2;
    return inst.var(key(kFamC, {q[0], q[1], q[2], q[3], p}));
}

namespace {

void require_crossing_vars(const CnfInstance& inst) {
    if (inst.meta_value("crossing_vars") != "1")
        throw EncodingError("this block requires crossing variables");
}

std::vector<Edge> all_edges(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return edges;
}

std::vector<Edge> cycle_edges(const std::vector<Vertex>& cyc) {
    std::vector<Edge> edges;
    int n = (int)cyc.size();
    for (int i = 0; i < n; ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % n]);
    return edges;
}

// Undirected Hamiltonian cycles as vertex sequences starting at 1,
// one representative per direction.
void for_each_ham_cycle(int n, const std::function<void(const std::vector<Vertex>&)>& fn) {
    std::vector<Vertex> rest;
    for (Vertex v = 2; v <= n; ++v) rest.push_back(v);
    do {
        if (rest.front() > rest.back()) continue;
        std::vector<Vertex> cyc{1};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        fn(cyc);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<int> crossing_disjunction(const CnfInstance& inst, const std::vector<Edge>& edges) {
    std::vector<int> clause;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].adjacent(edges[j]))
                clause.push_back(crossing_lit(inst, edges[i], edges[j]));
    return clause;
}

void add_clause_or_falsum(CnfInstance& inst, std::vector<int> clause) {
    if (clause.empty())
        inst.add_falsum();
    else
        inst.add_clause(std::move(clause));
}

}  // namespace

void forbid_plane_hamiltonian_cycle(CnfInstance& inst, int enumeration_bound) {
    require_crossing_vars(inst);
    int n = inst.n();
    if (n > enumeration_bound)
        throw EncodingError("explicit cycle enumeration is capped at n = " +
                            std::to_string(enumeration_bound));
    for_each_ham_cycle(n, [&](const std::vector<Vertex>& cyc) {
        add_clause_or_falsum(inst, crossing_disjunction(inst, cycle_edges(cyc)));
    });
    inst.set_meta("forbid_hc", "1");
}

void forbid_plane_hamiltonian_2n3(CnfInstance& inst, int enumeration_bound) {
    require_crossing_vars(inst);
    int n = inst.n();
    if (n > enumeration_bound)
        throw EncodingError("explicit cycle enumeration is capped at n = " +
                            std::to_string(enumeration_bound));
    const std::vector<Edge> edges = all_edges(n);
    for_each_ham_cycle(n, [&](const std::vector<Vertex>& cyc) {
        std::vector<Edge> base = cycle_edges(cyc);
        std::set<Edge> in_cycle(base.begin(), base.end());
        std::vector<Edge> rest;
        for (const Edge& e : edges)
            if (!in_cycle.count(e)) rest.push_back(e);
        for_each_subset((int)rest.size(), n - 3, [&](const std::vector<Vertex>& pick) {
            std::vector<Edge> all = base;
            for (int idx : pick) all.push_back(rest[idx - 1]);
            add_clause_or_falsum(inst, crossing_disjunction(inst, all));
        });
    });
    inst.set_meta("forbid_hc2n3", "1");
}

void assert_unextendable_fixed_hc(CnfInstance& inst) {
    require_crossing_vars(inst);
    if (inst.meta_value("natural") == "1")
        throw EncodingError("the fixed cycle 1..n consumes the labeling freedom; "
                            "natural labeling must be off");
    int n = inst.n();
    std::vector<Vertex> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    std::vector<Edge> base = cycle_edges(cyc);
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j)
            if (!base[i].adjacent(base[j]))
                inst.add_clause({-crossing_lit(inst, base[i], base[j])});
    std::set<Edge> in_cycle(base.begin(), base.end());
    std::vector<Edge> rest;
    for (const Edge& e : all_edges(n))
        if (!in_cycle.count(e)) rest.push_back(e);
    for_each_subset((int)rest.size(), n - 3, [&](const std::vector<Vertex>& pick) {
        std::vector<Edge> extra;
        for (int idx : pick) extra.push_back(rest[idx - 1]);
        std::vector<int> clause;
        for (const Edge& e : extra) {
            for (const Edge& b : base)
                if (!e.adjacent(b)) clause.push_back(crossing_lit(inst, e, b));
            for (const Edge& f : extra)
                if (f < e && !e.adjacent(f)) clause.push_back(crossing_lit(inst, e, f));
        }
        add_clause_or_falsum(inst, clause);
    });
    inst.set_meta("unextendable_hc", "1");
}

void assert_matching_unavoidable(CnfInstance& inst, int k, int enumeration_bound) {
    require_crossing_vars(inst);
    int n = inst.n();
    if (k < 0 || 2 * k > n) throw EncodingError("matching size out of range");
    if (k == 0) {
        forbid_plane_hamiltonian_cycle(inst, enumeration_bound);
        return;
    }
    if (inst.meta_value("natural") == "1")
        throw EncodingError("the fixed matching consumes the labeling freedom; "
                            "natural labeling must be off");
    if (n > enumeration_bound)
        throw EncodingError("explicit cycle enumeration is capped at n = " +
                            std::to_string(enumeration_bound));

    std::vector<Edge> matching;
    for (int i = 1; i <= k; ++i) matching.emplace_back(2 * i - 1, 2 * i);

    for (size_t i = 0; i < matching.size(); ++i)
        for (size_t j = i + 1; j < matching.size(); ++j)
            inst.add_clause({-crossing_lit(inst, matching[i], matching[j])});

    // Rotation of vertex 1 is pinned where the matching breaks the symmetry.
    for (const Edge& m : matching)
        if (m.u > 2) inst.add_clause({y_lit(inst, 1, 2, m.u, m.v)});
    for (size_t i = 0; i < matching.size(); ++i)
        for (size_t j = i + 1; j < matching.size(); ++j) {
            Vertex u = matching[i].u, vprime = matching[j].v;
            if (u > 2 && vprime > 2 && u != vprime)
                inst.add_clause({y_lit(inst, 1, 2, u, vprime)});
        }
    for (Vertex x = 2 * k + 1; x <= n; ++x)
        for (Vertex y = x + 1; y <= n; ++y) inst.add_clause({y_lit(inst, 1, 2, x, y)});

    std::set<Edge> in_matching(matching.begin(), matching.end());
    for_each_ham_cycle(n, [&](const std::vector<Vertex>& cyc) {
        std::vector<Edge> base = cycle_edges(cyc);
        std::vector<int> clause = crossing_disjunction(inst, base);
        for (const Edge& e : base)
            for (const Edge& m : matching)
                if (!in_matching.count(e) && !e.adjacent(m))
                    clause.push_back(crossing_lit(inst, e, m));
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        add_clause_or_falsum(inst, clause);
    });
    inst.set_meta("matching_k", std::to_string(k));
}

void assert_all_edges_crossed(CnfInstance& inst) {
    require_crossing_vars(inst);
    int n = inst.n();
    for (const Edge& e : all_edges(n)) {
        std::vector<int> clause;
        for (const Edge& f : all_edges(n))
            if (!e.adjacent(f) && e < f) clause.push_back(crossing_lit(inst, e, f));
        for (const Edge& f : all_edges(n))
            if (!e.adjacent(f) && f < e) clause.push_back(crossing_lit(inst, e, f));
        add_clause_or_falsum(inst, clause);
    }
    inst.set_meta("all_edges_crossed", "1");
}

void assert_empty_triangles_atmost(CnfInstance& inst, int k) {
    require_crossing_vars(inst);
    if (k < 0) throw EncodingError("bound must be nonnegative");
    int n = inst.n();
    std::vector<int> triple_vars;
    for_each_subset(n, 3, [&](const std::vector<Vertex>& t) {
        int evar[2];
        for (int orient = 0; orient < 2; ++orient) {
            std::vector<int> side_vars;
            for (Vertex d = 1; d <= n; ++d) {
                if (d == t[0] || d == t[1] || d == t[2]) continue;
                int ed = inst.new_var(key(kFamSideEmpty, {t[0], t[1], t[2], orient, d}));
                side_vars.push_back(ed);
                std::array<Vertex, 4> q{t[0], t[1], t[2], d};
                std::sort(q.begin(), q.end());
                int excl = (int)(std::find(q.begin(), q.end(), d) - q.begin());
                for (int sig = 0; sig < 16; ++sig) {
                    const QuadInfo& info = quad_table()[sig];
                    if (info.kind == QuadKind::Obstruction) continue;
                    bool contains = (orient == 0) == info.side_plus[excl];
                    auto lits = sig_literals(inst, q, sig);
                    std::vector<int> clause{contains ? -ed : ed};
                    for (int l : lits) clause.push_back(-l);
                    inst.add_clause(clause);
                }
            }
            int e = inst.new_var(key(kFamEmpty, {t[0], t[1], t[2], orient}));
            evar[orient] = e;
            std::vector<int> conj{e};
            for (int ed : side_vars) {
                inst.add_clause({-e, ed});
                conj.push_back(-ed);
            }
            inst.add_clause(conj);
        }
        int tv = inst.new_var(key(kFamTriple, {t[0], t[1], t[2]}));
        triple_vars.push_back(tv);
        inst.add_clause({-evar[0], tv});
        inst.add_clause({-evar[1], tv});
        inst.add_clause({-tv, evar[0], evar[1]});
    });
    cardinality_atmost(inst, triple_vars, k);
    inst.set_meta("empty_triangles_atmost", std::to_string(k));
}

void cardinality_atmost(CnfInstance& inst, const std::vector<int>& lits, int k) {
    if (k < 0) throw EncodingError("bound must be nonnegative");
    int m = (int)lits.size();
    if (k >= m) return;
    if (k == 0) {
        for (int lit : lits) inst.add_clause({-lit});
        return;
    }
    int id = inst.var_count();  // distinct auxiliary names per call
    // s(i,j): at least j of the first i literals are true.
    std::vector<std::vector<int>> s(m, std::vector<int>(k + 1, 0));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j <= k; ++j) s[i][j] = inst.new_var(key(kFamAux, {1, id, i, j}));

    inst.add_clause({-lits[0], s[1][1]});
    for (int j = 2; j <= k; ++j) inst.add_clause({-s[1][j]});
    for (int i = 2; i < m; ++i) {
        inst.add_clause({-lits[i - 1], s[i][1]});
        inst.add_clause({-s[i - 1][1], s[i][1]});
        for (int j = 2; j <= k; ++j) {
            inst.add_clause({-lits[i - 1], -s[i - 1][j - 1], s[i][j]});
            inst.add_clause({-s[i - 1][j], s[i][j]});
        }
        inst.add_clause({-lits[i - 1], -s[i - 1][k]});
    }
    inst.add_clause({-lits[m - 1], -s[m - 1][k]});
}

}  // namespace encode
}  // namespace rotsys

#include "rotsys/drat.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "rotsys/cnf.hpp"
#include "rotsys/types.hpp"

namespace rotsys {
namespace drat {

namespace {

// Unit-propagation engine over an add/delete clause database, with watched
// literals and a resettable assumption trail.
class Propagator {
  public:
    void ensure_var(int v) {
        while ((int)value_.size() < v + 1) {
            value_.push_back(0);
            watches_.emplace_back();
            watches_.emplace_back();
        }
    }

    // Returns the clause id, or -1 if the clause is unit/empty (handled via
    // the root trail).
    long add(const std::vector<int>& lits) {
        for (int l : lits) ensure_var(std::abs(l));
        long id = (long)clauses_.size();
        clauses_.push_back(lits);
        alive_.push_back(true);
        if (lits.size() >= 2) {
            watch(lits[0], id);
            watch(lits[1], id);
        } else if (lits.size() == 1) {
            root_units_.push_back(lits[0]);
        } else {
            has_empty_ = true;
        }
        return id;
    }

    void remove(const std::vector<int>& lits) {
        // Deletion matches on the literal multiset.
        std::vector<int> k = lits;
        std::sort(k.begin(), k.end());
        for (long id = (long)clauses_.size() - 1; id >= 0; --id) {
            if (!alive_[id]) continue;
            std::vector<int> c = clauses_[id];
            std::sort(c.begin(), c.end());
            if (c == k) {
                alive_[id] = false;
                if (clauses_[id].size() == 1) {
                    auto it = std::find(root_units_.begin(), root_units_.end(),
                                        clauses_[id][0]);
                    if (it != root_units_.end()) root_units_.erase(it);
                }
                return;
            }
        }
        // Deleting an absent clause is a no-op in practice; checkers tolerate it.
    }

    bool has_empty() const { return has_empty_; }

    // Propagate from the given assumptions (negations of a candidate clause);
    // true iff a conflict is reached. State is rolled back before returning.
    bool rup(const std::vector<int>& clause) {
        if (has_empty_) return true;
        trail_.clear();
        bool conflict = false;
        for (int u : root_units_)
            if (!assign(u)) conflict = true;
        for (int l : clause) {
            if (conflict) break;
            if (!assign(-l)) conflict = true;
        }
        std::size_t head = 0;
        while (!conflict && head < trail_.size()) {
            int lit = trail_[head++];
            auto& ws = watches_[widx(-lit)];
            std::size_t i = 0, j = 0;
            while (i < ws.size()) {
                long id = ws[i];
                if (!alive_[id]) {
                    ++i;
                    continue;
                }
                auto& c = clauses_[id];
                if (c[0] == -lit) std::swap(c[0], c[1]);
                ++i;
                if (val(c[0]) == 1) {
                    ws[j++] = id;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k)
                    if (val(c[k]) != -1) {
                        std::swap(c[1], c[k]);
                        watch(c[1], id);
                        moved = true;
                        break;
                    }
                if (moved) continue;
                ws[j++] = id;
                if (val(c[0]) == -1) {
                    while (i < ws.size()) ws[j++] = ws[i++];
                    conflict = true;
                    break;
                }
                if (!assign(c[0])) conflict = true;
            }
            ws.resize(j);
        }
        for (int lit : trail_) value_[std::abs(lit)] = 0;
        return conflict;
    }

    // All live clauses containing the literal.
    std::vector<long> clauses_with(int lit) const {
        std::vector<long> out;
        for (long id = 0; id < (long)clauses_.size(); ++id)
            if (alive_[id] &&
                std::find(clauses_[id].begin(), clauses_[id].end(), lit) != clauses_[id].end())
                out.push_back(id);
        return out;
    }

    const std::vector<int>& clause(long id) const { return clauses_[id]; }

  private:
    static std::size_t widx(int lit) {
        return 2 * (std::size_t)std::abs(lit) + (lit < 0 ? 1 : 0);
    }
    void watch(int lit, long id) { watches_[widx(lit)].push_back(id); }
    int val(int lit) const {
        int v = value_[std::abs(lit)];
        return v == 0 ? 0 : (lit > 0 ? v : -v);
    }
    // False on contradiction with the current trail.
    bool assign(int lit) {
        int v = val(lit);
        if (v == 1) return true;
        if (v == -1) return false;
        value_[std::abs(lit)] = lit > 0 ? 1 : -1;
        trail_.push_back(lit);
        return true;
    }

    std::vector<std::vector<int>> clauses_;
    std::vector<bool> alive_;
    std::vector<std::vector<long>> watches_;  // literal index -> clause ids
    std::vector<int> value_;                  // by var
    std::vector<int> trail_;
    std::vector<int> root_units_;
    bool has_empty_ = false;
};

struct ProofLine {
    bool deletion = false;
    std::vector<int> lits;
};

bool read_proof_line(std::istream& in, ProofLine& out) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        out.deletion = false;
        out.lits.clear();
        bool any = false;
        while (ls >> tok) {
            if (tok == "d") {
                out.deletion = true;
                continue;
            }
            if (tok == "c") break;  // comment
            int lit = std::atoi(tok.c_str());
            any = true;
            if (lit != 0) out.lits.push_back(lit);
        }
        if (any || out.deletion) return true;
    }
    return false;
}

}  // namespace

CheckReport check(const std::vector<std::vector<int>>& formula, std::istream& proof) {
    Propagator db;
    for (const auto& c : formula) db.add(c);

    CheckReport rep;
    if (db.has_empty()) {
        rep.verified = true;
        rep.detail = "formula contains the empty clause";
        return rep;
    }

    ProofLine line;
    while (read_proof_line(proof, line)) {
        for (int l : line.lits) db.ensure_var(std::abs(l));
        if (line.deletion) {
            db.remove(line.lits);
            continue;
        }
        ++rep.steps_checked;
        if (!db.rup(line.lits)) {
            // RAT fallback on the first literal.
            bool rat = !line.lits.empty();
            if (rat) {
                int pivot = line.lits[0];
                for (long id : db.clauses_with(-pivot)) {
                    std::vector<int> resolvent = line.lits;
                    for (int l : db.clause(id))
                        if (l != -pivot) resolvent.push_back(l);
                    std::sort(resolvent.begin(), resolvent.end());
                    resolvent.erase(std::unique(resolvent.begin(), resolvent.end()),
                                    resolvent.end());
                    bool taut = false;
                    for (std::size_t i = 0; i + 1 < resolvent.size(); ++i)
                        if (resolvent[i] == -resolvent[i + 1]) taut = true;
                    if (taut) continue;
                    if (!db.rup(resolvent)) {
                        rat = false;
                        break;
                    }
                }
            }
            if (!rat) {
                rep.detail = "step " + std::to_string(rep.steps_checked) +
                             " is neither RUP nor RAT";
                return rep;
            }
        }
        db.add(line.lits);
        if (line.lits.empty()) {
            rep.verified = true;
            rep.detail = "empty clause derived";
            return rep;
        }
    }
    // Some producers end without an explicit empty clause; accept iff the
    // database now propagates to a conflict.
    if (db.rup({})) {
        rep.verified = true;
        rep.detail = "database refuted after final step";
    } else {
        rep.detail = "proof ended without deriving the empty clause";
    }
    return rep;
}

CheckReport check_files(const std::string& cnf_path, const std::string& proof_path) {
    std::ifstream cnf(cnf_path);
    if (!cnf) throw ToolError("cannot open " + cnf_path);
    DimacsFile f = read_dimacs(cnf);
    std::ifstream proof(proof_path);
    if (!proof) throw ToolError("cannot open " + proof_path);
    return check(f.clauses, proof);
}

}  // namespace drat
}  // namespace rotsys

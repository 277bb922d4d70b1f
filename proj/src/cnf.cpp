#include "rotsys/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace rotsys {

VarKey key(char family, std::initializer_list<int> idx) {
    VarKey k;
    k.family = family;
    k.arity = (int)idx.size();
    int i = 0;
    for (int x : idx) k.idx[i++] = x;
    return k;
}

int CnfInstance::new_var(const VarKey& k) {
    auto [it, inserted] = registry_.emplace(k, (int)vars_.size() + 1);
    if (!inserted) throw EncodingError("variable registered twice");
    vars_.push_back(k);
    return it->second;
}

int CnfInstance::var(const VarKey& k) const {
    auto it = registry_.find(k);
    if (it == registry_.end()) throw EncodingError("unregistered variable requested");
    return it->second;
}

void CnfInstance::add_clause(std::vector<int> lits) {
    ++emitted_;
    if (lits.empty()) throw EncodingError("empty clause; use add_falsum");
    for (int lit : lits) {
        int v = std::abs(lit);
        if (lit == 0 || v > (int)vars_.size()) throw EncodingError("literal without variable");
    }
    std::vector<int> sorted = lits;
    std::sort(sorted.begin(), sorted.end());
    if (!seen_.insert(std::move(sorted)).second) return;
    clauses_.push_back(std::move(lits));
}

void CnfInstance::add_falsum() {
    // Encoded as a unit over a dedicated always-false auxiliary so the clause
    // list never holds a literal-free clause.
    if (falsum_var_ == 0) {
        falsum_var_ = new_var(key('A', {0, 0}));
        add_clause({-falsum_var_});
    }
    add_clause({falsum_var_});
}

void CnfInstance::set_meta(const std::string& k, const std::string& v) {
    meta_.emplace_back(k, v);
}

std::string CnfInstance::meta_value(const std::string& k) const {
    for (const auto& [mk, mv] : meta_)
        if (mk == k) return mv;
    return "";
}

void CnfInstance::write_dimacs(std::ostream& out) const {
    for (const auto& [k, v] : meta_) out << "c " << k << "=" << v << "\n";
    out << "p cnf " << vars_.size() << " " << clauses_.size() << "\n";
    for (const auto& cl : clauses_) {
        for (int lit : cl) out << lit << " ";
        out << "0\n";
    }
}

void CnfInstance::write_varmap(std::ostream& out) const {
    for (int v = 1; v <= (int)vars_.size(); ++v) {
        const VarKey& k = vars_[v - 1];
        out << v << " " << k.family;
        for (int i = 0; i < k.arity; ++i) out << " " << k.idx[i];
        out << "\n";
    }
}

DimacsFile read_dimacs(std::istream& in) {
    DimacsFile file;
    std::string line;
    int clause_count = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            hs >> p >> cnf >> file.var_count >> clause_count;
            if (cnf != "cnf") throw ValidationError("not a DIMACS CNF header");
            continue;
        }
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                file.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw ValidationError("unterminated clause in DIMACS input");
    if (clause_count >= 0 && (int)file.clauses.size() != clause_count)
        throw ValidationError("DIMACS clause count mismatch");
    return file;
}

std::vector<int> read_model(const std::string& text, int var_count) {
    std::vector<int> model(var_count + 1, 0);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != 'v') continue;
        std::istringstream ls(line.substr(1));
        int lit;
        while (ls >> lit) {
            if (lit == 0) continue;
            int v = std::abs(lit);
            if (v > var_count) throw ValidationError("model literal out of range");
            model[v] = lit > 0 ? 1 : -1;
        }
    }
    return model;
}

}  // namespace rotsys

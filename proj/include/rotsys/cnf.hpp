#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rotsys/types.hpp"

namespace rotsys {

// Symbolic variable key: family tag plus up to five indices.
struct VarKey {
    char family = '?';
    int arity = 0;
    std::array<int, 5> idx{};

    friend bool operator==(const VarKey&, const VarKey&) = default;
    friend auto operator<=>(const VarKey& a, const VarKey& b) {
        return std::tie(a.family, a.arity, a.idx) <=> std::tie(b.family, b.arity, b.idx);
    }
};

VarKey key(char family, std::initializer_list<int> idx);

/// Variable registry (symbolic key -> positive integer, allocated densely in
/// insertion order) plus a clause list. Duplicate clauses are dropped at add
/// time; literals must reference registered variables.
class CnfInstance {
  public:
    explicit CnfInstance(int n) : n_(n) {}

    int n() const { return n_; }

    int new_var(const VarKey& k);
    int var(const VarKey& k) const;
    bool has_var(const VarKey& k) const { return registry_.count(k) != 0; }
    int var_count() const { return (int)vars_.size(); }
    const VarKey& var_key(int v) const { return vars_[v - 1]; }

    void add_clause(std::vector<int> lits);
    // A clause that can never be satisfied (an empty disjunction).
    void add_falsum();

    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    std::size_t clause_count() const { return clauses_.size(); }
    // Number of add_clause calls, including duplicates that were dropped.
    std::size_t clauses_emitted() const { return emitted_; }

    void set_meta(const std::string& k, const std::string& v);
    const std::vector<std::pair<std::string, std::string>>& meta() const { return meta_; }
    std::string meta_value(const std::string& k) const;

    void write_dimacs(std::ostream& out) const;
    void write_varmap(std::ostream& out) const;

  private:
    int n_;
    std::vector<VarKey> vars_;
    std::map<VarKey, int> registry_;
    std::vector<std::vector<int>> clauses_;
    std::set<std::vector<int>> seen_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::size_t emitted_ = 0;
    int falsum_var_ = 0;
};

// Parsed DIMACS: header counts plus clause list.
struct DimacsFile {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;
};

DimacsFile read_dimacs(std::istream& in);

// Assignment parsed from solver output "v" lines; index 0 unused.
std::vector<int> read_model(const std::string& text, int var_count);

}  // namespace rotsys

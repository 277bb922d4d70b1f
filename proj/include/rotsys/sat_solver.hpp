#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace rotsys {
namespace sat {

enum class Result { Sat, Unsat, Unknown };

struct Limits {
    std::int64_t max_conflicts = -1;  // <0: unlimited
    double max_seconds = -1;
};

struct Stats {
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
};

/// Incremental CDCL solver: two-watched-literal propagation, first-UIP
/// learning with clause minimization, activity-driven branching with phase
/// saving, Luby restarts and learnt-clause reduction. Clauses may be added
/// between solve calls. Optionally streams added/deleted clauses as a DRAT
/// proof. Fully deterministic.
class Solver {
  public:
    Solver();

    // Literals are DIMACS-signed, variables 1-based; new variables are
    // created on demand.
    void add_clause(const std::vector<int>& lits);
    void ensure_var(int v);

    Result solve(const Limits& limits = {});

    int num_vars() const { return (int)assigns_.size(); }
    // Valid after a Sat result; v is 1-based.
    bool model_value(int v) const { return model_[v - 1] == 1; }

    void set_proof_stream(std::ostream* out) { proof_ = out; }
    const Stats& stats() const { return stats_; }

  private:
    using CRef = std::uint32_t;
    static constexpr CRef kNoReason = 0xffffffffu;

    struct Watch {
        CRef cref;
        int blocker;  // internal literal
    };

    // Clause arena layout: [size | learnt<<31][activity bits][lits...]
    std::vector<std::uint32_t> arena_;
    std::vector<CRef> learnts_;

    std::vector<std::vector<Watch>> watches_;  // per internal literal
    std::vector<std::int8_t> assigns_;         // per var: -1 unset, 0 false, 1 true
    std::vector<std::int8_t> model_;
    std::vector<std::int8_t> polarity_;
    std::vector<int> level_;
    std::vector<CRef> reason_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;

    // Binary max-heap on activity.
    std::vector<int> heap_;
    std::vector<int> heap_pos_;

    std::vector<char> seen_;
    std::vector<int> analyze_stack_;

    bool ok_ = true;
    std::uint64_t max_learnts_ = 0;
    std::uint64_t wasted_ = 0;
    Stats stats_;
    std::ostream* proof_ = nullptr;

    int clause_size(CRef c) const { return (int)(arena_[c] & 0x7fffffffu); }
    bool clause_learnt(CRef c) const { return arena_[c] >> 31; }
    const int* clause_lits(CRef c) const {
        return reinterpret_cast<const int*>(&arena_[c + 2]);
    }
    int* clause_lits(CRef c) { return reinterpret_cast<int*>(&arena_[c + 2]); }
    float clause_act(CRef c) const;
    void clause_act(CRef c, float a);

    int value(int lit) const {
        std::int8_t a = assigns_[lit >> 1];
        return a < 0 ? -1 : (a ^ (lit & 1));
    }
    int decision_level() const { return (int)trail_lim_.size(); }

    CRef alloc_clause(const std::vector<int>& lits, bool learnt);
    void attach_clause(CRef c);
    void detach_clause(CRef c);
    void remove_clause(CRef c);

    void enqueue(int lit, CRef reason);
    CRef propagate();
    void analyze(CRef conflict, std::vector<int>& out_learnt, int& out_btlevel);
    bool lit_redundant(int lit);
    void cancel_until(int level);
    int pick_branch_lit();

    void bump_var(int v);
    void decay_var_activity() { var_inc_ /= 0.95; }
    void bump_clause(CRef c);
    void decay_clause_activity() { cla_inc_ /= 0.999; }
    void rescale_var_activity();

    void heap_insert(int v);
    void heap_sift_up(int i);
    void heap_sift_down(int i);
    int heap_pop();
    bool heap_less(int a, int b) const;

    void reduce_db();
    void garbage_collect();

    void proof_add(const std::vector<int>& lits);
    void proof_add(const int* lits, int size);
    void proof_delete(const int* lits, int size);

    static int internal_lit(int dimacs) {
        int v = dimacs > 0 ? dimacs : -dimacs;
        return ((v - 1) << 1) | (dimacs < 0);
    }
    static int external_lit(int internal) {
        int v = (internal >> 1) + 1;
        return (internal & 1) ? -v : v;
    }
};

}  // namespace sat
}  // namespace rotsys

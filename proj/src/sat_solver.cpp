#include "rotsys/sat_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ostream>
#include <unordered_map>

namespace rotsys {
namespace sat {

namespace {

constexpr std::uint32_t kLearntBit = 0x80000000u;
constexpr std::uint32_t kDeadBit = 0x40000000u;
constexpr std::uint32_t kSizeMask = 0x3fffffffu;

double luby(double y, std::uint64_t x) {
    std::uint64_t size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    return std::pow(y, (double)seq);
}

}  // namespace

Solver::Solver() = default;

float Solver::clause_act(CRef c) const {
    float a;
    std::memcpy(&a, &arena_[c + 1], sizeof(float));
    return a;
}

void Solver::clause_act(CRef c, float a) { std::memcpy(&arena_[c + 1], &a, sizeof(float)); }

void Solver::ensure_var(int v) {
    while ((int)assigns_.size() < v) {
        assigns_.push_back(-1);
        model_.push_back(0);
        polarity_.push_back(1);  // default phase: false
        level_.push_back(0);
        reason_.push_back(kNoReason);
        activity_.push_back(0.0);
        seen_.push_back(0);
        heap_pos_.push_back(-1);
        watches_.emplace_back();
        watches_.emplace_back();
        heap_insert((int)assigns_.size() - 1);
    }
}

Solver::CRef Solver::alloc_clause(const std::vector<int>& lits, bool learnt) {
    CRef c = (CRef)arena_.size();
    arena_.push_back((std::uint32_t)lits.size() | (learnt ? kLearntBit : 0));
    arena_.push_back(0);
    for (int l : lits) arena_.push_back((std::uint32_t)l);
    if (learnt) {
        clause_act(c, 0.0f);
        learnts_.push_back(c);
        bump_clause(c);
    }
    return c;
}

void Solver::attach_clause(CRef c) {
    const int* lits = clause_lits(c);
    watches_[lits[0] ^ 1].push_back({c, lits[1]});
    watches_[lits[1] ^ 1].push_back({c, lits[0]});
}

void Solver::detach_clause(CRef c) {
    const int* lits = clause_lits(c);
    for (int i = 0; i < 2; ++i) {
        auto& ws = watches_[lits[i] ^ 1];
        for (std::size_t j = 0; j < ws.size(); ++j)
            if (ws[j].cref == c) {
                ws[j] = ws.back();
                ws.pop_back();
                break;
            }
    }
}

void Solver::remove_clause(CRef c) {
    proof_delete(clause_lits(c), clause_size(c));
    detach_clause(c);
    wasted_ += clause_size(c) + 2;
    arena_[c] |= kDeadBit;
}

void Solver::add_clause(const std::vector<int>& dimacs) {
    for (int l : dimacs) ensure_var(std::abs(l));
    if (!ok_) return;
    if (decision_level() != 0) cancel_until(0);

    std::vector<int> lits;
    lits.reserve(dimacs.size());
    for (int l : dimacs) lits.push_back(internal_lit(l));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
        if ((lits[i] ^ lits[i + 1]) == 1) return;  // tautology
    std::vector<int> simplified;
    for (int l : lits) {
        int v = value(l);
        if (v == 1) return;  // satisfied at root
        if (v == -1) simplified.push_back(l);
    }

    if (simplified.empty()) {
        proof_add(nullptr, 0);
        ok_ = false;
        return;
    }
    if (simplified.size() == 1) {
        enqueue(simplified[0], kNoReason);
        if (propagate() != kNoReason) {
            proof_add(nullptr, 0);
            ok_ = false;
        }
        return;
    }
    CRef c = alloc_clause(simplified, false);
    attach_clause(c);
}

void Solver::enqueue(int lit, CRef reason) {
    int v = lit >> 1;
    assigns_[v] = (std::int8_t)(1 - (lit & 1));
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
}

Solver::CRef Solver::propagate() {
    while (qhead_ < trail_.size()) {
        int lit = trail_[qhead_++];
        ++stats_.propagations;
        auto& ws = watches_[lit];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            Watch w = ws[i];
            if (value(w.blocker) == 1) {
                ws[j++] = ws[i++];
                continue;
            }
            CRef c = w.cref;
            int size = clause_size(c);
            int* lits = clause_lits(c);
            int false_lit = lit ^ 1;
            if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
            ++i;
            if (value(lits[0]) == 1) {
                ws[j++] = {c, lits[0]};
                continue;
            }
            bool moved = false;
            for (int k = 2; k < size; ++k) {
                if (value(lits[k]) != 0) {
                    std::swap(lits[1], lits[k]);
                    watches_[lits[1] ^ 1].push_back({c, lits[0]});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // Unit or conflict; keep the watch.
            ws[j++] = {c, lits[0]};
            if (value(lits[0]) == 0) {
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return c;
            }
            enqueue(lits[0], c);
        }
        ws.resize(j);
    }
    return kNoReason;
}

void Solver::bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) rescale_var_activity();
    if (heap_pos_[v] >= 0) heap_sift_up(heap_pos_[v]);
}

void Solver::rescale_var_activity() {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
}

void Solver::bump_clause(CRef c) {
    if (!clause_learnt(c)) return;
    float a = clause_act(c) + (float)cla_inc_;
    clause_act(c, a);
    if (a > 1e20f) {
        for (CRef l : learnts_) clause_act(l, clause_act(l) * 1e-20f);
        cla_inc_ *= 1e-20;
    }
}

bool Solver::heap_less(int a, int b) const {
    if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
    return a < b;
}

void Solver::heap_insert(int v) {
    if (heap_pos_[v] >= 0) return;
    heap_pos_[v] = (int)heap_.size();
    heap_.push_back(v);
    heap_sift_up(heap_pos_[v]);
}

void Solver::heap_sift_up(int i) {
    int v = heap_[i];
    while (i > 0) {
        int p = (i - 1) >> 1;
        if (!heap_less(v, heap_[p])) break;
        heap_[i] = heap_[p];
        heap_pos_[heap_[i]] = i;
        i = p;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

void Solver::heap_sift_down(int i) {
    int v = heap_[i];
    int n = (int)heap_.size();
    while (2 * i + 1 < n) {
        int child = 2 * i + 1;
        if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = i;
        i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

int Solver::heap_pop() {
    int v = heap_[0];
    heap_pos_[v] = -1;
    if (heap_.size() > 1) {
        heap_[0] = heap_.back();
        heap_pos_[heap_[0]] = 0;
        heap_.pop_back();
        heap_sift_down(0);
    } else {
        heap_.pop_back();
    }
    return v;
}

void Solver::cancel_until(int level) {
    if (decision_level() <= level) return;
    for (int i = (int)trail_.size() - 1; i >= trail_lim_[level]; --i) {
        int v = trail_[i] >> 1;
        polarity_[v] = (std::int8_t)(trail_[i] & 1);
        assigns_[v] = -1;
        reason_[v] = kNoReason;
        heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
}

void Solver::analyze(CRef conflict, std::vector<int>& out_learnt, int& out_btlevel) {
    out_learnt.clear();
    out_learnt.push_back(0);  // slot for the asserting literal
    int path = 0;
    int lit = -1;
    std::size_t index = trail_.size();
    CRef reason = conflict;

    do {
        int size = clause_size(reason);
        const int* lits = clause_lits(reason);
        bump_clause(reason);
        for (int k = (lit == -1 ? 0 : 1); k < size; ++k) {
            int q = lits[k];
            int v = q >> 1;
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump_var(v);
            if (level_[v] >= decision_level())
                ++path;
            else
                out_learnt.push_back(q);
        }
        while (!seen_[trail_[--index] >> 1]) {
        }
        lit = trail_[index];
        reason = reason_[lit >> 1];
        seen_[lit >> 1] = 0;
        --path;
    } while (path > 0);
    out_learnt[0] = lit ^ 1;

    std::vector<int> to_clear(out_learnt.begin() + 1, out_learnt.end());

    // Minimization: drop literals whose reason chains stay inside the clause.
    std::size_t keep = 1;
    for (std::size_t i = 1; i < out_learnt.size(); ++i) {
        int v = out_learnt[i] >> 1;
        if (reason_[v] == kNoReason || !lit_redundant(out_learnt[i]))
            out_learnt[keep++] = out_learnt[i];
    }
    out_learnt.resize(keep);

    if (out_learnt.size() == 1) {
        out_btlevel = 0;
    } else {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < out_learnt.size(); ++i)
            if (level_[out_learnt[i] >> 1] > level_[out_learnt[max_i] >> 1]) max_i = i;
        std::swap(out_learnt[1], out_learnt[max_i]);
        out_btlevel = level_[out_learnt[1] >> 1];
    }

    for (int l : to_clear) seen_[l >> 1] = 0;
    for (int l : analyze_stack_) seen_[l >> 1] = 0;
    analyze_stack_.clear();
}

bool Solver::lit_redundant(int lit) {
    std::vector<int> stack{lit};
    std::size_t cleanup_from = analyze_stack_.size();
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        CRef r = reason_[l >> 1];
        if (r == kNoReason) return false;
        int size = clause_size(r);
        const int* lits = clause_lits(r);
        for (int k = 0; k < size; ++k) {
            int q = lits[k];
            int v = q >> 1;
            if (v == (l >> 1) || seen_[v] || level_[v] == 0) continue;
            if (reason_[v] == kNoReason) {
                for (std::size_t i = cleanup_from; i < analyze_stack_.size(); ++i)
                    seen_[analyze_stack_[i] >> 1] = 0;
                analyze_stack_.resize(cleanup_from);
                return false;
            }
            seen_[v] = 1;
            analyze_stack_.push_back(q);
            stack.push_back(q);
        }
    }
    return true;
}

int Solver::pick_branch_lit() {
    while (!heap_.empty()) {
        int v = heap_[0];
        heap_pop();
        if (assigns_[v] < 0) return (v << 1) | polarity_[v];
    }
    return -1;
}

void Solver::reduce_db() {
    std::vector<CRef> live;
    live.reserve(learnts_.size());
    for (CRef c : learnts_)
        if (!(arena_[c] & kDeadBit)) live.push_back(c);
    std::sort(live.begin(), live.end(), [this](CRef a, CRef b) {
        int sa = clause_size(a), sb = clause_size(b);
        if ((sa > 2) != (sb > 2)) return sa > 2;
        if (clause_act(a) != clause_act(b)) return clause_act(a) < clause_act(b);
        return a < b;
    });
    double ext_lim = cla_inc_ / std::max<std::size_t>(live.size(), 1);
    std::vector<CRef> kept;
    kept.reserve(live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
        CRef c = live[i];
        int first = clause_lits(c)[0];
        bool locked = value(first) == 1 && reason_[first >> 1] == c;
        if (clause_size(c) > 2 && !locked &&
            (i < live.size() / 2 || clause_act(c) < ext_lim))
            remove_clause(c);
        else
            kept.push_back(c);
    }
    learnts_ = std::move(kept);
    if (wasted_ > 0 && wasted_ * 4 > arena_.size()) garbage_collect();
}

void Solver::garbage_collect() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(arena_.size() - wasted_);
    std::unordered_map<CRef, CRef> moved;

    CRef c = 0;
    while (c < (CRef)arena_.size()) {
        std::uint32_t header = arena_[c];
        std::uint32_t size = header & kSizeMask;
        if (!(header & kDeadBit)) {
            CRef nc = (CRef)fresh.size();
            for (std::uint32_t k = 0; k < size + 2; ++k) fresh.push_back(arena_[c + k]);
            moved[c] = nc;
        }
        c += size + 2;
    }
    arena_ = std::move(fresh);
    wasted_ = 0;

    for (auto& ws : watches_)
        for (auto& w : ws) w.cref = moved.at(w.cref);
    for (CRef& l : learnts_) l = moved.at(l);
    for (std::size_t v = 0; v < reason_.size(); ++v)
        if (reason_[v] != kNoReason && assigns_[v] >= 0) reason_[v] = moved.at(reason_[v]);
}

void Solver::proof_add(const std::vector<int>& lits) {
    if (!proof_) return;
    for (int l : lits) *proof_ << external_lit(l) << ' ';
    *proof_ << "0\n";
}

void Solver::proof_add(const int* lits, int size) {
    if (!proof_) return;
    for (int i = 0; i < size; ++i) *proof_ << external_lit(lits[i]) << ' ';
    *proof_ << "0\n";
}

void Solver::proof_delete(const int* lits, int size) {
    if (!proof_) return;
    *proof_ << "d ";
    for (int i = 0; i < size; ++i) *proof_ << external_lit(lits[i]) << ' ';
    *proof_ << "0\n";
}

Result Solver::solve(const Limits& limits) {
    if (!ok_) return Result::Unsat;
    cancel_until(0);
    if (propagate() != kNoReason) {
        proof_add(nullptr, 0);
        ok_ = false;
        return Result::Unsat;
    }

    max_learnts_ = std::max<std::uint64_t>(4000, arena_.size() / 8);
    std::uint64_t conflicts_start = stats_.conflicts;
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t restart_round = 0;
    std::uint64_t restart_budget = (std::uint64_t)(100 * luby(2.0, restart_round));
    std::uint64_t conflicts_this_restart = 0;
    std::vector<int> learnt;

    while (true) {
        CRef conflict = propagate();
        if (conflict != kNoReason) {
            ++stats_.conflicts;
            ++conflicts_this_restart;
            if (decision_level() == 0) {
                proof_add(nullptr, 0);
                ok_ = false;
                return Result::Unsat;
            }
            int btlevel = 0;
            analyze(conflict, learnt, btlevel);
            cancel_until(btlevel);
            proof_add(learnt);
            if (learnt.size() == 1) {
                enqueue(learnt[0], kNoReason);
            } else {
                CRef c = alloc_clause(learnt, true);
                attach_clause(c);
                enqueue(learnt[0], c);
            }
            decay_var_activity();
            decay_clause_activity();

            if ((stats_.conflicts & 1023) == 0 && limits.max_seconds > 0) {
                double dt =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (dt > limits.max_seconds) {
                    cancel_until(0);
                    return Result::Unknown;
                }
            }
            if (limits.max_conflicts >= 0 &&
                (std::int64_t)(stats_.conflicts - conflicts_start) >= limits.max_conflicts) {
                cancel_until(0);
                return Result::Unknown;
            }
        } else {
            if (conflicts_this_restart >= restart_budget) {
                ++stats_.restarts;
                ++restart_round;
                restart_budget = (std::uint64_t)(100 * luby(2.0, restart_round));
                conflicts_this_restart = 0;
                cancel_until(0);
                continue;
            }
            if (learnts_.size() >= max_learnts_ + trail_.size()) {
                reduce_db();
                max_learnts_ += max_learnts_ / 10;
            }
            int lit = pick_branch_lit();
            if (lit == -1) {
                for (std::size_t v = 0; v < assigns_.size(); ++v) model_[v] = assigns_[v];
                cancel_until(0);
                return Result::Sat;
            }
            ++stats_.decisions;
            trail_lim_.push_back((int)trail_.size());
            enqueue(lit, kNoReason);
        }
    }
}

}  // namespace sat
}  // namespace rotsys

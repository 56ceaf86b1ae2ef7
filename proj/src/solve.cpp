#include "mugen/solve.hpp"

#include <algorithm>
#include <cstdint>

namespace mugen {

SatResult SatResult::sat(Assignment witness)
{
    return SatResult{Status::Satisfiable, std::move(witness), std::nullopt};
}

SatResult SatResult::unsat(std::optional<unsigned> conflict_variable)
{
    return SatResult{Status::Unsatisfiable, std::nullopt, conflict_variable};
}

namespace {

class Deadline {
public:
    explicit Deadline(const std::optional<std::chrono::milliseconds>& budget)
    {
        if (budget)
            at_ = std::chrono::steady_clock::now() + *budget;
    }

    void check() const
    {
        if (at_ && std::chrono::steady_clock::now() >= *at_)
            throw SolverTimeout();
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

} // namespace

SatResult brute_force_sat(const CnfFormula& f, const SolverLimits& limits)
{
    const unsigned n = f.num_vars();
    if (n > limits.brute_force_var_cap)
        throw TooManyVariables("formula has " + std::to_string(n) +
                               " variables, brute-force cap is " +
                               std::to_string(limits.brute_force_var_cap));
    if (n > 32)
        throw TooManyVariables("brute-force enumeration supports at most 32 variables");
    Deadline deadline(limits.budget);
    deadline.check();

    // Bit i of a candidate mask holds x_{n-i}, so counting masks upward walks
    // the assignments (x_1, ..., x_n) in lexicographic order, false < true.
    std::vector<std::uint32_t> pos_mask(f.num_clauses(), 0);
    std::vector<std::uint32_t> neg_mask(f.num_clauses(), 0);
    for (std::size_t ci = 0; ci < f.num_clauses(); ++ci) {
        for (Literal lit : f.clauses()[ci].literals()) {
            std::uint32_t bit = 1u << (n - lit.variable);
            if (lit.negated)
                neg_mask[ci] |= bit;
            else
                pos_mask[ci] |= bit;
        }
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if ((mask & 0xFFFF) == 0)
            deadline.check();
        const std::uint32_t m = static_cast<std::uint32_t>(mask);
        bool all_sat = true;
        for (std::size_t ci = 0; ci < f.num_clauses(); ++ci) {
            if ((m & pos_mask[ci]) == 0 && (~m & neg_mask[ci]) == 0) {
                all_sat = false;
                break;
            }
        }
        if (all_sat) {
            Assignment a(n);
            for (unsigned v = 1; v <= n; ++v)
                a.set(v, (mask >> (n - v)) & 1u);
            return SatResult::sat(std::move(a));
        }
    }
    return SatResult::unsat();
}

namespace {

// Counting-based DPLL. Per clause we track how many literals are true and
// how many are unassigned; a clause with no true and one unassigned literal
// is a unit, with none it is a conflict.
//
// After every decision the residual formula is split into variable-disjoint
// connected components, which are then searched independently (lowest
// variable first within and across components, true branch first). Without
// the split, chronological backtracking re-refutes an unsatisfiable group
// once per assignment of every independent group searched before it; the
// decomposition removes that exponential factor and stays deterministic.
class DpllSearch {
public:
    DpllSearch(const CnfFormula& f, const SolverLimits& limits)
        : f_(f), n_(f.num_vars()), deadline_(limits.budget),
          value_(n_ + 1, 0), occurrences_(2 * std::size_t{n_} + 2),
          var_seen_(n_ + 1, 0), clause_seen_(f.num_clauses(), 0)
    {
        const auto& clauses = f.clauses();
        sat_count_.assign(clauses.size(), 0);
        unassigned_count_.assign(clauses.size(), 0);
        for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
            unassigned_count_[ci] = static_cast<unsigned>(clauses[ci].width());
            for (Literal lit : clauses[ci].literals())
                occurrences_[node(lit)].push_back(static_cast<std::uint32_t>(ci));
        }
    }

    SatResult run()
    {
        deadline_.check();
        // Top-level units come from width-1 clauses.
        for (std::size_t ci = 0; ci < f_.num_clauses(); ++ci)
            if (f_.clauses()[ci].width() == 1)
                pending_.push_back(f_.clauses()[ci].literals()[0]);
        if (!propagate())
            return SatResult::unsat();
        std::vector<unsigned> unassigned;
        for (unsigned v = 1; v <= n_; ++v)
            if (value_[v] == 0)
                unassigned.push_back(v);
        if (solve_components(split_components(unassigned)))
            return SatResult::sat(witness());
        return SatResult::unsat();
    }

private:
    static std::size_t node(Literal lit)
    {
        return 2 * std::size_t{lit.variable} + (lit.negated ? 1 : 0);
    }

    // Groups the still-unconstrained candidate variables by connectivity
    // through unresolved clauses. Variables in no unresolved clause are free
    // and omitted (the witness defaults them to false). Components come out
    // ordered by their lowest variable, members sorted ascending.
    std::vector<std::vector<unsigned>> split_components(const std::vector<unsigned>& candidates)
    {
        ++era_;
        std::vector<std::vector<unsigned>> components;
        std::vector<unsigned> queue;
        for (unsigned start : candidates) {
            if (value_[start] != 0 || var_seen_[start] == era_)
                continue;
            var_seen_[start] = era_;
            queue.assign(1, start);
            std::vector<unsigned> comp;
            bool constrained = false;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const unsigned u = queue[qi];
                comp.push_back(u);
                for (const std::size_t lit_node : {node(pos(u)), node(neg(u))}) {
                    for (std::uint32_t ci : occurrences_[lit_node]) {
                        if (sat_count_[ci] != 0 || clause_seen_[ci] == era_)
                            continue;
                        clause_seen_[ci] = era_;
                        constrained = true;
                        for (Literal lit : f_.clauses()[ci].literals()) {
                            if (value_[lit.variable] == 0 && var_seen_[lit.variable] != era_) {
                                var_seen_[lit.variable] = era_;
                                queue.push_back(lit.variable);
                            }
                        }
                    }
                }
            }
            if (!constrained)
                continue;
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
        return components;
    }

    // Components share no variables, so one failing fails the whole node and
    // earlier siblings never need to be re-searched.
    bool solve_components(const std::vector<std::vector<unsigned>>& components)
    {
        for (const std::vector<unsigned>& comp : components)
            if (!search_component(comp))
                return false;
        return true;
    }

    bool search_component(const std::vector<unsigned>& comp)
    {
        if ((++steps_ & 0x3FF) == 0)
            deadline_.check();
        const unsigned branch = comp.front(); // lowest index; all entries unassigned

        for (bool val : {true, false}) {
            const std::size_t mark = trail_.size();
            pending_.push_back(Literal{branch, !val});
            if (propagate()) {
                std::vector<unsigned> rest;
                rest.reserve(comp.size());
                for (unsigned v : comp)
                    if (value_[v] == 0)
                        rest.push_back(v);
                if (solve_components(split_components(rest)))
                    return true;
            }
            undo_to(mark);
        }
        return false;
    }

    // Drains pending_ with unit propagation to fixpoint. False on conflict;
    // pending_ is empty afterwards either way.
    bool propagate()
    {
        std::size_t head = 0;
        bool conflict = false;
        while (head < pending_.size() && !conflict) {
            Literal lit = pending_[head++];
            int8_t want = lit.negated ? -1 : 1;
            if (value_[lit.variable] != 0) {
                if (value_[lit.variable] != want) {
                    conflict = true;
                    break;
                }
                continue;
            }
            value_[lit.variable] = want;
            trail_.push_back(lit.variable);
            for (std::uint32_t ci : occurrences_[node(lit)])
                ++sat_count_[ci];
            // Every count update must complete even on conflict, or undo_to
            // would re-increment counters that were never decremented.
            for (std::uint32_t ci : occurrences_[node(negate(lit))]) {
                --unassigned_count_[ci];
                if (sat_count_[ci] != 0 || conflict)
                    continue;
                if (unassigned_count_[ci] == 0)
                    conflict = true;
                else if (unassigned_count_[ci] == 1)
                    pending_.push_back(sole_unassigned(ci));
            }
        }
        pending_.clear();
        return !conflict;
    }

    Literal sole_unassigned(std::uint32_t ci) const
    {
        for (Literal lit : f_.clauses()[ci].literals())
            if (value_[lit.variable] == 0)
                return lit;
        // Unreachable: callers only ask when unassigned_count_[ci] == 1.
        throw std::logic_error("no unassigned literal in unit clause");
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            unsigned v = trail_.back();
            trail_.pop_back();
            Literal lit{v, value_[v] < 0};
            for (std::uint32_t ci : occurrences_[node(lit)])
                --sat_count_[ci];
            for (std::uint32_t ci : occurrences_[node(negate(lit))])
                ++unassigned_count_[ci];
            value_[v] = 0;
        }
    }

    Assignment witness() const
    {
        Assignment a(n_); // unconstrained variables default to false
        for (unsigned v = 1; v <= n_; ++v)
            if (value_[v] != 0)
                a.set(v, value_[v] > 0);
        return a;
    }

    const CnfFormula& f_;
    unsigned n_;
    Deadline deadline_;
    std::vector<int8_t> value_;
    std::vector<std::vector<std::uint32_t>> occurrences_;
    std::vector<unsigned> sat_count_;
    std::vector<unsigned> unassigned_count_;
    std::vector<unsigned> trail_;
    std::vector<Literal> pending_;
    std::vector<std::uint64_t> var_seen_;
    std::vector<std::uint64_t> clause_seen_;
    std::uint64_t era_ = 0;
    std::uint64_t steps_ = 0;
};

} // namespace

SatResult dpll_sat(const CnfFormula& f, const SolverLimits& limits)
{
    return DpllSearch(f, limits).run();
}

} // namespace mugen

#pragma once

#include <chrono>
#include <optional>

#include "mugen/cnf.hpp"

namespace mugen {

struct SatResult {
    enum class Status { Satisfiable, Unsatisfiable };

    Status status;
    // Present iff satisfiable; always passes evaluate.
    std::optional<Assignment> witness;
    // For the 2-SAT procedure: a variable whose literals share a strongly
    // connected component. Empty for the other solvers.
    std::optional<unsigned> conflict_variable;

    bool is_sat() const { return status == Status::Satisfiable; }

    static SatResult sat(Assignment witness);
    static SatResult unsat(std::optional<unsigned> conflict_variable = std::nullopt);
};

struct SolverLimits {
    // brute_force_sat refuses formulas with more variables than this.
    unsigned brute_force_var_cap = 24;
    // Wall-clock budget per solver call; no limit when unset.
    std::optional<std::chrono::milliseconds> budget;
};

// Enumerates all 2^n assignments in lexicographic order over (x_1,...,x_n)
// with false < true, returning the first satisfying one. The independent
// oracle the other procedures are checked against.
// Throws TooManyVariables past the cap and SolverTimeout past the budget.
SatResult brute_force_sat(const CnfFormula& f, const SolverLimits& limits = {});

// Unit propagation to fixpoint, then branch on the lowest-indexed unassigned
// variable, true first. Variable-disjoint components of the residual formula
// are searched independently, lowest-variable component first. No clause
// learning, no pure-literal rule; fully deterministic.
// Throws SolverTimeout past the budget.
SatResult dpll_sat(const CnfFormula& f, const SolverLimits& limits = {});

} // namespace mugen

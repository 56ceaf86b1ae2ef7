#pragma once

#include <chrono>
#include <optional>

#include "mugen/solve.hpp"

namespace mugen {

enum class SolverChoice { BruteForce, Dpll, Auto };

struct VerifyOptions {
    SolverChoice solver = SolverChoice::Auto;
    // Budget per individual solver call. Unknown verdicts are first-class;
    // a timeout is never folded into a boolean answer.
    std::chrono::milliseconds per_call_budget{10'000};
    unsigned brute_force_var_cap = 24;
    // Deletion checks fan out over a thread pool when the effective backend
    // is DPLL; results are merged by the lowest-index rule either way.
    bool parallel = true;
};

struct MuVerdict {
    enum class Kind {
        MinimalUnsatisfiable,
        Satisfiable,    // not even unsatisfiable; carries a witness
        NotMinimal,     // unsatisfiable, but some clause is removable
        Unknown,        // a solver call exceeded its budget
    };

    Kind kind;
    std::optional<Assignment> witness;            // Satisfiable only
    std::optional<std::size_t> removable_index;   // NotMinimal: lowest such index
    std::size_t solver_calls = 0;

    bool is_mu() const { return kind == Kind::MinimalUnsatisfiable; }
};

// MinimalUnsatisfiable iff the formula is unsatisfiable and every
// single-clause deletion is satisfiable. One full solve plus one solve per
// clause; with SolverChoice::Auto each call uses brute force up to the
// variable cap and DPLL beyond it.
MuVerdict is_minimal_unsatisfiable(const CnfFormula& f, const VerifyOptions& opts = {});

// Deletion-based MUS extraction: scan clause indices ascending, dropping a
// clause whenever the remainder stays unsatisfiable. Single pass; the result
// is minimal unsatisfiable and the scan order makes it deterministic.
// Throws InputSatisfiable on satisfiable input and SolverTimeout when a call
// exceeds its budget.
CnfFormula shrink_to_mus(const CnfFormula& f, const VerifyOptions& opts = {});

// Clause-count lower bound for MU formulas: |C| >= |V| + 1. Requires every
// variable to occur in some clause (UnusedVariable otherwise). A false
// return on a verified-MU input signals a bug upstream.
bool check_deficiency(const CnfFormula& f);

// Upper bound for MU 2-SAT formulas: |C| <= 4n. Throws NotTwoSat unless all
// clauses have width 2.
bool check_2sat_upper_bound(const CnfFormula& f);

} // namespace mugen

#include "mugen/mu_verify.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace mugen {

namespace {

enum class CallStatus : std::uint8_t { Sat, Unsat, Timeout };

struct CallResult {
    CallStatus status;
    std::optional<Assignment> witness;
};

SolverChoice resolve(const VerifyOptions& opts, const CnfFormula& f)
{
    if (opts.solver != SolverChoice::Auto)
        return opts.solver;
    return f.num_vars() <= opts.brute_force_var_cap ? SolverChoice::BruteForce
                                                    : SolverChoice::Dpll;
}

CallResult run_solver(SolverChoice backend, const CnfFormula& f, const VerifyOptions& opts)
{
    SolverLimits limits{opts.brute_force_var_cap, opts.per_call_budget};
    try {
        SatResult r = backend == SolverChoice::BruteForce ? brute_force_sat(f, limits)
                                                          : dpll_sat(f, limits);
        if (r.is_sat())
            return {CallStatus::Sat, std::move(r.witness)};
        return {CallStatus::Unsat, std::nullopt};
    } catch (const SolverTimeout&) {
        return {CallStatus::Timeout, std::nullopt};
    }
}

// Runs all single-clause deletion checks on a small pool over an atomic work
// index. Formula snapshots are immutable, so the workers share nothing but
// the result slots.
std::vector<CallStatus> deletion_statuses_parallel(const CnfFormula& f,
                                                   SolverChoice backend,
                                                   const VerifyOptions& opts)
{
    const std::size_t m = f.num_clauses();
    std::vector<CallStatus> statuses(m, CallStatus::Sat);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), m));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!abort.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= m)
                    break;
                try {
                    statuses[i] = run_solver(backend, f.without_clause(i), opts).status;
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    abort = true;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return statuses;
}

} // namespace

MuVerdict is_minimal_unsatisfiable(const CnfFormula& f, const VerifyOptions& opts)
{
    const SolverChoice backend = resolve(opts, f);
    MuVerdict verdict{};
    verdict.solver_calls = 1;

    CallResult full = run_solver(backend, f, opts);
    if (full.status == CallStatus::Timeout) {
        verdict.kind = MuVerdict::Kind::Unknown;
        return verdict;
    }
    if (full.status == CallStatus::Sat) {
        verdict.kind = MuVerdict::Kind::Satisfiable;
        verdict.witness = std::move(full.witness);
        return verdict;
    }

    const std::size_t m = f.num_clauses();
    if (backend == SolverChoice::Dpll && opts.parallel && m > 1) {
        const std::vector<CallStatus> statuses = deletion_statuses_parallel(f, backend, opts);
        verdict.solver_calls += m;
        // Lowest-index merge: a removable clause wins only if no lower-index
        // check timed out, otherwise the true lowest index is unknown.
        for (std::size_t i = 0; i < m; ++i) {
            if (statuses[i] == CallStatus::Timeout) {
                verdict.kind = MuVerdict::Kind::Unknown;
                return verdict;
            }
            if (statuses[i] == CallStatus::Unsat) {
                verdict.kind = MuVerdict::Kind::NotMinimal;
                verdict.removable_index = i;
                return verdict;
            }
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            const CallResult r = run_solver(backend, f.without_clause(i), opts);
            ++verdict.solver_calls;
            if (r.status == CallStatus::Timeout) {
                verdict.kind = MuVerdict::Kind::Unknown;
                return verdict;
            }
            if (r.status == CallStatus::Unsat) {
                verdict.kind = MuVerdict::Kind::NotMinimal;
                verdict.removable_index = i;
                return verdict;
            }
        }
    }

    verdict.kind = MuVerdict::Kind::MinimalUnsatisfiable;
    return verdict;
}

CnfFormula shrink_to_mus(const CnfFormula& f, const VerifyOptions& opts)
{
    const CallResult full = run_solver(resolve(opts, f), f, opts);
    if (full.status == CallStatus::Timeout)
        throw SolverTimeout();
    if (full.status == CallStatus::Sat)
        throw InputSatisfiable("input satisfiable: no unsatisfiable core exists");

    // Ascending single pass; sound because a subset that is unsatisfiable
    // stays unsatisfiable when earlier survivors are kept.
    CnfFormula current = f;
    std::size_t i = 0;
    while (i < current.num_clauses()) {
        CnfFormula candidate = current.without_clause(i);
        const CallResult r = run_solver(resolve(opts, candidate), candidate, opts);
        if (r.status == CallStatus::Timeout)
            throw SolverTimeout();
        if (r.status == CallStatus::Unsat)
            current = std::move(candidate);
        else
            ++i;
    }
    return current;
}

bool check_deficiency(const CnfFormula& f)
{
    std::vector<char> used(std::size_t{f.num_vars()} + 1, 0);
    for (const Clause& c : f.clauses())
        for (Literal lit : c.literals())
            used[lit.variable] = 1;
    for (unsigned v = 1; v <= f.num_vars(); ++v)
        if (!used[v])
            throw UnusedVariable("variable " + std::to_string(v) + " occurs in no clause");
    return f.num_clauses() >= std::size_t{f.num_vars()} + 1;
}

bool check_2sat_upper_bound(const CnfFormula& f)
{
    for (std::size_t ci = 0; ci < f.num_clauses(); ++ci)
        if (f.clauses()[ci].width() != 2)
            throw NotTwoSat("clause " + std::to_string(ci) + " has width " +
                            std::to_string(f.clauses()[ci].width()) + ", expected 2");
    return f.num_clauses() <= std::size_t{4} * f.num_vars();
}

} // namespace mugen

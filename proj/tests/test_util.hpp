#pragma once

// Shared helpers for the test binaries: seeded random formula generators and
// small evaluation utilities. Everything here is deterministic for a fixed
// seed so failures reproduce.

#include <algorithm>
#include <random>
#include <vector>

#include "mugen/cnf.hpp"

namespace mugen_test {

using mugen::Assignment;
using mugen::Clause;
using mugen::CnfFormula;
using mugen::Literal;

inline std::vector<unsigned> distinct_vars(std::mt19937& rng, unsigned num_vars, unsigned count)
{
    std::uniform_int_distribution<unsigned> var_dist(1, num_vars);
    std::vector<unsigned> vars;
    while (vars.size() < count) {
        unsigned v = var_dist(rng);
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    }
    return vars;
}

inline Clause random_clause(std::mt19937& rng, unsigned num_vars, unsigned width)
{
    std::bernoulli_distribution sign(0.5);
    std::vector<Literal> lits;
    for (unsigned v : distinct_vars(rng, num_vars, width))
        lits.push_back(Literal{v, sign(rng)});
    return mugen::make_clause(std::move(lits));
}

// Mixed-width CNF with distinct variables per clause.
inline CnfFormula random_cnf(std::mt19937& rng, unsigned num_vars, unsigned max_width,
                             std::size_t num_clauses)
{
    std::uniform_int_distribution<unsigned> width_dist(1, std::min(max_width, num_vars));
    std::vector<Clause> clauses;
    clauses.reserve(num_clauses);
    for (std::size_t i = 0; i < num_clauses; ++i)
        clauses.push_back(random_clause(rng, num_vars, width_dist(rng)));
    return CnfFormula(num_vars, std::move(clauses));
}

inline CnfFormula random_twosat(std::mt19937& rng, unsigned num_vars, std::size_t num_clauses)
{
    std::vector<Clause> clauses;
    clauses.reserve(num_clauses);
    for (std::size_t i = 0; i < num_clauses; ++i)
        clauses.push_back(random_clause(rng, num_vars, 2));
    return CnfFormula(num_vars, std::move(clauses));
}

inline Assignment assignment_from_bits(unsigned num_vars, std::uint32_t bits)
{
    Assignment a(num_vars);
    for (unsigned v = 1; v <= num_vars; ++v)
        a.set(v, (bits >> (v - 1)) & 1u);
    return a;
}

inline std::vector<Assignment> all_assignments(unsigned num_vars)
{
    std::vector<Assignment> out;
    out.reserve(std::size_t{1} << num_vars);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << num_vars); ++bits)
        out.push_back(assignment_from_bits(num_vars, bits));
    return out;
}

inline bool clause_satisfied(const Clause& c, const Assignment& a)
{
    for (Literal lit : c.literals())
        if (a.satisfies(lit))
            return true;
    return false;
}

inline std::size_t count_falsified(const CnfFormula& f, const Assignment& a)
{
    std::size_t falsified = 0;
    for (const Clause& c : f.clauses()) {
        bool sat = false;
        for (Literal lit : c.literals())
            if (a.satisfies(lit)) {
                sat = true;
                break;
            }
        if (!sat)
            ++falsified;
    }
    return falsified;
}

} // namespace mugen_test

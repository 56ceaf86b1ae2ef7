#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mugen/errors.hpp"

namespace mugen {

// A variable index (1-based) together with a polarity.
struct Literal {
    unsigned variable; // >= 1
    bool negated;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

constexpr Literal pos(unsigned variable) { return Literal{variable, false}; }
constexpr Literal neg(unsigned variable) { return Literal{variable, true}; }

constexpr Literal negate(Literal lit) { return Literal{lit.variable, !lit.negated}; }

// Signed DIMACS encoding: x_i -> i, ~x_i -> -i.
constexpr long to_dimacs(Literal lit)
{
    return lit.negated ? -static_cast<long>(lit.variable)
                       : static_cast<long>(lit.variable);
}

// A duplicate-free disjunction of literals, kept sorted by (variable, polarity).
// Construct through make_clause so the invariants always hold.
class Clause {
public:
    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t width() const { return lits_.size(); }
    bool is_tautological() const { return tautological_; }
    bool contains(Literal lit) const;
    unsigned max_variable() const { return lits_.empty() ? 0 : lits_.back().variable; }

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    friend Clause make_clause(std::vector<Literal> lits);
    Clause() = default;

    std::vector<Literal> lits_;
    bool tautological_ = false;
};

// Sorts, removes duplicate literals, and flags tautologies.
// Throws EmptyClause on empty input.
Clause make_clause(std::vector<Literal> lits);
Clause make_clause(std::initializer_list<Literal> lits);

// A total truth-value map over variables 1..num_vars.
class Assignment {
public:
    explicit Assignment(unsigned num_vars, bool init = false)
        : values_(num_vars, init) {}

    unsigned num_vars() const { return static_cast<unsigned>(values_.size()); }
    bool value(unsigned variable) const { return values_[variable - 1]; }
    void set(unsigned variable, bool v) { values_[variable - 1] = v; }
    bool satisfies(Literal lit) const { return value(lit.variable) != lit.negated; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<bool> values_;
};

// Variable count plus a clause sequence. Clause order is part of the value:
// generators document their emission order and emit byte-stable DIMACS.
// Duplicate clauses are permitted (the parser may ingest them); each clause
// is internally duplicate-free.
class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(unsigned num_vars, std::vector<Clause> clauses);

    unsigned num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t num_clauses() const { return clauses_.size(); }

    // Copy of this formula with clause `index` deleted.
    CnfFormula without_clause(std::size_t index) const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    unsigned num_vars_ = 0;
    std::vector<Clause> clauses_;
};

// True iff every clause has at least one literal satisfied by `a`.
// Throws IncompleteAssignment unless `a` is total on 1..num_vars.
bool evaluate(const CnfFormula& f, const Assignment& a);

// Shifts every variable index by `offset`; num_vars grows by the same amount.
// Satisfiability-equivalent to the input.
CnfFormula rename_variables(const CnfFormula& f, unsigned offset);

} // namespace mugen

#include "mugen/cnf.hpp"

#include <algorithm>

namespace mugen {

bool Clause::contains(Literal lit) const
{
    return std::binary_search(lits_.begin(), lits_.end(), lit);
}

Clause make_clause(std::vector<Literal> lits)
{
    if (lits.empty())
        throw EmptyClause();
    for (const Literal& lit : lits)
        if (lit.variable == 0)
            throw InvalidParameter("literal variable indices are 1-based");
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());

    Clause c;
    c.lits_ = std::move(lits);
    // Both polarities of a variable sort adjacently.
    for (std::size_t i = 0; i + 1 < c.lits_.size(); ++i) {
        if (c.lits_[i].variable == c.lits_[i + 1].variable) {
            c.tautological_ = true;
            break;
        }
    }
    return c;
}

Clause make_clause(std::initializer_list<Literal> lits)
{
    return make_clause(std::vector<Literal>(lits));
}

CnfFormula::CnfFormula(unsigned num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses))
{
    for (const Clause& c : clauses_) {
        if (c.max_variable() > num_vars_)
            throw InvalidParameter("clause references variable " +
                                   std::to_string(c.max_variable()) +
                                   " beyond num_vars " + std::to_string(num_vars_));
    }
}

CnfFormula CnfFormula::without_clause(std::size_t index) const
{
    if (index >= clauses_.size())
        throw BadIndex("clause index " + std::to_string(index) + " out of range");
    std::vector<Clause> rest;
    rest.reserve(clauses_.size() - 1);
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        if (i != index)
            rest.push_back(clauses_[i]);
    return CnfFormula(num_vars_, std::move(rest));
}

bool evaluate(const CnfFormula& f, const Assignment& a)
{
    if (a.num_vars() != f.num_vars())
        throw IncompleteAssignment("assignment covers " + std::to_string(a.num_vars()) +
                                   " variables, formula has " +
                                   std::to_string(f.num_vars()));
    for (const Clause& c : f.clauses()) {
        bool sat = false;
        for (Literal lit : c.literals()) {
            if (a.satisfies(lit)) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

CnfFormula rename_variables(const CnfFormula& f, unsigned offset)
{
    std::vector<Clause> shifted;
    shifted.reserve(f.num_clauses());
    for (const Clause& c : f.clauses()) {
        std::vector<Literal> lits = c.literals();
        for (Literal& lit : lits)
            lit.variable += offset;
        shifted.push_back(make_clause(std::move(lits)));
    }
    return CnfFormula(f.num_vars() + offset, std::move(shifted));
}

} // namespace mugen

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mugen/cnf.hpp"

namespace mugen {

// Map from donor clause indices onto the literal positions of a replaced
// clause. Entry j is an index into the replaced clause's (sorted) literal
// sequence; every position must be hit at least once.
struct Surjection {
    std::vector<unsigned> assignment;
};

// Round-robin: donor clause j -> position j mod target_width. Surjective by
// construction. Throws InvalidParameter when donor_clause_count < target_width.
Surjection default_surjection(std::size_t donor_clause_count, std::size_t target_width);

// Seeded-random surjection for property tests: uniform positions with a
// random injection patched in so surjectivity always holds.
Surjection random_surjection(std::size_t donor_clause_count, std::size_t target_width,
                             std::mt19937& rng);

// The alternating-cycle 2-SAT family: variables y_1..y_2l with clauses
// (y_i v y_{i+1}) and (~y_i v ~y_{i+1}) for i = 1..2l-1, closed by
// (y_1 v ~y_2l) and (~y_1 v y_2l). 2l variables, 4l clauses, minimal
// unsatisfiable. Emission order: the pair per i ascending, then the two
// closing clauses.
CnfFormula gen_f2(unsigned l);

// The three-block family: variables x_1..x_6m split into three blocks of 2m,
// every positive clause picking one variable per block, plus one all-negative
// clause per block. (2m)^3 + 3 clauses. Equivalent to gen_f0_ksat(3, 2m).
CnfFormula gen_f0_3sat(unsigned m);

// k blocks of m variables; all m^k positive clauses with one variable per
// block (lexicographic emission order) followed by the k all-negative block
// clauses. m^k + k clauses; a genuine k-SAT formula when m == k.
CnfFormula gen_f0_ksat(unsigned k, unsigned m);

// Replaces clause c0 = fx.clauses()[c0_index] by one clause c_y v h(c_y) per
// donor clause c_y. The donor is renamed onto fresh variables internally
// (offset fx.num_vars()), so callers pass fy in its own 1-based namespace.
// Preserves minimal unsatisfiability when both inputs are MU.
// Throws BadIndex, WidthExceedsDonor (width(c0) > |fy clauses|), NotSurjective.
CnfFormula splice(const CnfFormula& fx, std::size_t c0_index, const CnfFormula& fy,
                  const Surjection& h);

struct FormulaCounts {
    std::uint64_t vars = 0;
    std::uint64_t clauses = 0;

    friend bool operator==(const FormulaCounts&, const FormulaCounts&) = default;
};

struct ConstructionReport {
    CnfFormula formula;
    std::string family;
    unsigned k = 0;
    unsigned m = 0;
    // Closed-form counts, asserted equal to the carried formula's actuals.
    FormulaCounts predicted;
};

// Closed-form (vars, clauses) for build_extremal_ksat(k, m), computed without
// generating anything. Same parameter domain as the builder.
FormulaCounts predicted_counts(unsigned k, unsigned m);

// Splices a fresh 2-SAT donor (m variables, 2m clauses) onto each of the
// three all-negative clauses of gen_f0_3sat(m). Result: 9m variables,
// 8m^3 + 6m clauses, every clause width 3, minimal unsatisfiable.
// m must be even and >= 2 (the 2-SAT family only exists on even variable
// counts). Pass an rng to draw the three surjections at random instead of
// round-robin; the construction is MU either way.
ConstructionReport build_extremal_3sat(unsigned m, std::mt19937* rng = nullptr);

// k = 2 delegates to gen_f2(max(1, ceil(m/2))), k = 3 to build_extremal_3sat.
// For k >= 4, each all-negative m-clause of gen_f0_ksat(k, m) is spliced with
// a (k-1)-SAT MU donor: gen_f0_ksat(k-1, k-1) when it has at least m clauses,
// otherwise the smallest build_extremal_ksat(k-1, m') with clause count >= m.
ConstructionReport build_extremal_ksat(unsigned k, unsigned m, std::mt19937* rng = nullptr);

} // namespace mugen

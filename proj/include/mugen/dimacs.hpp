#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "mugen/cnf.hpp"

namespace mugen {

// DIMACS CNF: "p cnf <vars> <clauses>" header, whitespace-separated signed
// literals, every clause terminated by 0, comment lines starting with 'c'.
// Clauses may span lines. Duplicate literals are dropped and tautological
// clauses kept (flagged on the Clause).
//
// Throws SyntaxError (with line number) on malformed input and HeaderMismatch
// when the declared counts disagree with the body.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

// One clause per line, literals sorted, trailing newline. parse(emit(f)) == f.
void emit_dimacs(const CnfFormula& f, std::ostream& out);
std::string emit_dimacs(const CnfFormula& f);

} // namespace mugen

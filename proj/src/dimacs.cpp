#include "mugen/dimacs.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mugen {

namespace {

bool blank(const std::string& line)
{
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

char first_char(const std::string& line)
{
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return ch;
    return '\0';
}

} // namespace

CnfFormula parse_dimacs(std::istream& in)
{
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long declared_vars = 0;
    long declared_clauses = 0;

    std::vector<Clause> clauses;
    std::vector<Literal> current;
    bool clause_open = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        char lead = first_char(line);
        if (lead == 'c')
            continue;
        if (lead == 'p') {
            if (have_header)
                throw SyntaxError("duplicate header", lineno);
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> declared_vars >> declared_clauses) ||
                p != "p" || fmt != "cnf")
                throw SyntaxError("malformed header, expected 'p cnf <vars> <clauses>'", lineno);
            if (declared_vars < 0 || declared_clauses < 0)
                throw SyntaxError("negative count in header", lineno);
            constexpr long kMaxCount = 1L << 31;
            if (declared_vars > kMaxCount || declared_clauses > kMaxCount)
                throw SyntaxError("header count too large", lineno);
            std::string extra;
            if (hs >> extra)
                throw SyntaxError("trailing tokens after header", lineno);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw SyntaxError("clause data before header", lineno);

        std::istringstream ls(line);
        long value;
        while (ls >> value) {
            if (value == 0) {
                if (current.empty())
                    throw SyntaxError("empty clause", lineno);
                clauses.push_back(make_clause(std::move(current)));
                current.clear();
                clause_open = false;
                continue;
            }
            long var = value < 0 ? -value : value;
            if (var > declared_vars)
                throw HeaderMismatch("line " + std::to_string(lineno) + ": literal " +
                                     std::to_string(value) + " exceeds declared " +
                                     std::to_string(declared_vars) + " variables");
            current.push_back(Literal{static_cast<unsigned>(var), value < 0});
            clause_open = true;
        }
        if (!ls.eof())
            throw SyntaxError("unexpected token", lineno);
    }

    if (!have_header)
        throw SyntaxError("missing header", lineno == 0 ? 1 : lineno);
    if (clause_open)
        throw SyntaxError("unterminated clause at end of input", lineno);
    if (static_cast<long>(clauses.size()) != declared_clauses)
        throw HeaderMismatch("header declares " + std::to_string(declared_clauses) +
                             " clauses, body has " + std::to_string(clauses.size()));

    return CnfFormula(static_cast<unsigned>(declared_vars), std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

void emit_dimacs(const CnfFormula& f, std::ostream& out)
{
    out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (const Clause& c : f.clauses()) {
        for (Literal lit : c.literals())
            out << to_dimacs(lit) << ' ';
        out << "0\n";
    }
}

std::string emit_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    emit_dimacs(f, out);
    return out.str();
}

} // namespace mugen

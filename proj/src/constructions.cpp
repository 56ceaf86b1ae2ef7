#include "mugen/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mugen {

namespace {

// Hard limit for in-memory generation; the closed-form count arithmetic is
// not restricted by it.
constexpr std::uint64_t kMaxGeneratedClauses = std::uint64_t{1} << 24;

std::uint64_t checked_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            throw InvalidParameter("clause count overflows 64-bit arithmetic");
        result *= base;
    }
    return result;
}

} // namespace

Surjection default_surjection(std::size_t donor_clause_count, std::size_t target_width)
{
    if (target_width == 0)
        throw InvalidParameter("surjection target width must be >= 1");
    if (donor_clause_count < target_width)
        throw InvalidParameter("no surjection from " + std::to_string(donor_clause_count) +
                               " donor clauses onto " + std::to_string(target_width) +
                               " literals");
    Surjection h;
    h.assignment.resize(donor_clause_count);
    for (std::size_t j = 0; j < donor_clause_count; ++j)
        h.assignment[j] = static_cast<unsigned>(j % target_width);
    return h;
}

Surjection random_surjection(std::size_t donor_clause_count, std::size_t target_width,
                             std::mt19937& rng)
{
    if (target_width == 0)
        throw InvalidParameter("surjection target width must be >= 1");
    if (donor_clause_count < target_width)
        throw InvalidParameter("no surjection from " + std::to_string(donor_clause_count) +
                               " donor clauses onto " + std::to_string(target_width) +
                               " literals");
    Surjection h;
    h.assignment.resize(donor_clause_count);
    std::uniform_int_distribution<unsigned> dist(0, static_cast<unsigned>(target_width) - 1);
    for (auto& v : h.assignment)
        v = dist(rng);

    // Patch a random injection over distinct donor positions so that every
    // target position keeps at least one preimage.
    std::vector<std::size_t> positions(donor_clause_count);
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<unsigned> targets(target_width);
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t t = 0; t < target_width; ++t)
        h.assignment[positions[t]] = targets[t];
    return h;
}

CnfFormula gen_f2(unsigned l)
{
    if (l == 0)
        throw InvalidParameter("f2 family requires l >= 1");
    const unsigned n = 2 * l;
    std::vector<Clause> clauses;
    clauses.reserve(std::size_t{4} * l);
    for (unsigned i = 1; i < n; ++i) {
        clauses.push_back(make_clause({pos(i), pos(i + 1)}));
        clauses.push_back(make_clause({neg(i), neg(i + 1)}));
    }
    clauses.push_back(make_clause({pos(1), neg(n)}));
    clauses.push_back(make_clause({neg(1), pos(n)}));
    return CnfFormula(n, std::move(clauses));
}

CnfFormula gen_f0_3sat(unsigned m)
{
    if (m == 0)
        throw InvalidParameter("f0 family requires m >= 1");
    return gen_f0_ksat(3, 2 * m);
}

CnfFormula gen_f0_ksat(unsigned k, unsigned m)
{
    if (k < 2)
        throw InvalidParameter("block family requires k >= 2");
    if (m == 0)
        throw InvalidParameter("block family requires m >= 1");

    const std::uint64_t positives = checked_pow(m, k);
    if (positives + k > kMaxGeneratedClauses)
        throw InvalidParameter("k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                               " would generate " + std::to_string(positives + k) +
                               " clauses; in-memory limit is " +
                               std::to_string(kMaxGeneratedClauses));
    const unsigned n = k * m;

    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(positives) + k);

    // Odometer over (i_1, ..., i_k), one index per block, lexicographic.
    std::vector<unsigned> digit(k, 0);
    std::vector<Literal> lits(k);
    while (true) {
        for (unsigned t = 0; t < k; ++t)
            lits[t] = pos(t * m + digit[t] + 1);
        clauses.push_back(make_clause(lits));
        unsigned t = k;
        while (t > 0 && ++digit[t - 1] == m)
            digit[--t] = 0;
        if (t == 0)
            break;
    }

    for (unsigned s = 0; s < k; ++s) {
        std::vector<Literal> block(m);
        for (unsigned i = 0; i < m; ++i)
            block[i] = neg(s * m + i + 1);
        clauses.push_back(make_clause(std::move(block)));
    }
    return CnfFormula(n, std::move(clauses));
}

CnfFormula splice(const CnfFormula& fx, std::size_t c0_index, const CnfFormula& fy,
                  const Surjection& h)
{
    if (c0_index >= fx.num_clauses())
        throw BadIndex("clause index " + std::to_string(c0_index) +
                       " out of range, formula has " + std::to_string(fx.num_clauses()) +
                       " clauses");
    const Clause& c0 = fx.clauses()[c0_index];
    const std::size_t width = c0.width();
    if (width > fy.num_clauses())
        throw WidthExceedsDonor("replaced clause has width " + std::to_string(width) +
                                " but the donor only has " +
                                std::to_string(fy.num_clauses()) + " clauses");
    if (h.assignment.size() != fy.num_clauses())
        throw NotSurjective("surjection covers " + std::to_string(h.assignment.size()) +
                            " donor clauses, donor has " +
                            std::to_string(fy.num_clauses()));
    std::vector<char> covered(width, 0);
    for (unsigned t : h.assignment) {
        if (t >= width)
            throw NotSurjective("surjection maps to literal position " + std::to_string(t) +
                                ", replaced clause has width " + std::to_string(width));
        covered[t] = 1;
    }
    for (std::size_t t = 0; t < width; ++t)
        if (!covered[t])
            throw NotSurjective("literal position " + std::to_string(t) +
                                " of the replaced clause has no preimage");

    const CnfFormula donor = rename_variables(fy, fx.num_vars());

    std::vector<Clause> out;
    out.reserve(fx.num_clauses() - 1 + donor.num_clauses());
    for (std::size_t i = 0; i < fx.num_clauses(); ++i)
        if (i != c0_index)
            out.push_back(fx.clauses()[i]);
    for (std::size_t j = 0; j < donor.num_clauses(); ++j) {
        std::vector<Literal> lits = donor.clauses()[j].literals();
        lits.push_back(c0.literals()[h.assignment[j]]);
        out.push_back(make_clause(std::move(lits)));
    }
    return CnfFormula(fx.num_vars() + fy.num_vars(), std::move(out));
}

namespace {

// Donor choice for the general-k build: the smallest family member that is a
// genuine (sub_k)-SAT MU formula with at least `need` clauses.
struct DonorSpec {
    enum class Kind { TwoSatFamily, Block, Extremal } kind;
    unsigned sub_k = 0;
    unsigned param = 0; // l for TwoSatFamily, m for the others
};

FormulaCounts donor_counts(const DonorSpec& d);

DonorSpec donor_spec(unsigned sub_k, std::uint64_t need)
{
    if (sub_k == 2) {
        const std::uint64_t l = std::max<std::uint64_t>(1, (need + 3) / 4);
        return {DonorSpec::Kind::TwoSatFamily, 2, static_cast<unsigned>(l)};
    }
    if (checked_pow(sub_k, sub_k) + sub_k >= need)
        return {DonorSpec::Kind::Block, sub_k, sub_k};
    unsigned mp = sub_k == 3 ? 2 : 1;
    const unsigned step = sub_k == 3 ? 2 : 1;
    while (predicted_counts(sub_k, mp).clauses < need)
        mp += step;
    return {DonorSpec::Kind::Extremal, sub_k, mp};
}

FormulaCounts donor_counts(const DonorSpec& d)
{
    switch (d.kind) {
    case DonorSpec::Kind::TwoSatFamily:
        return {std::uint64_t{2} * d.param, std::uint64_t{4} * d.param};
    case DonorSpec::Kind::Block:
        return {std::uint64_t{d.sub_k} * d.sub_k, checked_pow(d.sub_k, d.sub_k) + d.sub_k};
    case DonorSpec::Kind::Extremal:
        return predicted_counts(d.sub_k, d.param);
    }
    throw std::logic_error("unreachable");
}

CnfFormula donor_formula(const DonorSpec& d, std::mt19937* rng)
{
    switch (d.kind) {
    case DonorSpec::Kind::TwoSatFamily:
        return gen_f2(d.param);
    case DonorSpec::Kind::Block:
        return gen_f0_ksat(d.sub_k, d.sub_k);
    case DonorSpec::Kind::Extremal:
        return build_extremal_ksat(d.sub_k, d.param, rng).formula;
    }
    throw std::logic_error("unreachable");
}

void check_report(const ConstructionReport& report)
{
    if (report.formula.num_vars() != report.predicted.vars ||
        report.formula.num_clauses() != report.predicted.clauses)
        throw std::logic_error("internal error: generated (" +
                               std::to_string(report.formula.num_vars()) + " vars, " +
                               std::to_string(report.formula.num_clauses()) +
                               " clauses) does not match predicted (" +
                               std::to_string(report.predicted.vars) + ", " +
                               std::to_string(report.predicted.clauses) + ")");
}

} // namespace

FormulaCounts predicted_counts(unsigned k, unsigned m)
{
    if (k < 2)
        throw InvalidParameter("extremal family requires k >= 2");
    if (m == 0)
        throw InvalidParameter("extremal family requires m >= 1");
    if (k == 2) {
        const std::uint64_t l = std::max<unsigned>(1, (m + 1) / 2);
        return {2 * l, 4 * l};
    }
    if (k == 3) {
        if (m % 2 != 0)
            throw InvalidParameter("m must be even for extremal k=3");
        const std::uint64_t mm = m;
        return {9 * mm, 8 * mm * mm * mm + 6 * mm};
    }
    const DonorSpec d = donor_spec(k - 1, m);
    const FormulaCounts dc = donor_counts(d);
    return {std::uint64_t{k} * m + k * dc.vars, checked_pow(m, k) + k * dc.clauses};
}

ConstructionReport build_extremal_3sat(unsigned m, std::mt19937* rng)
{
    if (m == 0 || m % 2 != 0)
        throw InvalidParameter("m must be even for extremal k=3");

    CnfFormula f = gen_f0_3sat(m);
    // The three all-negative clauses sit right after the (2m)^3 positive
    // ones; each splice consumes the one at this index and appends its
    // derived clauses at the end, so the next target stays put.
    const std::size_t first_negative =
        static_cast<std::size_t>(checked_pow(2 * std::uint64_t{m}, 3));
    const std::size_t block_width = 2 * std::size_t{m};
    for (int s = 0; s < 3; ++s) {
        const CnfFormula donor = gen_f2(m / 2); // m variables, 2m clauses
        const Surjection h = rng
            ? random_surjection(donor.num_clauses(), block_width, *rng)
            : default_surjection(donor.num_clauses(), block_width);
        f = splice(f, first_negative, donor, h);
    }

    ConstructionReport report{std::move(f), "extremal", 3, m, predicted_counts(3, m)};
    check_report(report);
    return report;
}

ConstructionReport build_extremal_ksat(unsigned k, unsigned m, std::mt19937* rng)
{
    if (k < 2)
        throw InvalidParameter("extremal family requires k >= 2");
    if (m == 0)
        throw InvalidParameter("extremal family requires m >= 1");

    if (k == 2) {
        ConstructionReport report{gen_f2(std::max<unsigned>(1, (m + 1) / 2)),
                                  "extremal", 2, m, predicted_counts(2, m)};
        check_report(report);
        return report;
    }
    if (k == 3)
        return build_extremal_3sat(m, rng);

    CnfFormula f = gen_f0_ksat(k, m);
    const std::size_t first_negative = static_cast<std::size_t>(checked_pow(m, k));
    const DonorSpec d = donor_spec(k - 1, m);
    for (unsigned s = 0; s < k; ++s) {
        const CnfFormula donor = donor_formula(d, rng);
        const Surjection h = rng ? random_surjection(donor.num_clauses(), m, *rng)
                                 : default_surjection(donor.num_clauses(), m);
        f = splice(f, first_negative, donor, h);
    }

    ConstructionReport report{std::move(f), "extremal", k, m, predicted_counts(k, m)};
    check_report(report);
    return report;
}

} // namespace mugen

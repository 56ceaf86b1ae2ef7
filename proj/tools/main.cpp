// mugen: generate extremal minimal unsatisfiable CNF families, verify
// satisfiability / minimal unsatisfiability, shrink unsat cores, and report
// formula statistics. DIMACS in, DIMACS out.
//
// Exit codes: 0 property holds, 1 property fails, 2 usage or parse error,
// 3 unknown (solver budget exceeded).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mugen/constructions.hpp"
#include "mugen/dimacs.hpp"
#include "mugen/mu_verify.hpp"
#include "mugen/solve.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct StatsRecord {
    std::string family;
    std::optional<unsigned> k, m, l;
    unsigned vars = 0;
    std::size_t clauses = 0;
    std::map<std::size_t, std::size_t> widths;
    std::optional<double> density; // clauses / vars^k, k = family k or max width
    std::optional<std::string> mu;
    std::optional<std::size_t> removable_clause;
    std::vector<std::pair<std::string, double>> phases_ms;
};

void fill_shape(StatsRecord& rec, const mugen::CnfFormula& f)
{
    rec.vars = f.num_vars();
    rec.clauses = f.num_clauses();
    for (const auto& c : f.clauses())
        ++rec.widths[c.width()];
    unsigned k = rec.k ? *rec.k : 0;
    if (k == 0 && !rec.widths.empty())
        k = static_cast<unsigned>(rec.widths.rbegin()->first);
    if (k > 0 && rec.vars > 0 && rec.clauses > 0) {
        double denom = 1.0;
        for (unsigned i = 0; i < k; ++i)
            denom *= rec.vars;
        rec.density = static_cast<double>(rec.clauses) / denom;
    }
}

std::string to_kv(const StatsRecord& rec)
{
    std::ostringstream out;
    out << "family=" << rec.family;
    if (rec.k)
        out << " k=" << *rec.k;
    if (rec.m)
        out << " m=" << *rec.m;
    if (rec.l)
        out << " l=" << *rec.l;
    out << " vars=" << rec.vars << " clauses=" << rec.clauses;
    out << " widths=";
    if (rec.widths.empty()) {
        out << "none";
    } else {
        bool first = true;
        for (const auto& [w, count] : rec.widths) {
            out << (first ? "" : ",") << w << ':' << count;
            first = false;
        }
    }
    if (rec.density)
        out << " density=" << *rec.density;
    if (rec.mu)
        out << " mu=" << *rec.mu;
    if (rec.removable_clause)
        out << " removable_clause=" << *rec.removable_clause;
    for (const auto& [name, ms] : rec.phases_ms)
        out << ' ' << name << "_ms=" << ms;
    return out.str();
}

nlohmann::ordered_json to_json(const StatsRecord& rec)
{
    nlohmann::ordered_json j;
    j["family"] = rec.family;
    if (rec.k)
        j["k"] = *rec.k;
    if (rec.m)
        j["m"] = *rec.m;
    if (rec.l)
        j["l"] = *rec.l;
    j["vars"] = rec.vars;
    j["clauses"] = rec.clauses;
    j["widths"] = nlohmann::ordered_json::object();
    for (const auto& [w, count] : rec.widths)
        j["widths"][std::to_string(w)] = count;
    if (rec.density)
        j["density"] = *rec.density;
    if (rec.mu)
        j["mu"] = *rec.mu;
    if (rec.removable_clause)
        j["removable_clause"] = *rec.removable_clause;
    for (const auto& [name, ms] : rec.phases_ms)
        j["phases_ms"][name] = ms;
    return j;
}

void print_record(const StatsRecord& rec, bool as_json, std::ostream& out)
{
    if (as_json)
        out << to_json(rec).dump() << '\n';
    else
        out << to_kv(rec) << '\n';
}

mugen::CnfFormula read_formula(const std::string& in_path)
{
    if (in_path == "-")
        return mugen::parse_dimacs(std::cin);
    std::ifstream in(in_path);
    if (!in)
        throw mugen::Error("cannot open '" + in_path + "'");
    return mugen::parse_dimacs(in);
}

std::string witness_line(const mugen::Assignment& a)
{
    std::ostringstream out;
    out << 'v';
    for (unsigned v = 1; v <= a.num_vars(); ++v)
        out << ' ' << (a.value(v) ? static_cast<long>(v) : -static_cast<long>(v));
    out << " 0";
    return out.str();
}

const char* verdict_name(mugen::MuVerdict::Kind kind)
{
    switch (kind) {
    case mugen::MuVerdict::Kind::MinimalUnsatisfiable: return "minimal-unsatisfiable";
    case mugen::MuVerdict::Kind::Satisfiable: return "satisfiable";
    case mugen::MuVerdict::Kind::NotMinimal: return "not-minimal";
    case mugen::MuVerdict::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

mugen::SolverChoice parse_solver(const std::string& name)
{
    if (name == "brute")
        return mugen::SolverChoice::BruteForce;
    if (name == "dpll")
        return mugen::SolverChoice::Dpll;
    return mugen::SolverChoice::Auto;
}

struct GenerateArgs {
    std::string family;
    unsigned l = 0, m = 0, k = 0;
    bool has_l = false, has_m = false, has_k = false;
    std::string surjection = "round-robin";
    unsigned seed = 1;
    std::string out_path;
    bool json = false;
};

int run_generate(const GenerateArgs& args)
{
    auto need = [&](bool present, const char* flag) {
        if (!present)
            throw mugen::InvalidParameter("family " + args.family + " requires " + flag);
    };

    std::mt19937 rng(args.seed);
    std::mt19937* rng_ptr = args.surjection == "random" ? &rng : nullptr;

    StatsRecord rec;
    rec.family = args.family;
    const auto t0 = Clock::now();
    mugen::CnfFormula formula;
    if (args.family == "f2") {
        need(args.has_l, "--l");
        rec.l = args.l;
        formula = mugen::gen_f2(args.l);
    } else if (args.family == "f0") {
        need(args.has_m, "--m");
        rec.m = args.m;
        rec.k = 3;
        formula = mugen::gen_f0_3sat(args.m);
    } else if (args.family == "f0k") {
        need(args.has_k, "--k");
        need(args.has_m, "--m");
        rec.k = args.k;
        rec.m = args.m;
        formula = mugen::gen_f0_ksat(args.k, args.m);
    } else { // extremal
        need(args.has_k, "--k");
        need(args.has_m, "--m");
        rec.k = args.k;
        rec.m = args.m;
        formula = mugen::build_extremal_ksat(args.k, args.m, rng_ptr).formula;
    }
    rec.phases_ms.emplace_back("generate", ms_since(t0));
    fill_shape(rec, formula);

    const auto t1 = Clock::now();
    if (args.out_path.empty() || args.out_path == "-") {
        mugen::emit_dimacs(formula, std::cout);
        rec.phases_ms.emplace_back("write", ms_since(t1));
        print_record(rec, args.json, std::cerr); // keep stdout clean DIMACS
    } else {
        std::ofstream out(args.out_path);
        if (!out)
            throw mugen::Error("cannot open '" + args.out_path + "' for writing");
        mugen::emit_dimacs(formula, out);
        rec.phases_ms.emplace_back("write", ms_since(t1));
        print_record(rec, args.json, std::cout);
    }
    return 0;
}

struct SolveArgs {
    std::string in_path = "-";
    std::string solver = "auto";
    std::string mode = "mu";
    double timeout_secs = 10.0;
    bool json = false;
    std::string out_path; // shrink only
    bool with_mu = false; // stats only
};

mugen::VerifyOptions verify_options(const SolveArgs& args)
{
    if (args.timeout_secs < 0.0)
        throw mugen::InvalidParameter("--timeout-secs must be non-negative");
    mugen::VerifyOptions opts;
    opts.solver = parse_solver(args.solver);
    opts.per_call_budget = std::chrono::milliseconds(
        static_cast<long long>(args.timeout_secs * 1000.0));
    return opts;
}

int run_verify(const SolveArgs& args)
{
    const auto t0 = Clock::now();
    const mugen::CnfFormula f = read_formula(args.in_path);
    const double parse_ms = ms_since(t0);
    const mugen::VerifyOptions opts = verify_options(args);

    StatsRecord rec;
    rec.family = "file";
    fill_shape(rec, f);
    rec.phases_ms.emplace_back("parse", parse_ms);

    if (args.mode == "sat") {
        const auto t1 = Clock::now();
        mugen::SolverLimits limits{opts.brute_force_var_cap, opts.per_call_budget};
        try {
            const mugen::SatResult r =
                (opts.solver == mugen::SolverChoice::BruteForce ||
                 (opts.solver == mugen::SolverChoice::Auto &&
                  f.num_vars() <= opts.brute_force_var_cap))
                    ? mugen::brute_force_sat(f, limits)
                    : mugen::dpll_sat(f, limits);
            rec.phases_ms.emplace_back("solve", ms_since(t1));
            rec.mu = r.is_sat() ? "satisfiable" : "unsatisfiable";
            print_record(rec, args.json, std::cout);
            if (r.is_sat())
                std::cout << witness_line(*r.witness) << '\n';
            return r.is_sat() ? 0 : 1;
        } catch (const mugen::SolverTimeout&) {
            std::cout << "unknown: solver budget exceeded\n";
            return 3;
        }
    }

    const auto t1 = Clock::now();
    const mugen::MuVerdict verdict = mugen::is_minimal_unsatisfiable(f, opts);
    rec.phases_ms.emplace_back("verify", ms_since(t1));
    rec.mu = verdict_name(verdict.kind);
    rec.removable_clause = verdict.removable_index;
    print_record(rec, args.json, std::cout);
    if (verdict.witness)
        std::cout << witness_line(*verdict.witness) << '\n';

    switch (verdict.kind) {
    case mugen::MuVerdict::Kind::MinimalUnsatisfiable: return 0;
    case mugen::MuVerdict::Kind::Unknown: return 3;
    default: return 1;
    }
}

int run_shrink(const SolveArgs& args)
{
    const auto t0 = Clock::now();
    const mugen::CnfFormula f = read_formula(args.in_path);
    const double parse_ms = ms_since(t0);
    const mugen::VerifyOptions opts = verify_options(args);

    const auto t1 = Clock::now();
    const mugen::CnfFormula core = mugen::shrink_to_mus(f, opts);

    StatsRecord rec;
    rec.family = "mus";
    fill_shape(rec, core);
    rec.phases_ms.emplace_back("parse", parse_ms);
    rec.phases_ms.emplace_back("shrink", ms_since(t1));

    if (args.out_path.empty() || args.out_path == "-") {
        mugen::emit_dimacs(core, std::cout);
        print_record(rec, args.json, std::cerr);
    } else {
        std::ofstream out(args.out_path);
        if (!out)
            throw mugen::Error("cannot open '" + args.out_path + "' for writing");
        mugen::emit_dimacs(core, out);
        print_record(rec, args.json, std::cout);
    }
    return 0;
}

int run_stats(const SolveArgs& args)
{
    const auto t0 = Clock::now();
    const mugen::CnfFormula f = read_formula(args.in_path);
    const double parse_ms = ms_since(t0);

    StatsRecord rec;
    rec.family = "file";
    fill_shape(rec, f);
    rec.phases_ms.emplace_back("parse", parse_ms);

    int code = 0;
    if (args.with_mu) {
        const auto t1 = Clock::now();
        const mugen::MuVerdict verdict = mugen::is_minimal_unsatisfiable(f, verify_options(args));
        rec.phases_ms.emplace_back("verify", ms_since(t1));
        rec.mu = verdict_name(verdict.kind);
        rec.removable_clause = verdict.removable_index;
        switch (verdict.kind) {
        case mugen::MuVerdict::Kind::MinimalUnsatisfiable: code = 0; break;
        case mugen::MuVerdict::Kind::Unknown: code = 3; break;
        default: code = 1; break;
        }
    }
    print_record(rec, args.json, std::cout);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"generator and verifier for minimal unsatisfiable CNF formulas"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "emit a formula family as DIMACS");
    gen->add_option("--family", gen_args.family, "f2 | f0 | f0k | extremal")
        ->required()
        ->check(CLI::IsMember({"f2", "f0", "f0k", "extremal"}));
    gen->add_option("--l", gen_args.l, "cycle length parameter (f2)")
        ->each([&](const std::string&) { gen_args.has_l = true; });
    gen->add_option("--m", gen_args.m, "block size parameter (f0, f0k, extremal)")
        ->each([&](const std::string&) { gen_args.has_m = true; });
    gen->add_option("--k", gen_args.k, "clause width (f0k, extremal)")
        ->each([&](const std::string&) { gen_args.has_k = true; });
    gen->add_option("--surjection", gen_args.surjection,
                    "round-robin (default, deterministic) or random")
        ->check(CLI::IsMember({"round-robin", "random"}));
    gen->add_option("--seed", gen_args.seed, "seed for --surjection random (default 1)");
    gen->add_option("--out", gen_args.out_path, "output path (default: standard output)");
    gen->add_flag("--json", gen_args.json, "emit the stats record as JSON");

    SolveArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check satisfiability or minimal unsatisfiability");
    verify->add_option("in_path", verify_args.in_path, "DIMACS file, or - for stdin");
    verify->add_option("--solver", verify_args.solver, "brute | dpll | auto (default auto)")
        ->check(CLI::IsMember({"brute", "dpll", "auto"}));
    verify->add_option("--mode", verify_args.mode, "sat | mu (default mu)")
        ->check(CLI::IsMember({"sat", "mu"}));
    verify->add_option("--timeout-secs", verify_args.timeout_secs,
                       "budget per solver call (default 10)");
    verify->add_flag("--json", verify_args.json, "emit the stats record as JSON");

    SolveArgs shrink_args;
    auto* shrink = app.add_subcommand("shrink", "extract a minimal unsatisfiable core");
    shrink->add_option("in_path", shrink_args.in_path, "DIMACS file, or - for stdin");
    shrink->add_option("--out", shrink_args.out_path, "output path (default: standard output)");
    shrink->add_option("--solver", shrink_args.solver, "brute | dpll | auto (default auto)")
        ->check(CLI::IsMember({"brute", "dpll", "auto"}));
    shrink->add_option("--timeout-secs", shrink_args.timeout_secs,
                       "budget per solver call (default 10)");
    shrink->add_flag("--json", shrink_args.json, "emit the stats record as JSON");

    SolveArgs stats_args;
    auto* stats = app.add_subcommand("stats", "report formula statistics");
    stats->add_option("in_path", stats_args.in_path, "DIMACS file, or - for stdin");
    stats->add_flag("--mu", stats_args.with_mu, "also verify minimal unsatisfiability");
    stats->add_option("--solver", stats_args.solver, "brute | dpll | auto (default auto)")
        ->check(CLI::IsMember({"brute", "dpll", "auto"}));
    stats->add_option("--timeout-secs", stats_args.timeout_secs,
                      "budget per solver call (default 10)");
    stats->add_flag("--json", stats_args.json, "emit the stats record as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return run_generate(gen_args);
        if (*verify)
            return run_verify(verify_args);
        if (*shrink)
            return run_shrink(shrink_args);
        return run_stats(stats_args);
    } catch (const mugen::InputSatisfiable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const mugen::SolverTimeout& e) {
        std::cerr << "unknown: " << e.what() << '\n';
        return 3;
    } catch (const mugen::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}

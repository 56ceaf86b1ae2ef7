#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end tests against the built CLI binary (path injected by CMake).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "mugen/constructions.hpp"
#include "mugen/dimacs.hpp"

namespace fs = std::filesystem;
using namespace mugen;

namespace {

struct CmdResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& content)
{
    std::ofstream out(p, std::ios::binary);
    out << content;
}

fs::path temp_path(const std::string& tag)
{
    static int counter = 0;
    return fs::temp_directory_path() /
           ("mugen_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

CmdResult run_cli(const std::string& args, const std::string& stdin_path = "")
{
    const fs::path out = temp_path("stdout");
    const fs::path err = temp_path("stderr");
    std::string cmd = std::string(MUGEN_CLI_PATH) + " " + args;
    if (!stdin_path.empty())
        cmd += " < " + stdin_path;
    cmd += " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

Assignment parse_witness_line(const std::string& output, unsigned num_vars)
{
    const std::size_t at = output.find("\nv ");
    REQUIRE(at != std::string::npos);
    std::istringstream in(output.substr(at + 2));
    Assignment a(num_vars);
    long lit;
    while (in >> lit && lit != 0) {
        REQUIRE(static_cast<unsigned>(std::abs(lit)) <= num_vars);
        a.set(static_cast<unsigned>(std::abs(lit)), lit > 0);
    }
    return a;
}

} // namespace

TEST_CASE("generate writes DIMACS and a stats line")
{
    const fs::path out = temp_path("f2");
    CmdResult r = run_cli("generate --family f2 --l 1 --out " + out.string());
    CHECK(r.code == 0);
    CHECK(slurp(out) == "p cnf 2 4\n1 2 0\n-1 -2 0\n1 -2 0\n-1 2 0\n");
    CHECK(contains(r.out, "family=f2"));
    CHECK(contains(r.out, "vars=2"));
    CHECK(contains(r.out, "clauses=4"));
    fs::remove(out);
}

TEST_CASE("generate to stdout keeps the stats record on stderr")
{
    CmdResult r = run_cli("generate --family f2 --l 2");
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 10) == "p cnf 4 8\n");
    CHECK(contains(r.err, "family=f2"));
}

TEST_CASE("generate extremal k=3 m=2 has the predicted header")
{
    const fs::path out = temp_path("extremal");
    CmdResult r = run_cli("generate --family extremal --k 3 --m 2 --out " + out.string());
    CHECK(r.code == 0);
    const std::string text = slurp(out);
    CHECK(text.substr(0, text.find('\n')) == "p cnf 18 76");
    fs::remove(out);
}

TEST_CASE("generate is byte-identical across two runs")
{
    const fs::path a = temp_path("run_a");
    const fs::path b = temp_path("run_b");
    CHECK(run_cli("generate --family extremal --k 3 --m 2 --out " + a.string()).code == 0);
    CHECK(run_cli("generate --family extremal --k 3 --m 2 --out " + b.string()).code == 0);
    const std::string bytes_a = slurp(a);
    CHECK(bytes_a == slurp(b));
    CHECK(bytes_a == emit_dimacs(build_extremal_3sat(2).formula));
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("generate rejects bad parameters with exit 2")
{
    SUBCASE("odd m for extremal k=3")
    {
        CmdResult r = run_cli("generate --family extremal --k 3 --m 3");
        CHECK(r.code == 2);
        CHECK(contains(r.err, "even"));
    }
    SUBCASE("missing family parameter")
    {
        CmdResult r = run_cli("generate --family f2");
        CHECK(r.code == 2);
        CHECK(contains(r.err, "--l"));
    }
    SUBCASE("unknown family")
    {
        CHECK(run_cli("generate --family pigeon --l 1").code == 2);
    }
    SUBCASE("zero l")
    {
        CHECK(run_cli("generate --family f2 --l 0").code == 2);
    }
}

TEST_CASE("generate --surjection random is seed-deterministic")
{
    const fs::path a = temp_path("seed_a");
    const fs::path b = temp_path("seed_b");
    const fs::path c = temp_path("seed_c");
    const std::string base = "generate --family extremal --k 3 --m 2 --surjection random ";
    CHECK(run_cli(base + "--seed 7 --out " + a.string()).code == 0);
    CHECK(run_cli(base + "--seed 7 --out " + b.string()).code == 0);
    CHECK(run_cli(base + "--seed 8 --out " + c.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
    fs::remove(a);
    fs::remove(b);
    fs::remove(c);
}

TEST_CASE("verify --mode mu")
{
    const fs::path f0 = temp_path("f0");
    spit(f0, emit_dimacs(gen_f0_3sat(1)));

    SUBCASE("minimal unsatisfiable input exits 0")
    {
        CmdResult r = run_cli("verify --mode mu " + f0.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "mu=minimal-unsatisfiable"));
    }
    SUBCASE("a removable clause exits 1 and is reported")
    {
        std::vector<Clause> clauses = gen_f0_3sat(1).clauses();
        clauses.push_back(clauses[0]);
        const fs::path dup = temp_path("dup");
        spit(dup, emit_dimacs(CnfFormula(6, clauses)));
        CmdResult r = run_cli("verify --mode mu " + dup.string());
        CHECK(r.code == 1);
        CHECK(contains(r.out, "mu=not-minimal"));
        CHECK(contains(r.out, "removable_clause=0"));
        fs::remove(dup);
    }
    SUBCASE("satisfiable input exits 1 with a witness")
    {
        const fs::path sat = temp_path("sat");
        spit(sat, "p cnf 2 1\n1 -2 0\n");
        CmdResult r = run_cli("verify --mode mu " + sat.string());
        CHECK(r.code == 1);
        CHECK(contains(r.out, "mu=satisfiable"));
        CHECK(contains(r.out, "\nv "));
        fs::remove(sat);
    }
    SUBCASE("zero budget exits 3")
    {
        CHECK(run_cli("verify --mode mu --timeout-secs 0 " + f0.string()).code == 3);
    }
    SUBCASE("json record carries the verdict")
    {
        CmdResult r = run_cli("verify --mode mu --json " + f0.string());
        CHECK(r.code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
        CHECK(j.at("mu") == "minimal-unsatisfiable");
        CHECK(j.at("vars") == 6);
        CHECK(j.at("clauses") == 11);
    }
    fs::remove(f0);
}

TEST_CASE("verify --mode sat")
{
    SUBCASE("deleting one cycle clause leaves a satisfiable formula, witness checks out")
    {
        const CnfFormula f = gen_f2(2).without_clause(0);
        const fs::path path = temp_path("sat_cycle");
        spit(path, emit_dimacs(f));
        CmdResult r = run_cli("verify --mode sat " + path.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "satisfiable"));
        CHECK(evaluate(f, parse_witness_line(r.out, f.num_vars())));
        fs::remove(path);
    }
    SUBCASE("the full cycle family is unsatisfiable, exit 1")
    {
        const fs::path path = temp_path("unsat_cycle");
        spit(path, emit_dimacs(gen_f2(2)));
        CmdResult r = run_cli("verify --mode sat " + path.string());
        CHECK(r.code == 1);
        CHECK(contains(r.out, "unsatisfiable"));
        fs::remove(path);
    }
    SUBCASE("forcing brute force past its cap is a usage error")
    {
        const fs::path path = temp_path("wide");
        spit(path, "p cnf 25 1\n1 0\n");
        CHECK(run_cli("verify --mode sat --solver brute " + path.string()).code == 2);
        CHECK(run_cli("verify --mode sat --solver auto " + path.string()).code == 0);
        fs::remove(path);
    }
}

TEST_CASE("verify rejects malformed input with exit 2")
{
    const fs::path bad = temp_path("bad");
    spit(bad, "p cnf 2 2\n1 0\n");
    CmdResult r = run_cli("verify " + bad.string());
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error"));
    fs::remove(bad);

    const fs::path junk = temp_path("junk");
    spit(junk, "not dimacs at all\n");
    CHECK(run_cli("verify " + junk.string()).code == 2);
    fs::remove(junk);
}

TEST_CASE("shrink extracts a core that verifies as MU")
{
    std::vector<Clause> clauses = gen_f2(2).clauses();
    clauses.push_back(make_clause({pos(5), pos(6)}));
    clauses.push_back(make_clause({neg(6)}));
    const fs::path noisy = temp_path("noisy");
    spit(noisy, emit_dimacs(CnfFormula(6, clauses)));

    const fs::path core = temp_path("core");
    CmdResult r = run_cli("shrink " + noisy.string() + " --out " + core.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "family=mus"));
    CHECK(run_cli("verify --mode mu " + core.string()).code == 0);

    fs::remove(noisy);
    fs::remove(core);
}

TEST_CASE("shrink on satisfiable input exits 1")
{
    const fs::path sat = temp_path("sat_in");
    spit(sat, "p cnf 2 1\n1 2 0\n");
    CmdResult r = run_cli("shrink " + sat.string());
    CHECK(r.code == 1);
    CHECK(contains(r.err, "satisfiable"));
    fs::remove(sat);
}

TEST_CASE("stats")
{
    SUBCASE("extremal k=3 m=4 shape")
    {
        const fs::path path = temp_path("stats_input");
        spit(path, emit_dimacs(build_extremal_3sat(4).formula));
        CmdResult r = run_cli("stats " + path.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "vars=36"));
        CHECK(contains(r.out, "clauses=536"));
        CHECK(contains(r.out, "widths=3:536"));

        CmdResult j = run_cli("stats --json " + path.string());
        const nlohmann::json record = nlohmann::json::parse(j.out);
        CHECK(record.at("vars") == 36);
        CHECK(record.at("clauses") == 536);
        CHECK(record.at("widths").at("3") == 536);
        fs::remove(path);
    }
    SUBCASE("empty clause list")
    {
        const fs::path path = temp_path("empty");
        spit(path, "p cnf 3 0\n");
        CmdResult r = run_cli("stats " + path.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "clauses=0"));
        CHECK(contains(r.out, "widths=none"));
        fs::remove(path);
    }
    SUBCASE("--mu verdict drives the exit code")
    {
        const fs::path path = temp_path("stats_mu");
        spit(path, emit_dimacs(gen_f2(1)));
        CmdResult r = run_cli("stats --mu " + path.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "mu=minimal-unsatisfiable"));
        fs::remove(path);
    }
}

TEST_CASE("generate then verify round-trips to exit 0 across the family matrix")
{
    const char* matrix[] = {
        "--family f2 --l 1",       "--family f2 --l 3",
        "--family f0 --m 1",       "--family f0k --k 3 --m 3",
        "--family f0k --k 2 --m 2", "--family extremal --k 3 --m 2",
    };
    for (const char* params : matrix) {
        CAPTURE(params);
        const fs::path path = temp_path("matrix");
        CHECK(run_cli(std::string("generate ") + params + " --out " + path.string()).code == 0);
        CHECK(run_cli("verify --mode mu " + path.string()).code == 0);
        fs::remove(path);
    }
}

TEST_CASE("reading from standard input via -")
{
    const fs::path path = temp_path("stdin_input");
    spit(path, emit_dimacs(gen_f2(1)));
    CmdResult r = run_cli("verify --mode mu -", path.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mu=minimal-unsatisfiable"));
    fs::remove(path);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("verify --mode maybe x.cnf").code == 2);
    CHECK(run_cli("verify /no/such/file.cnf").code == 2);

    const fs::path path = temp_path("neg_timeout");
    spit(path, emit_dimacs(gen_f2(1)));
    CHECK(run_cli("verify --timeout-secs -1 " + path.string()).code == 2);
    fs::remove(path);
}

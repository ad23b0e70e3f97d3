#include "schubfact/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace schubfact::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "schubfact");
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("wset")
{
    const Result r = invoke({"wset", "--mu", "4,2", "--family", "orthogonal"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "465321\n563421\n643521\n");

    const Result dot = invoke({"wset", "--mu", "1,1", "--dot"});
    CHECK(dot.out == "graph wset {\n  \"21\";\n}\n");

    const Result js = invoke({"wset", "--mu", "4", "--family", "symplectic", "--format", "json"});
    CHECK(js.out == "{\"family\":\"symplectic\",\"mu\":[4],\"members\":[[1,3,4,2],[3,1,2,4]]}\n");
}

TEST_CASE("schubert")
{
    CHECK(invoke({"schubert", "--n", "3", "--perm", "321"}).out == "x1^2 x2\n");
    CHECK(invoke({"schubert", "--perm", "1,3,2"}).out == "x1 + x2\n");
    CHECK(invoke({"schubert", "--n", "4", "--perm", "321"}).code == exit_usage);
    CHECK(invoke({"schubert", "--perm", "3,2"}).code == exit_usage);
}

TEST_CASE("formula and equivariant")
{
    CHECK(invoke({"formula", "--mu", "3,4"}).out == "x1^5 x2^4 x3^4 x4 x5 (x1 + x2) (x4 + x5) (x4 + x6)\n");
    CHECK(invoke({"formula", "--mu", "2", "--expand"}).out == "x1\n");
    const Result e = invoke({"equivariant", "--mu", "2"});
    CHECK(e.code == exit_ok);
    CHECK(e.out == "2 (x1 - z1)\n");
}

TEST_CASE("expand")
{
    CHECK(invoke({"expand", "--mu", "4", "--family", "symplectic"}).out == "1 1342\n1 3124\n");

    const auto good = write_temp("schubfact_cli_good.json",
                                 R"({"space":{"n":3,"s":0,"mu":[]},"terms":[{"exp":[["x1",1]],"coeff":"1"},{"exp":[["x2",1]],"coeff":"1"}]})");
    const Result r = invoke({"expand", "--input", good.string()});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "1 132\n");

    const auto bad = write_temp("schubfact_cli_bad.json",
                                R"({"space":{"n":2,"s":0,"mu":[]},"terms":[{"exp":[["x2",1]],"coeff":"1"}]})");
    const Result nb = invoke({"expand", "--input", bad.string()});
    CHECK(nb.code == exit_failure);
    CHECK(nb.out == "not in Gamma\n");

    CHECK(invoke({"expand", "--input", "/nonexistent/poly.json"}).code == exit_usage);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("verify")
{
    const Result r = invoke({"verify", "--mu", "3,4", "--family", "orthogonal", "--format", "json"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("\"verdict\":\"pass\"") != std::string::npos);
    CHECK(r.out.find("\"ms\"") == std::string::npos);
    CHECK(r.out == invoke({"verify", "--mu", "3,4", "--format", "json"}).out);

    const Result t = invoke({"verify", "--mu", "3,4"});
    CHECK(t.out.rfind("orthogonal identity mu=3,4: pass", 0) == 0);

    const Result eq = invoke({"verify", "--mu", "2,2", "--equivariant"});
    CHECK(eq.code == exit_ok);

    CHECK(invoke({"verify", "--mu", "2", "--format", "json", "--timing"}).out.find("\"ms\"") != std::string::npos);
}

TEST_CASE("sweep")
{
    const Result r = invoke({"sweep", "--n", "4"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("8/8 passed") != std::string::npos);

    const Result s = invoke({"sweep", "--n", "4", "--family", "symplectic"});
    CHECK(s.code == exit_ok);
    CHECK(s.out.find("known discrepancy") != std::string::npos);
    CHECK(s.out.find("2/2 passed") != std::string::npos);

    const Result j1 = invoke({"sweep", "--n", "5", "--format", "json", "--jobs", "3"});
    const Result j2 = invoke({"sweep", "--n", "5", "--format", "json"});
    CHECK(j1.out == j2.out);
    CHECK(invoke({"sweep", "--n", "3", "--family", "symplectic"}).code == exit_usage);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"wset"}).code == exit_usage);
    CHECK(invoke({"wset", "--mu", "3,x"}).code == exit_usage);
    CHECK(invoke({"wset", "--mu", "3", "--family", "unitary"}).code == exit_usage);
    CHECK(invoke({"wset", "--mu", "3", "--family", "symplectic"}).code == exit_usage);
    CHECK(invoke({"wset", "--mu", "3", "--bogus"}).code == exit_usage);
    CHECK(invoke({"verify", "--mu", "5,5"}).code == exit_usage);
    CHECK(invoke({"verify", "--mu", "2,2", "--max-n", "3"}).code == exit_usage);
    CHECK(invoke({"verify", "--mu", "2,2", "--max-n", "4"}).code == exit_ok);
    CHECK(invoke({"frobnicate"}).code == exit_usage);
    const Result e = invoke({"sweep", "--n", "12"});
    CHECK(e.code == exit_usage);
    CHECK(!e.err.empty());
}

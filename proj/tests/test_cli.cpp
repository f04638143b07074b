#include <hyperdiag/cli.hpp>
#include <hyperdiag/io.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace hyperdiag;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("pfq as JSON")
{
    const auto r = run_cli({"pfq", "--top", "2/9,5/9,8/9", "--bottom", "1,2/3", "--scale", "27", "--order", "1", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "[\"1\",\"40/9\"]\n");
}

TEST_CASE("table output is capped at 12 coefficients")
{
    const auto r = run_cli({"diag", "--product", "lin(2)^-1", "--order", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c_11 = 705432") != std::string::npos);
    CHECK(r.out.find("c_12") == std::string::npos);
    CHECK(r.out.find("…") != std::string::npos);

    const auto j = run_cli({"diag", "--product", "lin(2)^-1", "--order", "20", "--json"});
    CHECK(json::parse(j.out).size() == 21);
}

TEST_CASE("reproduce eq10")
{
    const auto r = run_cli({"reproduce", "eq10", "--order", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("classify a weight-screened 3F2")
{
    const auto r = run_cli({"classify", "--pfq", "1/9,4/9,5/9|1,1/3", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["status"] == "transcendental");
    CHECK(j["reason"].get<std::string>().find("weight") != std::string::npos);

    CHECK(run_cli({"classify", "--pfq", "1/9,4/9,5/9|1,1/3", "--expect", "algebraic"}).code == 1);
    CHECK(run_cli({"classify", "--pfq", "1/6,5/6|1/2", "--expect", "algebraic"}).code == 0);
    CHECK(run_cli({"classify", "--product", "lin(1)^{1/2}*lin(2)^-1", "--expect", "algebraic"}).code == 0);
}

TEST_CASE("classify includes a grade-2 decomposition")
{
    const auto r = run_cli({"classify", "--pfq", "2/9,5/9,8/9|1,2/3", "--json"});
    const auto j = json::parse(r.out);
    REQUIRE(j.contains("grade2"));
    CHECK(j["grade2"]["c"] == "1/2");
}

TEST_CASE("builders")
{
    const auto t = json::parse(run_cli({"thm1", "--R", "1/3", "--S", "1", "--n", "2", "--N", "3", "--json"}).out);
    CHECK(t["params"]["scale"] == "27");
    CHECK(t["series"][1] == "40/9");
    CHECK(t["series"].size() == 17);

    const auto g = json::parse(run_cli({"general1", "--b", "0,-1", "--order", "3", "--json"}).out);
    CHECK(g["series"] == json::parse(R"(["1","2","6","20"])"));

    const auto d = json::parse(run_cli({"general2", "--b", "0,0,-1", "--dbl", "2/3", "--order", "1", "--json"}).out);
    CHECK(d["series"] == json::parse(R"(["1","14/9"])"));
}

TEST_CASE("verify, oracle, hadamard and grade2")
{
    CHECK(run_cli({"verify", "--product", "lin(2)^{1/3}*lin(3)^-1", "--order", "12"}).code == 0);
    const auto o = run_cli({"oracle", "--product", "lin(2)^-1", "--order", "4", "--json"});
    CHECK(o.out == "[\"1\",\"2\",\"6\",\"20\",\"70\"]\n");
    CHECK(run_cli({"oracle", "--product", "lin(3)^-1", "--order", "14"}).code == 2);
    CHECK(run_cli({"hadamard", "--lhs", "1/2||4", "--rhs", "1|", "--order", "3", "--json"}).out
          == "[\"1\",\"2\",\"6\",\"20\"]\n");
    CHECK(run_cli({"hadamard", "--lhs", "1/2|", "--rhs", "1/2|", "--expect", "1/2|1"}).code == 1);
    CHECK(run_cli({"grade2", "--pfq", "2/9,5/9,8/9|1,2/3"}).code == 0);
    CHECK(run_cli({"grade2", "--pfq", "1/9,4/9,5/9|1,1/3", "--bound", "12"}).code == 1);
}

TEST_CASE("usage errors exit with 2 and a synopsis")
{
    for (const auto &args : std::vector<std::vector<std::string>>{{"pfq", "--top"},
                                                                 {},
                                                                 {"frobnicate"},
                                                                 {"pfq", "--top", "1/0", "--bottom", ""},
                                                                 {"diag", "--product", "lin(2"},
                                                                 {"reproduce", "nope"},
                                                                 {"reproduce", "eq10", "--arg", "R"},
                                                                 {"thm1", "--S", "0", "--n", "1", "--N", "2"}}) {
        const auto r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.err.find("usage: ") != std::string::npos);
    }
}

TEST_CASE("HYPERDIAG_ORDER sets the default order")
{
    setenv("HYPERDIAG_ORDER", "3", 1);
    CHECK(run_cli({"pfq", "--top", "1/2", "--bottom", "", "--json"}).out == "[\"1\",\"1/2\",\"3/8\",\"5/16\"]\n");
    CHECK(run_cli({"pfq", "--top", "1/2", "--bottom", "", "--order", "1", "--json"}).out == "[\"1\",\"1/2\"]\n");
    setenv("HYPERDIAG_ORDER", "x", 1);
    CHECK(run_cli({"pfq", "--top", "1/2", "--bottom", ""}).code == 2);
    unsetenv("HYPERDIAG_ORDER");
}

TEST_CASE("reproduce all")
{
    const auto r = run_cli({"reproduce", "all", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 15);
}

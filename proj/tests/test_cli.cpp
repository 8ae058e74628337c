#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gegwp/bestbasis.hpp"
#include "gegwp/wpt.hpp"

using namespace gegwp;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(GEGWP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/gegwp_cli_test_") + name;
}

} // namespace

TEST_CASE("basis subcommand writes the expected tree JSON and a manifest") {
    auto out = tmp_path("basis.json");
    REQUIRE(run("basis --nu 1/12 --J 6 --method ours --out " + out) == 0);
    std::string text = slurp(out);
    auto tree = tree_from_json(text);
    CHECK(tree == best_basis_1factor(Frequency::rational(1, 12), 6));
    CHECK(slurp(out + ".manifest.json").find("\"basis\"") != std::string::npos);

    // byte-identical rerun
    auto out2 = tmp_path("basis2.json");
    REQUIRE(run("basis --nu 1/12 --J 6 --method ours --out " + out2) == 0);
    CHECK(slurp(out) == slurp(out2));
}

TEST_CASE("basis subcommand: wavelet tree at nu = 0") {
    auto out = tmp_path("basis0.json");
    REQUIRE(run("basis --nu 0 --J 4 --method ours --out " + out) == 0);
    auto tree = tree_from_json(slurp(out));
    CHECK(tree == best_basis_1factor(Frequency::of(0.0), 4));
    CHECK(leaf_count(tree) == 5);
}

TEST_CASE("whitcher with a spline filter exits with the numerical failure code") {
    CHECK(run("basis --nu 1/12 --J 6 --method whitcher --filter bl6") == 2);
}

TEST_CASE("flag validation failures exit nonzero") {
    CHECK(run("basis --J 6") != 0);                        // missing --nu
    CHECK(run("basis --nu 0.7 --J 6") == 1);               // frequency out of range
    CHECK(run("nope") != 0);                               // unknown subcommand
}

TEST_CASE("acv subcommand emits (h, gamma, rho) rows") {
    auto out = tmp_path("acv.csv");
    REQUIRE(run("acv --factor 0.4,1/12 --hmax 4 --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.rfind("h,gamma,rho\n", 0) == 0);
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
    CHECK(text.find("0,") != std::string::npos);
}

TEST_CASE("simulate subcommand is reproducible for a fixed seed") {
    auto out1 = tmp_path("sim1.csv"), out2 = tmp_path("sim2.csv");
    std::string flags = "simulate --factor 0.4,1/12 --J 5 --filter db4 --seed 42 "
                        "--replicates 2 --out ";
    REQUIRE(run(flags + out1) == 0);
    REQUIRE(run(flags + out2) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1).rfind("replicate,t,value\n", 0) == 0);

    REQUIRE(run("simulate --factor 0.3,0.1 --J 5 --method hosking --seed 1 "
                "--replicates 1 --out " +
                tmp_path("simh.csv")) == 0);
}

TEST_CASE("filters subcommand dumps taps") {
    auto out = tmp_path("filters.csv");
    REQUIRE(run("filters --filter db2 --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.rfind("index,h,g\n", 0) == 0);
    CHECK(text.find("0.482962913") != std::string::npos);
}

TEST_CASE("score subcommand emits one row with the table columns") {
    auto out = tmp_path("score.csv");
    REQUIRE(run("score --factor 0.4,1/12 --J 5 --filter db4 --method ours --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.rfind("process,family,q,method,leaf_count,lambda,hs_error,S\n", 0) == 0);
    CHECK(text.find("daubechies,4,ours,") != std::string::npos);
}

TEST_CASE("table subcommands run on a restricted grid") {
    auto out = tmp_path("t1.csv");
    REQUIRE(run("table1 --process 2 --family daubechies --J 5 --out " + out) == 0);
    auto text = slurp(out);
    int rows = -1;
    for (char c : text)
        if (c == '\n') ++rows;
    CHECK(rows == 5);   // one row per daubechies order, both method cells inline

    // the spline family has no gain-threshold basis: those cells stay empty
    auto outbl = tmp_path("t1bl.csv");
    REQUIRE(run("table1 --process 2 --family battle-lemarie --J 5 --out " + outbl) == 0);
    CHECK(slurp(outbl).find(",,\n") != std::string::npos);

    auto out2 = tmp_path("t2.csv");
    REQUIRE(run("table2 --process 2 --family daubechies --J 5 --replicates 1 --seed 3 "
                "--out " + out2) == 0);
    CHECK(slurp(out2).rfind("process,family,q,B_hosk,", 0) == 0);
}

TEST_CASE("decay subcommand emits fits") {
    auto out = tmp_path("decay.csv");
    REQUIRE(run("decay --factor 0.3,0.016 --J 9 --filter haar --depth 2 --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.rfind("j1,p1,j2,p2,predicted,fitted,pairs\n", 0) == 0);
    CHECK(text.find("2,0,2,0,") != std::string::npos);
}

TEST_CASE("bench subcommand runs a small range") {
    auto out = tmp_path("bench.csv");
    REQUIRE(run("bench --jmin 6 --jmax 7 --repeats 1 --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.find("6,ours,") != std::string::npos);
    CHECK(text.find("7,whitcher,") != std::string::npos);
}

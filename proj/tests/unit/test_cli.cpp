#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "batrel/cli.hpp"
#include "batrel/network.hpp"

using namespace batrel;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kBridge = BATREL_TEST_DATA_DIR "/bridge.net";

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("exact") {
    CHECK(run({"exact", kBridge, "--p", "0.9"}).out == "R = 0.971190\n");
    CHECK(run({"exact", kBridge, "--p", "0.5"}).out == "R = 0.468750\n");
    CHECK(run({"exact", kBridge}).out == "R = 0.971190\n");
    const auto missing = run({"exact", BATREL_TEST_DATA_DIR "/missing.net"});
    CHECK(missing.code == cli::kInputError);
    CHECK(missing.err.find("cannot open") != std::string::npos);
    CHECK(run({"exact", kBridge, "--cap", "4"}).code == cli::kCapability);
    CHECK(run({"exact", kBridge, "--format", "csv"}).out.rfind("R,0.97119", 0) == 0);
}

TEST_CASE("appbat") {
    const auto r = run({"appbat", kBridge, "--p", "0.9", "--min-ones", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.969570") != std::string::npos);
    CHECK(r.out.find("termination: completed") != std::string::npos);

    const auto csv = run({"appbat", kBridge, "--p", "0.9", "--max-failed", "1", "--format", "csv"});
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "zeta,total,connected,mass,elapsed_s");
    CHECK(rows[1].rfind("5,1,1,0.59049", 0) == 0);
    CHECK(rows[2].rfind("4,5,5,", 0) == 0);
    CHECK(rows[3].rfind("R,0.9185", 0) == 0);
    CHECK(rows[3].find(",completed") != std::string::npos);

    CHECK(run({"appbat", kBridge, "--min-ones", "0"}).out.find("0.971190") != std::string::npos);

    const auto asc = lines(run({"appbat", kBridge, "--min-ones", "3", "--direction", "ascending",
                                "--format", "csv"}).out);
    CHECK(asc[1].rfind("3,10,7,", 0) == 0);

    const auto delta = run({"appbat", kBridge, "--min-ones", "0", "--delta", "--format", "csv"});
    CHECK(delta.code == 0);
    CHECK(lines(delta.out).back().find("delta_threshold") != std::string::npos);
    const auto delta2 = run({"appbat", kBridge, "--min-ones", "0", "--delta", "0.01", "--format", "csv"});
    CHECK(lines(delta2.out).size() == 6);

    const auto budget = run({"appbat", kBridge, "--min-ones", "0", "--time-limit", "0", "--format", "csv"});
    CHECK(lines(budget.out).back() == "R,0,time_budget");
}

TEST_CASE("appbat usage errors") {
    CHECK(run({"appbat", kBridge}).code == cli::kUsage);
    CHECK(run({"appbat", kBridge, "--min-ones", "2", "--max-failed", "1"}).code == cli::kUsage);
    CHECK(run({"appbat", kBridge, "--min-ones", "9"}).code == cli::kInputError);
    CHECK(run({"appbat", kBridge, "--min-ones", "2", "--p", "1.5"}).code == cli::kUsage);
    CHECK(run({"appbat", kBridge, "--min-ones", "2", "--delta", "x"}).code == cli::kUsage);
    CHECK(run({"appbat", kBridge, "--min-ones", "2", "--direction", "sideways"}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("enumerate") {
    const auto level = lines(run({"enumerate", kBridge, "--ones", "3"}).out);
    REQUIRE(level.size() == 11);
    CHECK(level[0] == "index,bits,W_f,One,connected");
    CHECK(level[1] == "1,11100,7,3,N");
    CHECK(level[2] == "2,11010,11,3,Y");
    CHECK(level[10] == "10,00111,28,3,N");

    const auto zero = lines(run({"enumerate", kBridge, "--ones", "0"}).out);
    REQUIRE(zero.size() == 2);
    CHECK(zero[1] == "1,00000,0,0,N");

    const auto all = lines(run({"enumerate", kBridge, "--all", "--order", "forward"}).out);
    REQUIRE(all.size() == 33);
    CHECK(all[10] == "10,10010,9,2,Y");
    CHECK(all[32] == "32,11111,31,5,Y");

    const auto prob = lines(run({"enumerate", kBridge, "--all", "--with-prob"}).out);
    CHECK(prob[0] == "index,bits,W_f,One,connected,pr");
    CHECK(prob[1] == "1,00000,0,0,N,0");

    const auto backward = lines(run({"enumerate", kBridge, "--all", "--order", "backward"}).out);
    CHECK(backward[2] == "2,00001,16,1,N");

    CHECK(run({"enumerate", kBridge}).code == cli::kUsage);
    CHECK(run({"enumerate", kBridge, "--ones", "6"}).code == cli::kInputError);
}

TEST_CASE("check") {
    const auto r = run({"check", kBridge, "--state", "11100"});
    CHECK(r.out == "X = (1, 1, 1, 0, 0)\nL1 = {1}\nL2 = {2, 3}\nL3 = {}\ndisconnected\n");
    const auto csv = run({"check", kBridge, "--state", "10010", "--format", "csv"});
    CHECK(csv.out == "layer,nodes\n1,1\n2,2\n3,4\nverdict,connected\n");
    CHECK(run({"check", kBridge, "--state", "1110"}).code == cli::kInputError);
}

TEST_CASE("mcs") {
    const auto r = run({"mcs", kBridge, "--p", "0.9", "--samples", "200000", "--seed", "7", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "estimate,standard_error,samples,seed");
    CHECK(rows[1].find(",200000,7") != std::string::npos);
    CHECK(r.out == run({"mcs", kBridge, "--p", "0.9", "--samples", "200000", "--seed", "7",
                        "--format", "csv", "--workers", "3"}).out);
    CHECK(run({"mcs", kBridge, "--p", "1.0", "--samples", "10"}).out.rfind("R ~ 1.000000", 0) == 0);
    CHECK(run({"mcs", kBridge, "--samples", "0"}).code == cli::kUsage);
}

TEST_CASE("gen") {
    const auto r = run({"gen", "--nodes", "5", "--arcs", "8", "--seed", "3"});
    CHECK(r.code == 0);
    const auto inst = parse_network(r.out);
    CHECK(inst.network.node_count() == 5);
    CHECK(inst.network.arc_count() == 8);
    CHECK(inst.network.directed());
    CHECK(r.out == run({"gen", "--nodes", "5", "--arcs", "8", "--seed", "3"}).out);

    const std::string path = "batrel_cli_gen_test.net";
    CHECK(run({"gen", "--nodes", "4", "--arcs", "5", "--undirected", "-o", path}).code == 0);
    const auto written = load_network(path);
    CHECK_FALSE(written.network.directed());
    std::remove(path.c_str());

    CHECK(run({"gen", "--nodes", "3", "--arcs", "7"}).code == cli::kInputError);
}

TEST_CASE("deterministic output is byte-stable") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"enumerate", kBridge, "--all"},
          std::vector<std::string>{"exact", kBridge, "--format", "csv"},
          std::vector<std::string>{"mcs", kBridge, "--samples", "1000", "--seed", "1"}}) {
        CHECK(run(args).out == run(args).out);
    }
}

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "seqlogic/cli.hpp"

using seqlogic::run_cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    args.insert(args.begin(), "seqlogic");
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tree and traces") {
    auto r = run({"tree", "--logic", "fscl", "a && b"});
    CHECK(r.code == 0);
    CHECK(r.out == "((T <| b |> F) <| a |> F)\n");

    r = run({"traces", "--logic", "fscl", "(a && b) || c"});
    CHECK(r.code == 0);
    CHECK(r.out == "aT bT -> T\naT bF cT -> T\naT bF cF -> F\naF cT -> T\naF cF -> F\n");

    r = run({"traces", "--logic", "ffel", "(a & b) | c"});
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);

    r = run({"tree", "--dot", "a & b"});
    CHECK(r.out.rfind("digraph", 0) == 0);

    r = run({"tree", "--stdin"}, "a & b\n");
    CHECK(r.out == "((T <| b |> F) <| a |> (F <| b |> F))\n");
}

TEST_CASE("normalize, classify and translate") {
    CHECK(run({"normalize", "--logic", "ffel", "a"}).out == "T & (a & T)\n");
    CHECK(run({"normalize", "--logic", "fscl", "a"}).out == "T && (a && T || F)\n");
    CHECK(run({"classify", "--logic", "fscl", "T && ((a && T) || F)"}).out == "T-*-term\n");
    CHECK(run({"classify", "a & b"}).out == "FT MIXED\n");
    CHECK(run({"translate", "a & b"}).out == "(a || b && F) && b\n");
    CHECK(run({"normalize", "--logic", "ffel", "a && b"}).code == 2);
}

TEST_CASE("decide") {
    auto r = run({"decide", "--logic", "fscl", "F && a", "F"});
    CHECK(r.code == 0);
    CHECK(r.out == "EQUAL\n");
    r = run({"decide", "--logic", "fscl", "a && F", "F"});
    CHECK(r.code == 1);
    CHECK(r.out == "NOT EQUAL\nwitness (right): -> F\n");
    CHECK(run({"decide", "a & b", "(a || (b && F)) && b"}).code == 0);

    std::string big = "a";
    for (int i = 0; i < 20; ++i) big += " & a";
    CHECK(run({"decide", big, "a"}).code == 3);
    CHECK(run({"decide", "--max-atoms", "40", big, "a"}).code == 1);
}

TEST_CASE("errors map to exit codes") {
    auto r = run({"decide", "a &", "b"});
    CHECK(r.code == 2);
    CHECK(r.err.find("offset 3") != std::string::npos);
    CHECK(run({}).code == 2);
    std::istringstream in;
    std::ostringstream out, err;
    CHECK(run_cli({}, in, out, err) == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"tree", "--logic", "nonsense", "a"}).code == 2);
    CHECK(run({"check", "--catalog", "nope"}).code == 2);
}

TEST_CASE("invert and memorize") {
    auto t = run({"tree", "--logic", "fscl", "T && ((a && T) || F)"});
    std::string tree = t.out.substr(0, t.out.size() - 1);
    auto r = run({"invert", "--logic", "fscl", tree});
    CHECK(r.code == 0);
    CHECK(r.out == "T && (a && T || F)\n");
    CHECK(run({"invert", "--logic", "ffel", "(T <| a |> (T <| b |> F))"}).code == 1);
    CHECK(run({"memorize", "--logic", "fscl", "a && a"}).out == "((T <| a |> T) <| a |> F)\n");
}

TEST_CASE("check and catalog") {
    auto r = run({"check", "--catalog", "CP", "--trials", "50"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS CP CP4") != std::string::npos);
    r = run({"catalog", "--catalog", "CP_s"});
    CHECK(r.out ==
          "catalog\tschema\tlogic\tlhs\trhs\n"
          "CP_s\tCPs-not\tCP_s\t!X\tX ? F : T\n"
          "CP_s\tCPs-and\tCP_s\tX && Y\tX ? Y : F\n"
          "CP_s\tCPs-or\tCP_s\tX || Y\tX ? T : Y\n");
}

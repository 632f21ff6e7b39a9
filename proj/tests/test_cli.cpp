#include <doctest.h>

#include <sstream>

#include "eigencomp/cli.hpp"
#include "eigencomp/text_format.hpp"

using namespace eigencomp;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

const std::string kWindowInput =
    "3 1 5 2 8 4 6 12 7 15 9 17 10 11 20 25 26^ 13 27 28^ 14 29^ 16 30 18 19 21 22 23 24";
const std::string kWindowOutput = "2 1 4 5 3 / 2 3 1 / 3 1 5 2 7 4 6 9 8 11 10 / 3 1 2 6 11 4 5 7 8 9 10";

} // namespace

TEST_CASE("seq") {
    CHECK(run({"seq", "eigen", "--n", "7"}).out == "1 1 2 6 23 104 531\n");
    CHECK(run({"seq", "a", "--n", "5"}).out == "1 1 2 6 23\n");
    CHECK(run({"seq", "catalan", "--n", "6"}).out == "1 1 2 5 14 42\n");
    CHECK(run({"seq", "bell", "--n", "6"}).out == "1 1 2 5 15 52\n");
    CHECK(run({"seq", "a051295", "--n", "8"}).out == "1 1 2 5 15 54 235 1237\n");
    CHECK(run({"seq", "new4", "--n", "9"}).out == "1 1 2 5 15 55 248 1357 8809\n");
    CHECK(run({"seq", "eigen", "--n", "3", "--bfile"}).out == "1 1\n2 1\n3 2\n");
    const Run j = run({"seq", "eigen", "--n", "30", "--json"});
    REQUIRE(j.status == kExitOk);
    const auto values = sequence_from_json(parse_json(j.out));
    CHECK(values.size() == 30);
    CHECK(values[6] == 531);
    CHECK(run({"seq", "bogus", "--n", "3"}).status == kExitUsage);
    CHECK(run({"seq", "eigen", "--n", "3", "--bfile", "--json"}).status == kExitUsage);
}

TEST_CASE("count") {
    CHECK(run({"count", "--pattern", "3(5)241", "--n", "4"}).out == "23\n");
    CHECK(run({"count", "--pattern", "3(5)241", "--n", "6", "--fast"}).out == "531\n");
    CHECK(run({"count", "--pattern", "(1)324", "--n", "6", "--brute"}).out == "235\n");
    const Run limit = run({"count", "--pattern", "3(5)241", "--n", "11"});
    CHECK(limit.status == kExitResourceLimit);
    CHECK(limit.err.find("limit") != std::string::npos);
    const Run fast = run({"count", "--pattern", "(1)324", "--n", "4", "--fast"});
    CHECK(fast.status == kExitInvalidInput);
    CHECK(fast.err.find("--fast") != std::string::npos);
    const Run bad = run({"count", "--pattern", "3(5)2x1", "--n", "4"});
    CHECK(bad.status == kExitInvalidInput);
    const Run unknown = run({"count", "--pattern", "3(5)241", "--n", "4", "--frobnicate"});
    CHECK(unknown.status == kExitUsage);
    CHECK(unknown.err.find("frobnicate") != std::string::npos);
    CHECK(run({}).status == kExitUsage);
}

TEST_CASE("classify4") {
    const Run text = run({"classify4"});
    CHECK(text.status == kExitOk);
    CHECK(text.out.find("bell") != std::string::npos);
    CHECK(text.err.empty());
    const Run j = run({"classify4", "--json"});
    const Json records = parse_json(j.out);
    CHECK(records.size() == 16);
    CHECK(records[0]["representative"] == "32(4)1");
    CHECK(records[0]["label"] == "bell");
    CHECK(records[0]["members"].size() == 8);
}

TEST_CASE("biject") {
    const Run fwd = run({"biject", "forward", "--input", kWindowInput});
    CHECK(fwd.status == kExitOk);
    CHECK(fwd.out == kWindowOutput + "\n");
    CHECK(run({"biject", "forward", "--window", "--input", kWindowInput}).out == kWindowOutput + "\n");
    CHECK(run({"biject", "inverse", "--input", kWindowOutput}).out == kWindowInput + "\n");

    const Run fj = run({"biject", "forward", "--json", "--input", kWindowInput});
    const Run back = run({"biject", "inverse", "--json", "--input", fj.out});
    CHECK(back.status == kExitOk);
    const Run again = run({"biject", "forward", "--input", back.out});
    CHECK(again.out == kWindowOutput + "\n");

    const Run bad = run({"biject", "forward", "--input", "3 1 2^"});
    CHECK(bad.status == kExitInvalidInput);
    CHECK(run({"biject", "forward", "--input", "1 2 x"}).status == kExitInvalidInput);
    CHECK(run({"biject", "sideways", "--input", "1"}).status == kExitUsage);
}

TEST_CASE("eigen") {
    const std::string p = "2 8 3 1 11 4 6 5 13 7 15 9 10 14 12";
    const Run dec = run({"eigen", "decompose", "--input", p});
    REQUIRE(dec.status == kExitOk);
    CHECK(dec.out.rfind("1 2 4 3 ;", 0) == 0);
    std::string pair = dec.out;
    pair.pop_back();
    CHECK(run({"eigen", "compose", "--input", pair}).out == p + "\n");
    const Run dj = run({"eigen", "decompose", "--json", "--input", p});
    CHECK(run({"eigen", "compose", "--input", dj.out}).out == p + "\n");
    CHECK(run({"eigen", "decompose", "--input", "3 2 4 1"}).status == kExitInvalidInput);
}

TEST_CASE("verify") {
    const Run v = run({"verify", "--suite", "recurrences", "--max-n", "6"});
    CHECK(v.status == kExitOk);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(v.out.find("PASS") != std::string::npos);
    CHECK(run({"verify", "--suite", "bogus"}).status == kExitUsage);
}

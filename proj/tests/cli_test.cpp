#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = symprod::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SYMPROD_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("symprod_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(CliDist, SortedExample) {
    const auto r = run({"dist", "--a", "1,5", "--b", "2,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("distance: 3\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("engine: sorted"), std::string::npos);
    EXPECT_NE(r.out.find("permutation: [0, 1]"), std::string::npos);
}

TEST(CliDist, SameClassIsZero) {
    const auto r = run({"dist", "--a", "1,2", "--b", "2,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("distance: 0\n"), std::string::npos);
    EXPECT_NE(r.out.find("permutation: [1, 0]"), std::string::npos);
}

TEST(CliDist, EnginesAgree) {
    auto value = [](const std::string& out) { return out.substr(0, out.find('\n')); };
    const auto brute = run({"dist", "--a", "1,5", "--b", "2,3", "--engine", "brute"});
    const auto sorted = run({"dist", "--a", "1,5", "--b", "2,3", "--engine", "sorted"});
    const auto assign = run({"dist", "--a", "1,5", "--b", "2,3", "--engine", "assignment"});
    EXPECT_EQ(value(brute.out), value(sorted.out));
    EXPECT_EQ(value(brute.out), value(assign.out));
}

TEST(CliDist, Complex) {
    const auto r = run({"dist", "--complex", "--a", "0:1,0:-1", "--b", "0:-1,0:1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("distance: 0\n"), std::string::npos);
    EXPECT_NE(r.out.find("engine: assignment"), std::string::npos);
    EXPECT_EQ(run({"dist", "--complex", "--a", "0:1", "--b", "1", "--engine", "sorted"}).code, 2);
}

TEST(CliDist, FileInput) {
    const auto p = temp_path("dist.json");
    std::ofstream(p) << R"({"a": [[0, 1], [0, -1]], "b": [[0, -1], [0, 1.5]]})";
    const auto r = run({"dist", "--file", p.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("distance: 0.5\n"), std::string::npos) << r.out;
    fs::remove(p);
}

TEST(CliDist, InputErrorsExitTwo) {
    EXPECT_EQ(run({"dist", "--a", "1,5", "--b", "2"}).code, 2);
    EXPECT_EQ(run({"dist", "--a", "1,x", "--b", "2,3"}).code, 2);
    EXPECT_EQ(run({"dist", "--a", "1"}).code, 2);
    EXPECT_EQ(run({"dist", "--a", "1,2", "--b", "2,3", "--engine", "greedy"}).code, 2);
    EXPECT_EQ(run({"dist", "--a", "1,2,3,4,5,6,7,8,9", "--b", "1,2,3,4,5,6,7,8,9", "--engine", "brute"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliCanon, SortsAndGroups) {
    const auto r = run({"canon", "--a", "3,1,1.0000000000001,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("canonical: [1, 1, 2, 3]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("input_class: exterior"), std::string::npos);
    EXPECT_NE(r.out.find("blocks: [[0, 1]]"), std::string::npos);
}

TEST(CliLift, ConstantField) {
    const auto r = run({"lift", "--input", data("constant.jsonl")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "{\"meta\":{\"m\":1,\"n\":3,\"adjacency\":\"path\"}}\n"
              "{\"point\":[0],\"tuple\":[0,1,2]}\n"
              "{\"point\":[1],\"tuple\":[0,1,2]}\n"
              "{\"point\":[2],\"tuple\":[0,1,2]}\n");
    EXPECT_NE(r.err.find("max_ratio: 1\n"), std::string::npos) << r.err;
}

TEST(CliLift, TwoPointRatio) {
    const auto r = run({"lift", "--input", data("two_points.jsonl")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("max_ratio: 1\n"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("worst_edge: (0, 1)"), std::string::npos);
    EXPECT_NE(r.out.find("{\"point\":[0],\"tuple\":[0,1]}"), std::string::npos) << r.out;
}

TEST(CliLift, ShuffledInputGivesIdenticalBytes) {
    const auto a = run({"lift", "--input", data("path.jsonl")});
    const auto b = run({"lift", "--input", data("path_shuffled.jsonl")});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliLift, OutputFileRoundTrip) {
    for (const char* name : {"path.jsonl", "grid.jsonl", "field.csv"}) {
        const auto first = temp_path(std::string("lift1_") + name + ".jsonl");
        const auto second = temp_path(std::string("lift2_") + name + ".jsonl");
        ASSERT_EQ(run({"lift", "--input", data(name), "--output", first.string()}).code, 0) << name;
        ASSERT_EQ(run({"lift", "--input", first.string(), "--output", second.string()}).code, 0) << name;
        EXPECT_EQ(slurp(first), slurp(second)) << name;
        EXPECT_FALSE(slurp(first).empty());
        fs::remove(first);
        fs::remove(second);
    }
}

TEST(CliLift, Csv) {
    const auto r = run({"lift", "--input", data("field.csv")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("{\"point\":[2],\"tuple\":[0.125,0.25,4]}"), std::string::npos) << r.out;
}

TEST(CliLift, RefusesComplexAndBadInput) {
    const auto c = run({"lift", "--input", data("complex_loop.jsonl")});
    EXPECT_EQ(c.code, 2);
    EXPECT_NE(c.err.find("holonomy"), std::string::npos);
    const auto bad = run({"lift", "--input", data("bad_length.jsonl")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"lift", "--input", data("bad_value.jsonl")}).code, 2);
    EXPECT_EQ(run({"lift", "--input", data("missing.jsonl")}).code, 2);
}

TEST(CliHolonomy, SquareRoots) {
    const auto r = run({"holonomy", "--k", "2", "--steps", "256"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("holonomy: 2-cycle"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("permutation: (1 2)"), std::string::npos);
    EXPECT_NE(r.out.find("steps: 256"), std::string::npos);
}

TEST(CliHolonomy, CubeRoots) {
    const auto r = run({"holonomy", "--k", "3", "--steps", "512"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("holonomy: 3-cycle"), std::string::npos) << r.out;
}

TEST(CliHolonomy, ConstantLoopFile) {
    const auto r = run({"holonomy", "--input", data("constant_loop.jsonl")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("holonomy: identity"), std::string::npos) << r.out;
}

TEST(CliHolonomy, UndersampledExitsThree) {
    const auto gen = run({"holonomy", "--k", "4", "--steps", "10"});
    EXPECT_EQ(gen.code, 3);
    EXPECT_NE(gen.err.find("try --steps 32"), std::string::npos) << gen.err;
    const auto file = run({"holonomy", "--input", data("complex_loop.jsonl")});
    EXPECT_EQ(file.code, 3);
    EXPECT_NE(file.err.find("resample the loop with at least"), std::string::npos) << file.err;
}

TEST(CliLemmas, FullRangePasses) {
    const auto r = run({"lemmas", "--n", "2..6", "--trials", "500", "--seed", "42"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("all 35 checks passed"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliLemmas, SmokeIsFastAndDeterministic) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = run({"lemmas", "--n", "2", "--trials", "1", "--seed", "0"});
    const auto dt = std::chrono::steady_clock::now() - t0;
    EXPECT_EQ(a.code, 0);
    EXPECT_LT(std::chrono::duration<double>(dt).count(), 1.0);
    EXPECT_EQ(a.out, run({"lemmas", "--n", "2", "--trials", "1", "--seed", "0"}).out);
}

TEST(CliLemmas, SeedFromEnvironment) {
    ::setenv("SYMPROD_SEED", "42", 1);
    const auto env = run({"lemmas", "--n", "3", "--trials", "10"});
    ::unsetenv("SYMPROD_SEED");
    const auto flag = run({"lemmas", "--n", "3", "--trials", "10", "--seed", "42"});
    EXPECT_EQ(env.out, flag.out);
    EXPECT_NE(env.out.find("seed 42"), std::string::npos);
}

TEST(CliLemmas, InjectedFaultFails) {
    const auto r = run({"lemmas", "--n", "2..4", "--trials", "20", "--inject-fault"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(CliLemmas, BadFlags) {
    EXPECT_EQ(run({"lemmas", "--n", "2..9"}).code, 2);
    EXPECT_EQ(run({"lemmas", "--n", "x"}).code, 2);
    EXPECT_EQ(run({"lemmas", "--trials", "0"}).code, 2);
}

TEST(CliBench, SmallSizesAgree) {
    const auto r = run({"bench", "--n", "7", "--reps", "3"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("n = 7: engines agree (reference brute)"), std::string::npos) << r.out;
}

TEST(CliBench, LargeSortedAndMidAssignment) {
    const auto big = run({"bench", "--n", "100000", "--reps", "1", "--engines", "sorted"});
    EXPECT_EQ(big.code, 0);
    EXPECT_NE(big.out.find("100000"), std::string::npos);
    const auto mid = run({"bench", "--n", "500", "--reps", "1", "--engines", "sorted,assignment,brute"});
    EXPECT_EQ(mid.code, 0) << mid.out;
    EXPECT_NE(mid.out.find("skipped"), std::string::npos);
    EXPECT_NE(mid.out.find("engines agree (reference sorted)"), std::string::npos) << mid.out;
}

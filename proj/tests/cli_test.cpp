// Copyright 2026 The symoracle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symoracle/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symoracle/query.hpp"
#include "symoracle/reproduce.hpp"

using namespace symoracle;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("symoracle_cli_" + name)).string();
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(Cli, KleinCosetExample) {
    auto r = run({"coset", "--group", "S4", "--subgroup", "klein4", "--rep", "natural", "--t", "1..2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("t=1  P=1/2"), std::string::npos);
    EXPECT_NE(r.out.find("t=2  P=1/1"), std::string::npos);
}

TEST(Cli, HeisenbergExampleAsJson) {
    auto r = run({"sod", "--group", "heisenberg:3,1", "--rep", "natural", "--t", "1..2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["steps"][0]["probability"], "23/27");
    EXPECT_EQ(doc["steps"][1]["probability"], "1/1");
    EXPECT_EQ(doc["gamma"], 2);
}

TEST(Cli, JsonRoundTripsAndMatchesLibrary) {
    auto r = run({"coset", "--group", "heisenberg:2,1", "--subgroup", "center", "--t", "1..3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = report_from_json(Json::parse(r.out));
    EXPECT_EQ(report_to_json(report).dump(2) + "\n", r.out);

    ProblemSpec spec;
    spec.group = GroupSpec::heisenberg(2, 1);
    spec.mode = Mode::coset;
    spec.subgroup = "center";
    EXPECT_EQ(report, solve(spec, 1, 3));
}

TEST(Cli, TextAndJsonAgreeOnEveryNumber) {
    for (const std::vector<std::string> &base :
         {std::vector<std::string>{"sod", "--group", "S5", "--t", "1..5"},
          {"sod", "--group", "A6", "--t", "1..4", "--threshold", "3/4"},
          {"coset", "--group", "S6", "--subgroup", "alternating", "--t", "1..4"},
          {"coset", "--group", "fun:3,4", "--subgroup", "zero-sum", "--t", "1..3"},
          {"sod", "--group", "Z2xZ2", "--rep", "psi_{1,1}", "--t", "1..3"}}) {
        auto text = run(base);
        auto with_json = base;
        with_json.insert(with_json.end(), {"--format", "json"});
        auto json = run(with_json);
        ASSERT_EQ(text.code, 0) << text.err;
        ASSERT_EQ(json.code, 0) << json.err;
        auto doc = Json::parse(json.out);
        for (const auto &step : doc["steps"]) {
            std::string line = "t=" + std::to_string(step["t"].get<int>()) + "  P=" + step["probability"].get<std::string>();
            EXPECT_NE(text.out.find(line), std::string::npos) << base[2] << ": " << line;
        }
        std::string gamma = doc["gamma"].is_null() ? "inf" : std::to_string(doc["gamma"].get<int>());
        auto at = text.out.find("\ngamma=" + gamma);
        ASSERT_NE(at, std::string::npos) << base[2];
        char next = text.out[at + 7 + gamma.size()];
        EXPECT_TRUE(next == '\n' || next == ' ') << base[2];
    }
}

TEST(Cli, OutFileHoldsTheJsonReport) {
    auto path = temp_path("out.json");
    auto text = run({"sod", "--group", "D5", "--t", "1..2", "--out", path});
    auto json = run({"sod", "--group", "D5", "--t", "1..2", "--format", "json"});
    ASSERT_EQ(text.code, 0) << text.err;
    EXPECT_EQ(slurp(path), json.out);
    std::remove(path.c_str());
}

TEST(Cli, SpecFileDrivesTheQuery) {
    ProblemSpec spec;
    spec.group = GroupSpec::symmetric(4);
    spec.mode = Mode::coset;
    spec.subgroup = "klein4";
    auto path = temp_path("spec.json");
    std::ofstream(path) << problem_spec_to_json(spec).dump();
    auto r = run({"coset", "--spec", path, "--t", "1..2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(report_from_json(Json::parse(r.out)), solve(spec, 1, 2));
    std::remove(path.c_str());
}

TEST(Cli, SpecErrorsExitOne) {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"sod", "--group", "Q8"},
          {"sod", "--group", "S4", "--t", "3..1"},
          {"sod", "--group", "S4", "--t", "x"},
          {"sod", "--group", "S4", "--threshold", "1/3"},
          {"sod", "--group", "S4", "--rep", "[9]"},
          {"coset", "--group", "S4"},
          {"coset", "--group", "S5", "--subgroup", "klein4"},
          {"coset", "--group", "S4", "--subgroup", "nope"},
          {"sod", "--group", "S4", "--spec", "/nonexistent/spec.json"},
          {"sod", "--group", "S4", "--format", "yaml"},
          {"families", "van-dam", "3"},
          {"families", "nope"},
          {"reproduce", "nope"},
          {"reproduce"},
          {"frobnicate"},
          {}}) {
        auto r = run(args);
        EXPECT_EQ(r.code, kExitSpecError) << (args.empty() ? "<none>" : args[0] + " " + (args.size() > 1 ? args[1] : ""));
        EXPECT_FALSE(r.err.empty());
        EXPECT_NE(r.err.find("error"), std::string::npos);
    }
}

TEST(Cli, CapsExitTwo) {
    EXPECT_EQ(run({"sod", "--group", "S21"}).code, kExitCapExceeded);
    EXPECT_EQ(run({"table", "--group", "S11"}).code, kExitCapExceeded);
    EXPECT_EQ(run({"families", "lis", "12", "3"}).code, kExitCapExceeded);
}

TEST(Cli, VerifyPassesAndReportsMismatch) {
    auto ok = run({"verify", "--group", "S4", "--subgroup", "klein4", "--t", "1..2"});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    EXPECT_NE(ok.out.find("t=1  formula=1/2  simulated=0.500000000000"), std::string::npos);

    auto bad = run({"verify", "--group", "S4", "--subgroup", "klein4", "--t", "1", "--formula", "2/3"});
    EXPECT_EQ(bad.code, kExitMismatch);
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);

    auto json = run({"verify", "--group", "S3", "--t", "1..2", "--format", "json"});
    ASSERT_EQ(json.code, 0) << json.err;
    EXPECT_EQ(Json::parse(json.out).size(), 2u);
}

TEST(Cli, ReproduceAllPasses) {
    auto r = run({"reproduce", "--all", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto doc = Json::parse(r.out);
    std::set<std::string> targets;
    for (const auto &c : doc) {
        EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
        targets.insert(c["target"].get<std::string>());
    }
    EXPECT_EQ(targets.size(), reproduce_targets().size());

    auto list = run({"reproduce", "--list"});
    EXPECT_EQ(list.code, 0);
    for (const auto &t : reproduce_targets()) {
        EXPECT_NE(list.out.find(t + "\n"), std::string::npos);
    }
}

TEST(Cli, ReproduceSingleTargetMatrix) {
    auto r = run({"reproduce", "klein-four"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS  klein-four  t=1  expected 1/2  computed 1/2"), std::string::npos);
    EXPECT_NE(r.out.find("4/4 checks passed"), std::string::npos);
}

TEST(Cli, TablesAndFamilies) {
    auto t = run({"table", "--group", "S3"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_NE(t.out.find("order 6"), std::string::npos);
    auto j = run({"table", "--group", "heisenberg:2,1", "--format", "json"});
    ASSERT_EQ(j.code, 0) << j.err;
    EXPECT_EQ(load_char_table(Json::parse(j.out))->size(), 5u);
    auto file = run({"table", "--table-file", std::string(SYMORACLE_TEST_DATA_DIR) + "/a4_table.json"});
    EXPECT_EQ(file.code, 0) << file.err;

    EXPECT_EQ(run({"families", "van-dam", "4", "2"}).out, "11/16\n");
    EXPECT_EQ(run({"families", "heisenberg", "3", "1"}).out, "23/27\n");
    EXPECT_EQ(run({"families", "group-summation", "5", "4", "2"}).out, "2/5\n");
    EXPECT_EQ(run({"families", "lis", "4", "3"}).out, "10\n");
    EXPECT_EQ(run({"families", "complexity", "9"}).out, "symmetric=8 alternating=6 parity=4\n");
    auto base = run({"base-size", "--group", "A6"});
    EXPECT_EQ(base.out, "group A6  action natural  base_size=4\n");
    EXPECT_EQ(run({"base-size", "--group", "S4", "--action", "regular"}).out,
              "group S4  action regular  base_size=1\n");
}

TEST(Cli, HelpExitsZero) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("reproduce"), std::string::npos);
}

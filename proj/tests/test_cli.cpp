/*
   Copyright 2026 The scatlin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
    json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = scatlin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json strip_timing(json j) {
    j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST(Cli, CheckPseudoregulus) {
    const auto r = run({"check", "--field", "3^1", "--poly", R"({"coeffs":["0","g^0","0","0","0","0"]})"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.j();
    EXPECT_TRUE(j["scattered"].get<bool>());
    EXPECT_TRUE(j["oracle"]["scattered"].get<bool>());
    EXPECT_TRUE(j["dickson"]["scattered"].get<bool>());
    EXPECT_EQ(j["spectrum"]["1"], 364);
}

TEST(Cli, CheckFamilySpecFlags) {
    const auto r = run({"check", "--field", "5^1", "--family", "new_fh", "--h", "2", "--method", "dickson"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.j()["scattered"].get<bool>());
    EXPECT_FALSE(r.j().contains("oracle"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check", "--field", "4^1", "--family", "pseudoregulus"}).code, 2);
    EXPECT_EQ(run({"check", "--field", "3^1"}).code, 2);
    EXPECT_EQ(run({"check", "--field", "3^1", "--family", "csajbok_mz", "--delta", "g^0"}).code, 2);
    EXPECT_EQ(run({"reproduce", "no-such-tag"}).code, 2);
    EXPECT_EQ(run({"enumerate-h", "--field", "3^1", "--variant", "even"}).code, 2);
}

TEST(Cli, EnumerateH) {
    const auto r = run({"enumerate-h", "--field", "3^1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.j()["count"], 28);
    EXPECT_EQ(r.j()["h"].size(), 28u);
}

TEST(Cli, LinsetIntnMrdLemmas) {
    auto r = run({"linset", "--field", "3^1", "--family", "case1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_FALSE(r.j()["scattered"].get<bool>());
    EXPECT_TRUE(r.j()["mass_conserved"].get<bool>());

    r = run({"intn", "--field", "3^1", "--h", "all"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (auto& item : r.j()["results"]) EXPECT_EQ(item["intn"], 3);

    r = run({"mrd", "--field", "3^1", "--family", "pseudoregulus"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.j()["min_distance"], 5);
    EXPECT_TRUE(r.j()["mrd"].get<bool>());

    r = run({"lemmas", "--field", "3^1", "--h", "all"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.j()["results"].size(), 28u);
}

TEST(Cli, DeterministicReports) {
    const std::vector<std::string> args{"check", "--field", "3^1", "--family", "case1", "--workers", "2"};
    EXPECT_EQ(strip_timing(run(args).j()), strip_timing(run(args).j()));
    auto one = strip_timing(run({"check", "--field", "3^1", "--family", "case1", "--workers", "1"}).j());
    auto two = strip_timing(run(args).j());
    one.erase("command");
    two.erase("command");
    EXPECT_EQ(one, two);
}

TEST(Cli, TableOutput) {
    const auto r = run({"enumerate-h", "--field", "3^1", "--table"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("count"), std::string::npos);
    EXPECT_THROW(json::parse(r.out), json::exception);
}

TEST(Cli, EquivWithCheckpoint) {
    const std::string cp = ::testing::TempDir() + "scatlin_cp.json";
    std::remove(cp.c_str());
    const std::vector<std::string> base{"equiv", "--field", "3^1", "--left", "new_fh:g^13", "--right", "pseudoregulus"};
    auto args = base;
    for (auto s : {"--budget", "1000000", "--checkpoint"}) args.push_back(s);
    args.push_back(cp);
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["verdict"], "BudgetExceeded");
    int rounds = 1;
    while (r.j()["verdict"] == "BudgetExceeded" && rounds < 20) {
        auto more = base;
        for (auto s : {"--budget", "1000000", "--checkpoint"}) more.push_back(s);
        more.push_back(cp);
        more.push_back("--resume");
        more.push_back(cp);
        r = run(more);
        ASSERT_EQ(r.code, 0) << r.err;
        ++rounds;
    }
    EXPECT_EQ(r.j()["verdict"], "NotEquivalent");
    EXPECT_EQ(r.j()["searched"], run(base).j()["searched"]);

    // a checkpoint for another search is refused
    std::ofstream(cp) << R"({"fingerprint":"0","left":{},"right":{},"cursor":{"next_row":0,"searched":0}})";
    auto bad = base;
    bad.push_back("--resume");
    bad.push_back(cp);
    EXPECT_EQ(run(bad).code, 2);
}

TEST(Cli, TrinomialSearch) {
    const auto r = run({"equiv", "--field", "3^1", "--trinomial-search", "--h", "g^13"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["trinomials"].size(), 4u);
}

TEST(Cli, ReproduceTags) {
    for (const char* tag : {"case1-q5", "case1-q7-negative", "case2-q3", "even-q4-negative", "intn-q3",
                            "trinomial-q3", "l4-q5-power5", "mrd-q3"}) {
        const auto r = run({"reproduce", tag});
        EXPECT_EQ(r.code, 0) << tag << "\n" << r.out << r.err;
        EXPECT_TRUE(r.j()["pass"].get<bool>()) << tag;
    }
}

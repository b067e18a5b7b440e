/*
 * Copyright 2026 The polygame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polygame/cli.hpp"
#include "polygame/io.hpp"

using namespace polygame;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = POLYGAME_FIXTURES;

std::string fx(const char* name) { return kFixtures + "/" + name + ".json"; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text)
{
    fs::path dir = fs::temp_directory_path() / "polygame_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

io::Document reparse(const Result& r)
{
    return io::parse(r.out);
}

} // namespace

TEST(Cli, LollipopCoinCoin)
{
    auto r = run({"lollipop", fx("coin"), fx("coin")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = reparse(r);
    ASSERT_EQ(d.kind, io::DocKind::game);
    EXPECT_EQ(std::get<Game>(d.payload).states.size(), 4u);
}

TEST(Cli, SynthAlfredTrapIsEmpty)
{
    auto r = run({"synth", "--side", "alfred", fx("trap")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = reparse(r);
    ASSERT_EQ(d.kind, io::DocKind::simulation);
    EXPECT_TRUE(std::get<Simulation>(d.payload).apex.empty());
}

TEST(Cli, SynthRegion)
{
    auto r = run({"synth", "--side", "dominic", "--region", fx("trap")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = reparse(r);
    ASSERT_EQ(d.kind, io::DocKind::region);
    EXPECT_EQ(std::get<Region>(d.payload).states.size(), 2u);
}

TEST(Cli, LawsBiproduct)
{
    auto r = run({"laws", "--suite", "biproduct", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = reparse(r);
    EXPECT_TRUE(std::get<io::Json>(d.payload)["passed"].get<bool>());
}

TEST(Cli, LawsUnknownSuiteIsValidationError)
{
    EXPECT_EQ(run({"laws", "--suite", "nope"}).code, 1);
}

TEST(Cli, ConstructionsReparse)
{
    std::vector<std::vector<std::string>> cmds = {
        {"tensor", fx("coin"), fx("trap")}, {"dual", fx("trap")},
        {"oplus", fx("coin"), fx("unit")},  {"bang", "--bound", "2", fx("coin")},
        {"power", "--k", "3", fx("coin")},  {"max-sim", fx("trap"), fx("oneway")},
        {"validate", fx("coin")},           {"synth", "--side", "dominic", fx("oneway")},
    };
    for (const auto& c : cmds) {
        auto r = run(c);
        ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
        EXPECT_NO_THROW(reparse(r)) << c[0];
    }
}

TEST(Cli, SimulationPipeline)
{
    auto m = run({"max-sim", fx("coin"), fx("coin")});
    ASSERT_EQ(m.code, 0);
    std::string s = scratch("max.json", m.out);
    auto c = run({"compose", s, s});
    ASSERT_EQ(c.code, 0) << c.err;
    auto sq = std::get<Simulation>(reparse(c).payload);
    EXPECT_EQ(sq.apex.size(), 8u);
    std::string s2 = scratch("sq.json", c.out);
    EXPECT_EQ(run({"check-sim", s2}).code, 0);
    auto e = run({"equiv", "--mode", "span", s, s});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_TRUE(std::get<io::Json>(reparse(e).payload)["equivalent"].get<bool>());
    // Different apex sizes are answered without a search.
    auto e2 = run({"equiv", s, s2});
    ASSERT_EQ(e2.code, 0) << e2.err;
    EXPECT_FALSE(std::get<io::Json>(reparse(e2).payload)["equivalent"].get<bool>());
}

TEST(Cli, CurryUncurry)
{
    auto t = run({"tensor", fx("coin"), fx("unit")});
    std::string tp = scratch("cu.json", t.out);
    auto m = run({"max-sim", tp, fx("coin")});
    ASSERT_EQ(m.code, 0);
    std::string s = scratch("cu_sim.json", m.out);
    auto c = run({"curry", s, fx("coin"), fx("unit")});
    ASSERT_EQ(c.code, 0) << c.err;
    std::string cs = scratch("curried.json", c.out);
    auto u = run({"uncurry", cs, fx("unit"), fx("coin")});
    ASSERT_EQ(u.code, 0) << u.err;
    EXPECT_EQ(io::print(reparse(u)), io::print(io::parse(m.out)));
}

TEST(Cli, ExitCodes)
{
    std::string broken = scratch("broken.json", R"({"format_version":"1","kind":"game","payload":{"states":["s"],)"
                                                R"("moves":{"\"s\"":["a"]},"counters":{},"next":{}}})");
    EXPECT_EQ(run({"validate", broken}).code, 1);
    EXPECT_EQ(run({"validate", scratch("junk.json", "{nope")}).code, 1);
    EXPECT_EQ(run({"dual", "/nonexistent/file.json"}).code, 1);
    EXPECT_EQ(run({"lollipop", "--max-enum", "1", fx("coin"), fx("coin")}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({"tensor", fx("coin")}).code, 1);
    EXPECT_EQ(run({"compose", fx("coin"), fx("coin")}).code, 1);
}

TEST(Cli, InvalidSimulationReported)
{
    auto m = run({"max-sim", fx("coin"), fx("coin")});
    auto j = io::Json::parse(m.out);
    j["payload"]["gamma"].begin().value() = "nowhere";
    std::string bad = scratch("bad_sim.json", j.dump());
    auto r = run({"check-sim", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_FALSE(std::get<io::Json>(reparse(r).payload)["valid"].get<bool>());
}

TEST(Cli, PrettyAndCompactAgree)
{
    auto a = run({"dual", fx("coin")});
    auto b = run({"dual", "--format", "pretty", fx("coin")});
    ASSERT_EQ(b.code, 0);
    EXPECT_NE(a.out, b.out);
    EXPECT_EQ(io::print(io::parse(b.out)), a.out);
}

TEST(Cli, Deterministic)
{
    for (int n = 0; n < 3; ++n) {
        auto a = run({"laws", "--suite", "category", "--seed", "11", "--cases", "5"});
        auto b = run({"laws", "--suite", "category", "--seed", "11", "--cases", "5"});
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, Help)
{
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lollipop"), std::string::npos);
}

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

#include "polygame/laws.hpp"
#include "support.hpp"

using namespace polygame;

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, HoldsOnFixtures)
{
    LawOptions opt;
    opt.seed = 3;
    opt.cases = 10;
    for (const auto& r : run_laws(GetParam(), {}, opt)) {
        EXPECT_TRUE(r.ok()) << r.law << ": " << r.counterexample;
        EXPECT_GT(r.cases, 0u) << r.law;
        EXPECT_LT(r.skipped, r.cases) << r.law;
    }
}

INSTANTIATE_TEST_SUITE_P(All, Suite, ::testing::ValuesIn(law_suites()));

TEST(Laws, UnknownSuite)
{
    EXPECT_THROW(run_laws("nonsense", {}), ShapeError);
}

TEST(Laws, Deterministic)
{
    LawOptions opt;
    opt.seed = 5;
    opt.cases = 5;
    auto a = run_laws("category", {}, opt), b = run_laws("category", {}, opt);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        EXPECT_EQ(a[j].law, b[j].law);
        EXPECT_EQ(a[j].cases, b[j].cases);
        EXPECT_EQ(a[j].skipped, b[j].skipped);
    }
}

TEST(Laws, UserGames)
{
    LawOptions opt;
    opt.cases = 3;
    auto res = run_laws("exponential", {fixtures::coin()}, opt);
    for (const auto& r : res)
        EXPECT_TRUE(r.ok()) << r.law << ": " << r.counterexample;
}

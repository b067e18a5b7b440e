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

#include "polygame/additive.hpp"
#include "support.hpp"

using namespace polygame;
using namespace polygame::testing;

TEST(Oplus, Carriers)
{
    EXPECT_TRUE(isomorphic(oplus(*EMPTY(), *COIN()), *COIN()));
    Game s = oplus(*COIN(), *TRAP());
    EXPECT_EQ(s.states.size(), 4u);
    EXPECT_TRUE(validate_game(s).empty());
    EXPECT_TRUE(s.states.contains(pair(summand_tag(1), A("h"))));
    EXPECT_TRUE(s.states.contains(pair(summand_tag(2), A("dead"))));
}

TEST(Oplus, BigoplusOfNothingIsZero)
{
    EXPECT_EQ(bigoplus({}), zero_game());
    EXPECT_TRUE(zero_game().states.empty());
    std::vector<Game> three{fixtures::unit(), fixtures::coin(), fixtures::trap()};
    EXPECT_EQ(bigoplus(three).states.size(), 5u);
}

class Biproduct : public ::testing::TestWithParam<std::pair<int, int>> {
protected:
    GameRef p1, p2;
    void SetUp() override
    {
        auto fx = all_fixtures();
        p1 = fx[GetParam().first];
        p2 = fx[GetParam().second];
    }
};

TEST_P(Biproduct, Equations)
{
    auto i1 = injection(1, p1, p2), i2 = injection(2, p1, p2);
    auto q1 = projection(1, p1, p2), q2 = projection(2, p1, p2);
    for (const auto* s : {&i1, &i2, &q1, &q2})
        EXPECT_TRUE(oracle_valid(*s));
    EXPECT_TRUE(equivalent(compose(i1, q1), identity_sim(p1)));
    EXPECT_TRUE(equivalent(compose(i2, q2), identity_sim(p2)));
    EXPECT_TRUE(compose(i1, q2).apex.empty());
    EXPECT_TRUE(compose(i2, q1).apex.empty());
    EXPECT_TRUE(equivalent(add(compose(q1, i1), compose(q2, i2)), identity_sim(i1.dst)));
}

TEST_P(Biproduct, SplitMergeRoundTrip)
{
    Rng rng(GetParam().first * 7 + GetParam().second);
    auto sum = share(oplus(*p1, *p2));
    for (const auto& q : all_fixtures())
        for (int n = 0; n < 5; ++n) {
            auto s = random_simulation(rng, sum, q);
            auto [s1, s2] = split_copair(s, p1, p2);
            EXPECT_TRUE(oracle_valid(s1));
            EXPECT_TRUE(oracle_valid(s2));
            EXPECT_EQ(s1.apex.size() + s2.apex.size(), s.apex.size());
            EXPECT_TRUE(equivalent(copair(s1, s2), s));
            EXPECT_TRUE(equivalent(compose(injection(1, p1, p2), copair(s1, s2)), s1));
        }
}

TEST_P(Biproduct, PairingProjects)
{
    Rng rng(GetParam().first * 5 + GetParam().second);
    for (const auto& q : all_fixtures()) {
        auto s1 = random_simulation(rng, q, p1), s2 = random_simulation(rng, q, p2);
        auto t = pairing(s1, s2);
        EXPECT_TRUE(oracle_valid(t));
        EXPECT_TRUE(equivalent(compose(t, projection(1, p1, p2)), s1));
        EXPECT_TRUE(equivalent(compose(t, projection(2, p1, p2)), s2));
    }
}

std::vector<std::pair<int, int>> fixture_pairs()
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            out.emplace_back(a, b);
    return out;
}

INSTANTIATE_TEST_SUITE_P(FixturePairs, Biproduct, ::testing::ValuesIn(fixture_pairs()));

TEST(Copair, ZeroesMergeToZero)
{
    auto c = COIN(), t = TRAP(), u = UNIT();
    EXPECT_TRUE(copair(zero_sim(c, u), zero_sim(t, u)).apex.empty());
}

TEST(Copair, MismatchedTargetsAreShapeError)
{
    EXPECT_THROW(copair(identity_sim(COIN()), identity_sim(TRAP())), ShapeError);
}

TEST(FreeCofree, Shapes)
{
    Game l = free_game({A("x")});
    EXPECT_EQ(l.states.size(), 1u);
    EXPECT_TRUE(l.moves_at(A("x")).empty());
    Game r = cofree_game({A("x")});
    ASSERT_EQ(r.moves_at(A("x")).size(), 1u);
    EXPECT_TRUE(r.counters_at(A("x"), r.moves_at(A("x"))[0]).empty());
}

TEST(FreeCofree, TransposesAreInverse)
{
    Rng rng(2);
    FiniteSet i{A("x"), A("y")};
    for (const auto& p : all_fixtures())
        for (int n = 0; n < 10; ++n) {
            Span l = random_span(rng, i, p->states);
            auto ls = left_transpose(l, p);
            EXPECT_TRUE(oracle_valid(ls));
            EXPECT_EQ(*ls.src, free_game(i));
            EXPECT_EQ(left_untranspose(ls), l);
            Span r = random_span(rng, p->states, i);
            auto rs = right_transpose(r, p);
            EXPECT_TRUE(oracle_valid(rs));
            EXPECT_EQ(*rs.dst, cofree_game(i));
            EXPECT_EQ(right_untranspose(rs), r);
        }
}

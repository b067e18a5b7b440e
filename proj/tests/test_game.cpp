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

#include "support.hpp"

using namespace polygame;
using namespace polygame::testing;

TEST(Game, FixturesAreValid)
{
    for (const auto& g : all_fixtures())
        EXPECT_TRUE(validate_game(*g).empty());
}

TEST(Game, MissingNextEntryIsReported)
{
    Game g = fixtures::coin();
    g.next.erase({A("h"), A("flip"), A("land_h")});
    auto d = validate_game(g);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NE(d[0].what.find("missing next"), std::string::npos);
    EXPECT_NE(d[0].key.find("land_h"), std::string::npos);
}

TEST(Game, NextOutsideStatesIsReported)
{
    Game g = fixtures::coin();
    g.next[{A("h"), A("flip"), A("land_h")}] = A("nowhere");
    EXPECT_FALSE(validate_game(g).empty());
}

TEST(Game, ExtraMoveTableEntryIsReported)
{
    Game g = fixtures::unit();
    g.moves[A("ghost")] = FiniteSet{};
    EXPECT_FALSE(validate_game(g).empty());
}

FamilySet family(const Game& g, std::map<Element, std::vector<Element>> xs)
{
    FamilySet x{g.states, {}};
    for (const auto& i : g.states)
        x.fiber.emplace(i, FiniteSet(xs[i]));
    return x;
}

TEST(Extend, UnitIsIdentity)
{
    Game u = fixtures::unit();
    auto e = extend(u, family(u, {{A("s"), {A("x1"), A("x2")}}}));
    EXPECT_EQ(e.fiber.at(A("s")).size(), 2u);
}

TEST(Extend, EmptyFiberKillsProduct)
{
    Game c = fixtures::coin();
    auto e = extend(c, family(c, {{A("h"), {A("x")}}}));
    EXPECT_TRUE(e.fiber.at(A("h")).empty());
    EXPECT_TRUE(e.fiber.at(A("t")).empty());
}

TEST(Extend, SingletonFibers)
{
    Game c = fixtures::coin();
    auto e = extend(c, family(c, {{A("h"), {A("x")}}, {A("t"), {A("y")}}}));
    EXPECT_EQ(e.fiber.at(A("h")).size(), 1u);
    EXPECT_EQ(e.fiber.at(A("t")).size(), 1u);
}

// Σ_a Π_d |X(next)| computed directly.
std::size_t sum_prod(const Game& g, const FamilySet& x, const Element& i)
{
    std::size_t total = 0;
    for (const auto& a : g.moves.at(i)) {
        std::size_t prod = 1;
        for (const auto& d : g.counters.at({i, a}))
            prod *= x.fiber.at(g.next.at({i, a, d})).size();
        total += prod;
    }
    return total;
}

TEST(Extend, CardinalityMatchesSumOfProducts)
{
    Rng rng(3);
    for (int n = 0; n < 100; ++n) {
        Game g = random_game(rng);
        FamilySet x{g.states, {}};
        for (const auto& i : g.states) {
            std::vector<Element> fib;
            for (std::size_t k = uniform(rng, 0, 3); k > 0; --k)
                fib.push_back(atom("x" + std::to_string(k)));
            x.fiber.emplace(i, FiniteSet(fib));
        }
        auto e = extend(g, x);
        for (const auto& i : g.states) {
            EXPECT_EQ(e.fiber.at(i).size(), sum_prod(g, x, i));
            EXPECT_EQ(extension_size(g, x, i), sum_prod(g, x, i));
        }
    }
}

TEST(Extend, WrongBaseIsShapeError)
{
    Game c = fixtures::coin();
    FamilySet x{FiniteSet{A("h")}, {{A("h"), FiniteSet{}}}};
    EXPECT_THROW(extend(c, x), ShapeError);
}

TEST(Extend, SizeGuard)
{
    Game c = fixtures::coin();
    std::vector<Element> many;
    for (int k = 0; k < 200; ++k)
        many.push_back(atom("x" + std::to_string(k)));
    auto x = family(c, {{A("h"), many}, {A("t"), many}});
    EXPECT_THROW(extend(c, x, Limits{1000, 8}), SizingError);
}

TEST(SymmetricGame, SelfLoopIsUnit)
{
    FiniteSet st{A("s")};
    MoveSpan a{{{A("s"), FiniteSet{A("m")}}}, {{{A("s"), A("m")}, A("s")}}};
    Game g = from_symmetric_game(st, a, a);
    EXPECT_TRUE(validate_game(g).empty());
    EXPECT_TRUE(isomorphic(g, fixtures::unit()));
}

TEST(SymmetricGame, AlternatingSwap)
{
    FiniteSet st{A("p"), A("q")};
    MoveSpan a{{{A("p"), FiniteSet{A("m")}}, {A("q"), FiniteSet{A("m")}}},
               {{{A("p"), A("m")}, A("q")}, {{A("q"), A("m")}, A("p")}}};
    MoveSpan d{{{A("p"), FiniteSet{A("e")}}, {A("q"), FiniteSet{A("e")}}},
               {{{A("p"), A("e")}, A("p")}, {{A("q"), A("e")}, A("q")}}};
    Game g = from_symmetric_game(st, a, d);
    ASSERT_TRUE(validate_game(g).empty());
    for (const auto& i : st)
        for (const auto& m : g.moves_at(i))
            for (const auto& c : g.counters_at(i, m))
                EXPECT_NE(g.next_state(i, m, c), i);
}

TEST(SymmetricGame, NoMovePropagates)
{
    FiniteSet st{A("p")};
    MoveSpan a{{{A("p"), FiniteSet{}}}, {}};
    MoveSpan d{{{A("p"), FiniteSet{A("e")}}}, {{{A("p"), A("e")}, A("p")}}};
    Game g = from_symmetric_game(st, a, d);
    EXPECT_TRUE(g.moves_at(A("p")).empty());
}

TEST(SymmetricGame, PartialSpanRejected)
{
    FiniteSet st{A("p"), A("q")};
    MoveSpan a{{{A("p"), FiniteSet{}}}, {}};
    EXPECT_THROW(from_symmetric_game(st, a, a), ValidationError);
}

TEST(Isomorphic, RenamingAndShape)
{
    Game c = fixtures::coin();
    Game r;
    for (const char* side : {"x", "y"})
        for (const char* land : {"x", "y"})
            r.add_transition(atom(side), atom("m"), atom(std::string("c") + land), atom(land));
    EXPECT_TRUE(isomorphic(c, r));
    EXPECT_FALSE(isomorphic(fixtures::trap(), fixtures::oneway()));
    EXPECT_FALSE(isomorphic(fixtures::unit(), fixtures::coin()));
}

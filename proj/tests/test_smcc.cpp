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

#include "polygame/smcc.hpp"
#include "support.hpp"

using namespace polygame;
using namespace polygame::testing;

namespace {

std::size_t total_counters(const Game& g)
{
    return g.counter_count();
}

bool same_data(const Simulation& a, const Simulation& b)
{
    return *a.src == *b.src && *a.dst == *b.dst && a.apex == b.apex && a.leg1 == b.leg1 && a.leg2 == b.leg2 &&
           a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
}

std::vector<GameRef> small_fixtures() { return {UNIT(), COIN(), TRAP(), ONEWAY(), EMPTY()}; }

} // namespace

TEST(Tensor, UnitIsNeutralOnCarriers)
{
    Game t = tensor(*UNIT(), *COIN());
    EXPECT_EQ(t.states.size(), 2u);
    EXPECT_EQ(t.move_count(), 2u);
    EXPECT_EQ(total_counters(t), 4u);
    EXPECT_TRUE(isomorphic(t, fixtures::coin()));
}

TEST(Tensor, CoinSquared)
{
    Game t = tensor(*COIN(), *COIN());
    EXPECT_EQ(t.states.size(), 4u);
    for (const auto& i : t.states) {
        ASSERT_EQ(t.moves_at(i).size(), 1u);
        EXPECT_EQ(t.counters_at(i, t.moves_at(i)[0]).size(), 4u);
    }
}

TEST(Tensor, EmptyAnnihilates)
{
    EXPECT_TRUE(tensor(*EMPTY(), *COIN()).states.empty());
}

TEST(TensorSim, IdentitiesAndZero)
{
    auto c = COIN(), t = TRAP();
    auto ct = share(tensor(*c, *t));
    EXPECT_TRUE(equivalent(tensor_sim(identity_sim(c), identity_sim(t)), identity_sim(ct)));
    EXPECT_TRUE(tensor_sim(zero_sim(c, c), identity_sim(t)).apex.empty());
}

TEST(Lollipop, CoinCoinMoves)
{
    Game l = lollipop(*COIN(), *COIN());
    EXPECT_EQ(l.states.size(), 4u);
    Element hh = pair(A("h"), A("h"));
    ASSERT_EQ(l.moves_at(hh).size(), 4u);
    for (const auto& m : l.moves_at(hh))
        EXPECT_EQ(l.counters_at(hh, m).size(), 2u);
    EXPECT_EQ(lollipop_move_count(*COIN(), *COIN(), A("h"), A("h")), 4u);
}

// Σ_f Π_{a2} |D2(a2)|^{|D3(f a2)|} by enumerating f.
std::size_t count_by_enumeration(const Game& p2, const Game& p3, const Element& i2, const Element& i3)
{
    std::size_t total = 0;
    for (const auto& f : enumerate_functions(p2.moves_at(i2), p3.moves_at(i3))) {
        std::size_t prod = 1;
        for (const auto& [a2, a3] : f.graph())
            for (std::size_t t = 0; t < p3.counters_at(i3, a3).size(); ++t)
                prod *= p2.counters_at(i2, a2).size();
        total += prod;
    }
    return total;
}

TEST(Lollipop, MoveCountFormulaOnFixtures)
{
    for (const auto& p2 : small_fixtures())
        for (const auto& p3 : small_fixtures()) {
            Game l = lollipop(*p2, *p3);
            ASSERT_TRUE(validate_game(l).empty());
            for (const auto& i2 : p2->states)
                for (const auto& i3 : p3->states) {
                    std::size_t want = count_by_enumeration(*p2, *p3, i2, i3);
                    EXPECT_EQ(l.moves_at(pair(i2, i3)).size(), want);
                    EXPECT_EQ(lollipop_move_count(*p2, *p3, i2, i3), want);
                }
        }
}

TEST(Lollipop, IntoUnitIsProductOfCounters)
{
    for (const auto& p : small_fixtures()) {
        Game l = lollipop(*p, fixtures::unit());
        for (const auto& i : p->states) {
            std::size_t prod = 1;
            for (const auto& a : p->moves_at(i))
                prod *= p->counters_at(i, a).size();
            EXPECT_EQ(l.moves_at(pair(i, A("s"))).size(), prod);
        }
        EXPECT_TRUE(isomorphic(l, dual(*p)));
    }
}

TEST(Lollipop, SizeGuardBeforeEnumeration)
{
    Game big;
    for (int a = 0; a < 4; ++a)
        for (int d = 0; d < 4; ++d)
            big.add_transition(A("s"), atom("a" + std::to_string(a)), atom("d" + std::to_string(d)), A("s"));
    EXPECT_THROW(lollipop(big, big, Limits{1000, 8}), SizingError);
}

TEST(Curry, RoundTripsAreRaw)
{
    Rng rng(4);
    for (int n = 0; n < 50; ++n) {
        auto p1 = share(random_game(rng)), p2 = share(random_game(rng)), p3 = share(random_game(rng));
        auto s = random_simulation(rng, share(tensor(*p1, *p2)), p3);
        auto c = curry(s, p1, p2);
        EXPECT_TRUE(oracle_valid(c));
        EXPECT_TRUE(same_data(uncurry(c, p2, p3), s));
        EXPECT_TRUE(same_data(curry(uncurry(c, p2, p3), p1, p2), c));
    }
}

TEST(Curry, UnitorCurries)
{
    auto c = COIN();
    auto ru = structural_iso(Structural::unit_r, std::vector<GameRef>{c});
    auto k = curry(ru, c, share(unit_game()));
    EXPECT_TRUE(oracle_valid(k));
}

TEST(Curry, WrongShapeIsShapeError)
{
    EXPECT_THROW(curry(identity_sim(COIN()), COIN(), UNIT()), ShapeError);
}

TEST(Eval, SmallCases)
{
    auto u = share(unit_game());
    EXPECT_EQ(eval_sim(u, u).apex.size(), 1u);
    EXPECT_TRUE(oracle_valid(eval_sim(COIN(), COIN())));
    auto l = share(lollipop(*COIN(), *TRAP()));
    EXPECT_TRUE(same_data(eval_sim(COIN(), TRAP()), uncurry(identity_sim(l), COIN(), TRAP())));
}

TEST(Eval, BetaLaw)
{
    Rng rng(8);
    for (int n = 0; n < 30; ++n) {
        auto p1 = share(random_game(rng)), p2 = share(random_game(rng)), p3 = share(random_game(rng));
        auto s = random_simulation(rng, share(tensor(*p1, *p2)), p3, 2);
        auto lhs = compose(tensor_sim(curry(s, p1, p2), identity_sim(p2)), eval_sim(p2, p3));
        EXPECT_TRUE(equivalent(lhs, s, EquivMode::full, Limits{10000, 64}));
    }
}

TEST(Structural, InversesAndCoherence)
{
    auto c = COIN(), t = TRAP(), u = UNIT();
    std::vector<GameRef> three{c, t, c};
    auto a = structural_iso(Structural::assoc, three);
    auto ai = structural_iso(Structural::assoc, three, true);
    EXPECT_TRUE(oracle_valid(a));
    EXPECT_TRUE(oracle_valid(ai));
    EXPECT_TRUE(equivalent(compose(a, ai), identity_sim(a.src)));
    EXPECT_TRUE(equivalent(compose(ai, a), identity_sim(a.dst)));

    std::vector<GameRef> cc{c, c};
    auto sw = structural_iso(Structural::symmetry, cc);
    EXPECT_TRUE(equivalent(compose(sw, sw), identity_sim(sw.src)));

    auto one = share(unit_game());
    std::vector<GameRef> uu{one};
    auto l = structural_iso(Structural::unit_l, uu);
    auto r = structural_iso(Structural::unit_r, uu);
    EXPECT_TRUE(equivalent(l, r));
    (void)u;
}

TEST(Structural, Pentagon)
{
    auto c = COIN();
    auto cc = share(tensor(*c, *c));
    auto id = identity_sim(c);
    std::vector<GameRef> g1{cc, c, c}, g2{c, c, cc}, g3{c, c, c};
    // ((c c) c) c -> (c c)(c c) -> c (c (c c))
    auto top = compose(structural_iso(Structural::assoc, g1), structural_iso(Structural::assoc, g2));
    // ((c c) c) c -> (c (c c)) c -> c ((c c) c) -> c (c (c c))
    auto inner = share(tensor(*c, *cc));
    std::vector<GameRef> g4{c, cc, c};
    auto bottom = compose(compose(tensor_sim(structural_iso(Structural::assoc, g3), id),
                                  structural_iso(Structural::assoc, g4)),
                          tensor_sim(id, structural_iso(Structural::assoc, g3)));
    (void)inner;
    EXPECT_TRUE(equivalent(top, bottom, EquivMode::full, Limits{10000, 64}));
}

TEST(Structural, Hexagon)
{
    auto c = COIN(), t = TRAP(), o = ONEWAY();
    auto id = [](const GameRef& g) { return identity_sim(g); };
    auto sym = [](GameRef a, GameRef b) {
        std::vector<GameRef> v{a, b};
        return structural_iso(Structural::symmetry, v);
    };
    auto assoc = [](GameRef a, GameRef b, GameRef d) {
        std::vector<GameRef> v{a, b, d};
        return structural_iso(Structural::assoc, v);
    };
    auto to = share(tensor(*t, *o)), oc = share(tensor(*o, *c));
    // (c t) o -> c (t o) -> (t o) c -> t (o c)
    auto lhs = compose(compose(assoc(c, t, o), sym(c, to)), assoc(t, o, c));
    // (c t) o -> (t c) o -> t (c o) -> t (o c)
    auto rhs = compose(compose(tensor_sim(sym(c, t), id(o)), assoc(t, c, o)), tensor_sim(id(t), sym(c, o)));
    (void)oc;
    EXPECT_TRUE(equivalent(lhs, rhs, EquivMode::full, Limits{10000, 64}));
}

TEST(Dual, Examples)
{
    EXPECT_TRUE(isomorphic(dual(*UNIT()), *UNIT()));
    Game d = dual(*COIN());
    ASSERT_EQ(d.moves_at(A("h")).size(), 2u);
    for (const auto& m : d.moves_at(A("h")))
        EXPECT_EQ(d.counters_at(A("h"), m).size(), 1u);
}

TEST(Dual, NotInvolutiveInGeneral)
{
    // One state, two moves with two counters each.
    Game g;
    for (const char* a : {"a", "b"})
        for (const char* c : {"x", "y"})
            g.add_transition(A("s"), A(a), A(c), A("s"));
    Game dd = dual(dual(g));
    EXPECT_EQ(dual(g).moves_at(A("s")).size(), 4u);
    EXPECT_EQ(dd.moves_at(A("s")).size(), 16u);
    EXPECT_FALSE(isomorphic(dd, g));
}

TEST(Dual, TrapIsFixedByDoubleDual)
{
    // ok: 2 choice functions with 1 counter; dead: the empty function, no
    // counters. Dualizing again gives 1 move at ok and none at dead.
    Game dd = dual(dual(*TRAP()));
    EXPECT_TRUE(isomorphic(dd, *TRAP()));
}

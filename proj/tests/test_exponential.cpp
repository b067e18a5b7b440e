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

#include "polygame/exponential.hpp"
#include "polygame/smcc.hpp"
#include "support.hpp"

using namespace polygame;
using namespace polygame::testing;

namespace {

const Limits kWide{10000, 64};

Element word(std::initializer_list<const char*> xs)
{
    std::vector<Element> v;
    for (const char* x : xs)
        v.push_back(A(x));
    return tuple(v);
}

// Span-level symmetry: (leg1, act(σ, leg2)) has the same multiset of pairs
// as (leg1, leg2) for every σ.
bool span_symmetric(const Simulation& s, std::size_t k)
{
    std::multiset<std::pair<Element, Element>> base;
    for (const auto& r : s.apex)
        base.emplace(s.leg1.at(r), s.leg2.at(r));
    for (const auto& sigma : all_perms(k)) {
        std::multiset<std::pair<Element, Element>> moved;
        for (const auto& r : s.apex)
            moved.emplace(s.leg1.at(r), act(sigma, s.leg2.at(r)));
        if (moved != base)
            return false;
    }
    return true;
}

Simulation symmetrize(const Simulation& s, const GameRef& tp, std::size_t k)
{
    Simulation out = zero_sim(s.src, tp);
    for (const auto& sigma : all_perms(k))
        out = add(out, compose(s, symmetry_sim(tp, k, sigma)));
    return out;
}

std::size_t multiset_count(std::size_t n, std::size_t upto)
{
    std::size_t total = 0;
    for (std::size_t j = 0; j <= upto; ++j)
        total += n == 0 ? (j == 0) : binom(n + j - 1, j);
    return total;
}

} // namespace

TEST(Perm, OrbitAndSection)
{
    EXPECT_EQ(orbit(word({"t", "h"})), Element::mset({A("h"), A("t")}));
    EXPECT_EQ(section(Element::mset({A("h"), A("h")})), word({"h", "h"}));
    Rng rng(1);
    FiniteSet pool{A("a"), A("b"), A("c")};
    for (int n = 0; n < 100; ++n) {
        std::vector<Element> items;
        for (std::size_t j = uniform(rng, 0, 4); j > 0; --j)
            items.push_back(pool[uniform(rng, 0, 2)]);
        Element m = Element::mset(items);
        EXPECT_EQ(orbit(section(m)), m);
    }
}

TEST(Perm, ActionLaws)
{
    Element w = word({"a", "b", "c"});
    for (const auto& s : all_perms(3))
        for (const auto& t : all_perms(3)) {
            EXPECT_EQ(act(then(s, t), w), act(t, act(s, w)));
            EXPECT_EQ(act(inverse(s), act(s, w)), w);
        }
    EXPECT_EQ(all_perms(3).size(), 6u);
    EXPECT_EQ(act(Perm{1, 0}, word({"x", "y"})), word({"y", "x"}));
}

TEST(Perm, MatchingPermIsLeastAndCorrect)
{
    auto m = matching_perm(word({"a", "b", "a"}), word({"a", "a", "b"}));
    ASSERT_TRUE(m);
    EXPECT_EQ(act(*m, word({"a", "b", "a"})), word({"a", "a", "b"}));
    EXPECT_FALSE(matching_perm(word({"a"}), word({"b"})));
}

TEST(Power, CoinSquared)
{
    Game p = power_game(*COIN(), 2);
    EXPECT_EQ(p.states.size(), 3u);
    EXPECT_TRUE(validate_game(p).empty());
    EXPECT_EQ(p.moves_at(Element::mset({A("h"), A("t")})).size(), 2u);
    EXPECT_EQ(p.moves_at(Element::mset({A("h"), A("h")})).size(), 1u);
}

TEST(Power, OneIsTheGame)
{
    for (const auto& g : all_fixtures())
        EXPECT_TRUE(isomorphic(power_game(*g, 1), *g));
}

TEST(Power, TensorPowerMatchesIteratedTensor)
{
    Game t2 = tensor_power(*COIN(), 2);
    EXPECT_EQ(t2.states.size(), 4u);
    EXPECT_TRUE(isomorphic(t2, tensor(*COIN(), *COIN())));
}

TEST(Symmetry, Laws)
{
    auto c = COIN();
    auto t2 = share(tensor_power(*c, 2));
    EXPECT_TRUE(equivalent(symmetry_sim(t2, 2, {0, 1}), identity_sim(t2)));
    auto sw = symmetry_sim(t2, 2, {1, 0});
    EXPECT_TRUE(oracle_valid(sw));
    EXPECT_TRUE(equivalent(compose(sw, sw), identity_sim(t2)));
    auto t3 = share(tensor_power(*TRAP(), 3));
    for (const auto& s : all_perms(3))
        for (const auto& t : all_perms(3))
            EXPECT_TRUE(equivalent(compose(symmetry_sim(t3, 3, s), symmetry_sim(t3, 3, t)),
                                   symmetry_sim(t3, 3, then(s, t)), EquivMode::full, kWide));
}

TEST(Chat, ValidAndEqualizing)
{
    for (const auto& g : all_fixtures())
        for (std::size_t k = 1; k <= 3; ++k) {
            auto ch = chat(g, k);
            EXPECT_TRUE(oracle_valid(ch));
            auto tp = share(tensor_power(*g, k));
            for (const auto& sigma : all_perms(k))
                EXPECT_TRUE(equivalent(compose(ch, symmetry_sim(tp, k, sigma)), ch, EquivMode::span_only, kWide));
        }
}

TEST(PermutationTransport, IdentityAndSwap)
{
    FiniteSet u{A("x"), A("y")};
    ElementMap id, swap, g;
    for (const auto& w : words(u, 2)) {
        id.emplace(w, w);
        swap.emplace(w, act({1, 0}, w));
    }
    for (const auto& e : u)
        g.emplace(e, e);
    auto rho = permutation_transport(id, g, u, 2);
    for (const auto& [v, w] : rho)
        EXPECT_EQ(v, w);
    auto rho2 = permutation_transport(swap, g, u, 2);
    // ρ(v) = σ(v) with σ least taking g(v) to h(g(v)): (x,y) -> (y,x).
    EXPECT_EQ(rho2.at(word({"x", "y"})), word({"y", "x"}));
    EXPECT_EQ(rho2.at(word({"x", "x"})), word({"x", "x"}));
    EXPECT_TRUE(check_transport_square(swap, g, rho2, u, 2).empty());
}

TEST(PermutationTransport, NonOrbitPreservingRejected)
{
    FiniteSet u{A("x"), A("y")};
    ElementMap h, g;
    for (const auto& w : words(u, 2))
        h.emplace(w, word({"x", "x"}));
    for (const auto& e : u)
        g.emplace(e, e);
    EXPECT_THROW(permutation_transport(h, g, u, 2), ValidationError);
}

TEST(Factor, ConeCompositeRecovered)
{
    Rng rng(6);
    for (const auto& p : {COIN(), TRAP()})
        for (std::size_t k = 1; k <= 2; ++k) {
            auto pk = share(power_game(*p, k));
            for (int n = 0; n < 5; ++n) {
                auto q = share(random_game(rng));
                auto v = random_simulation(rng, q, pk);
                auto f = factor_through_power(compose(v, chat(p, k)), p, k);
                EXPECT_TRUE(oracle_valid(f));
                EXPECT_TRUE(equivalent(f, v, EquivMode::span_only, kWide));
            }
        }
}

TEST(Factor, SymmetrizedInputs)
{
    Rng rng(7);
    for (int n = 0; n < 30; ++n) {
        auto p = n % 2 ? COIN() : TRAP();
        std::size_t k = 2;
        auto tp = share(tensor_power(*p, k));
        auto q = share(random_game(rng));
        auto s = symmetrize(random_simulation(rng, q, tp, 2), tp, k);
        auto f = factor_through_power(s, p, k);
        EXPECT_TRUE(oracle_valid(f));
        EXPECT_TRUE(equivalent(compose(f, chat(p, k)), s, EquivMode::span_only, kWide));
    }
}

TEST(Factor, RejectsExactlyTheAsymmetricSpans)
{
    Rng rng(8);
    auto p = COIN();
    auto tp = share(tensor_power(*p, 2));
    std::size_t rejected = 0;
    for (int n = 0; n < 60; ++n) {
        auto q = share(random_game(rng));
        auto s = random_simulation(rng, q, tp, 2);
        bool sym = span_symmetric(s, 2);
        if (sym) {
            EXPECT_NO_THROW(factor_through_power(s, p, 2));
        } else {
            EXPECT_THROW(factor_through_power(s, p, 2), NotEqualizing);
            ++rejected;
        }
    }
    EXPECT_GT(rejected, 0u);
}

TEST(Bang, Carriers)
{
    EXPECT_EQ(bang(*COIN(), 2).states.size(), 6u);
    EXPECT_TRUE(isomorphic(bang(*COIN(), 0), *UNIT()));
    EXPECT_EQ(bang(*EMPTY(), 2).states.size(), 1u);
    for (const auto& g : all_fixtures())
        for (std::size_t k = 0; k <= 3; ++k) {
            Game b = bang(*g, k);
            EXPECT_TRUE(validate_game(b).empty());
            EXPECT_EQ(b.states.size(), multiset_count(g->states.size(), k));
        }
}

TEST(Bang, StructureMaps)
{
    EXPECT_EQ(counit_sim(COIN(), 2).apex.size(), 1u);
    auto der = dereliction_sim(COIN(), 1);
    EXPECT_EQ(der.apex.size(), 2u);
    for (const auto& r : der.apex)
        EXPECT_EQ(der.leg1.at(r), Element::mset({der.leg2.at(r)}));
    EXPECT_EQ(deriving_sim(COIN(), 1).apex.size(), 2u);
    for (const auto& g : all_fixtures())
        for (std::size_t k = 0; k <= 2; ++k) {
            EXPECT_TRUE(oracle_valid(counit_sim(g, k)));
            EXPECT_TRUE(oracle_valid(comul_sim(g, k)));
            EXPECT_TRUE(oracle_valid(digging_sim(g, k)));
            if (k == 0) {
                EXPECT_THROW(dereliction_sim(g, k), ShapeError);
                EXPECT_THROW(deriving_sim(g, k), ShapeError);
                continue;
            }
            EXPECT_TRUE(oracle_valid(dereliction_sim(g, k)));
            EXPECT_TRUE(oracle_valid(deriving_sim(g, k)));
        }
}

class Comonoid : public ::testing::TestWithParam<std::pair<int, std::size_t>> {};

TEST_P(Comonoid, Laws)
{
    GameRef p = all_fixtures()[GetParam().first];
    std::size_t k = GetParam().second;
    auto b = share(bang(*p, k));
    auto idb = identity_sim(b);
    auto cm = comul_sim(p, k), cu = counit_sim(p, k);
    std::vector<GameRef> one{b}, two{b, b}, three{b, b, b};
    EXPECT_TRUE(equivalent(compose(compose(cm, tensor_sim(cu, idb)), structural_iso(Structural::unit_l, one)), idb,
                           EquivMode::full, kWide));
    EXPECT_TRUE(equivalent(compose(compose(cm, tensor_sim(idb, cu)), structural_iso(Structural::unit_r, one)), idb,
                           EquivMode::full, kWide));
    EXPECT_TRUE(equivalent(compose(compose(cm, tensor_sim(cm, idb)), structural_iso(Structural::assoc, three)),
                           compose(cm, tensor_sim(idb, cm)), EquivMode::full, kWide));
    EXPECT_TRUE(equivalent(compose(cm, structural_iso(Structural::symmetry, two)), cm, EquivMode::full, kWide));
}

INSTANTIATE_TEST_SUITE_P(UnitCoinTrap, Comonoid,
                         ::testing::Values(std::pair{0, 0u}, std::pair{0, 1u}, std::pair{0, 2u}, std::pair{1, 0u},
                                           std::pair{1, 1u}, std::pair{1, 2u}, std::pair{2, 0u}, std::pair{2, 1u},
                                           std::pair{2, 2u}));

TEST(Digging, CounitLaws)
{
    for (const auto& p : {UNIT(), COIN(), TRAP()})
        for (std::size_t k = 1; k <= 2; ++k) {
            auto b = share(bang(*p, k));
            auto dig = digging_sim(p, k);
            EXPECT_TRUE(equivalent(compose(dig, dereliction_sim(b, k)), identity_sim(b), EquivMode::full, kWide));
            EXPECT_TRUE(equivalent(compose(dig, bang_sim(dereliction_sim(p, k), k)), identity_sim(b),
                                   EquivMode::full, kWide));
        }
}

TEST(Digging, CoassociativeAtOne)
{
    for (const auto& p : {UNIT(), COIN(), TRAP()}) {
        auto b = share(bang(*p, 1));
        auto dig = digging_sim(p, 1);
        EXPECT_TRUE(equivalent(compose(dig, digging_sim(b, 1)), compose(dig, bang_sim(dig, 1)), EquivMode::full,
                               kWide));
    }
}

TEST(Digging, TruncationBreaksCoassociativityAtTwo)
{
    // Digging twice bounds the total number of parts by K; digging then
    // applying ! to digging bounds each inner multiset. At K = 2 the second
    // has strictly more apex elements over UNIT.
    auto p = UNIT();
    auto b = share(bang(*p, 2));
    auto dig = digging_sim(p, 2);
    auto lhs = compose(dig, digging_sim(b, 2));
    auto rhs = compose(dig, bang_sim(dig, 2));
    EXPECT_LT(lhs.apex.size(), rhs.apex.size());
    EXPECT_TRUE(span_embeds(underlying_span(lhs), underlying_span(rhs)));
}

TEST(Deriving, OnlyLaxNatural)
{
    auto c = COIN(), u = UNIT();
    // u : COIN -> UNIT, two apex elements over (h, s) that always land heads.
    Simulation w{c, u, FiniteSet{A("p"), A("q")}, {}, {}, {}, {}, {}};
    for (const char* r : {"p", "q"}) {
        w.leg1[A(r)] = A("h");
        w.leg2[A(r)] = A("s");
        w.alpha[{A(r), A("flip")}] = A("a");
        w.beta[{A(r), A("flip"), A("d")}] = A("land_h");
        w.gamma[{A(r), A("flip"), A("d")}] = A(r);
    }
    ASSERT_TRUE(oracle_valid(w));
    auto lhs = compose(deriving_sim(c, 2), bang_sim(w, 2));
    auto rhs = compose(tensor_sim(w, bang_sim(w, 1)), deriving_sim(u, 2));
    EXPECT_FALSE(equivalent(lhs, rhs, EquivMode::span_only, kWide));
    Span l = underlying_span(lhs), r = underlying_span(rhs);
    EXPECT_TRUE(span_embeds(l, r) || span_embeds(r, l));
}

TEST(HatSpans, RetractionIsExact)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Element> is;
        for (std::size_t j = 0; j < n; ++j)
            is.push_back(atom("i" + std::to_string(j)));
        FiniteSet i(is);
        for (std::size_t k = 0; k <= 3; ++k) {
            Span cs = compose_spans(hat_s(i, k), hat_c(i, k));
            auto ms = multisets(i, k);
            ASSERT_EQ(cs.apex.size(), ms.size());
            std::set<Element> seen;
            for (const auto& r : cs.apex) {
                EXPECT_EQ(cs.leg1.at(r), cs.leg2.at(r));
                seen.insert(cs.leg1.at(r));
            }
            EXPECT_EQ(seen.size(), ms.size());
        }
    }
}

TEST(FreeMonoid, OrbitSpanFactorsAsIdentity)
{
    FiniteSet i{A("x"), A("y")};
    Span phi = hat_c(i, 2);
    auto f = span_free_monoid_factor(phi, i, 2);
    EXPECT_TRUE(check_free_monoid_factor(phi, f).empty());
    EXPECT_TRUE(span_iso(f.psi, identity_span(FiniteSet(multisets(i, 2)))));
}

TEST(FreeMonoid, AsymmetricPairRejected)
{
    FiniteSet i{A("x"), A("y")};
    Span phi{FiniteSet(words(i, 2)), FiniteSet{A("j")}, FiniteSet{A("r")}, {}, {}};
    phi.leg1.emplace(A("r"), word({"x", "y"}));
    phi.leg2.emplace(A("r"), A("j"));
    EXPECT_THROW(span_free_monoid_factor(phi, i, 2), NotEqualizing);
}

TEST(Comul, CocommutativeUpToSpanIsoOnRandomGames)
{
    Rng rng(3);
    for (int n = 0; n < 30; ++n) {
        auto p = share(random_game(rng));
        for (std::size_t k = 1; k <= 2; ++k) {
            auto b = share(bang(*p, k));
            auto cm = comul_sim(p, k);
            std::vector<GameRef> two{b, b};
            EXPECT_TRUE(equivalent(compose(cm, structural_iso(Structural::symmetry, two)), cm, EquivMode::span_only,
                                   Limits{10000, 100000}));
        }
    }
}

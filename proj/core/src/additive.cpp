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

#include "polygame/additive.hpp"

namespace polygame {

namespace {

void tag_into(Game& out, const Game& p, const Element& tag)
{
    auto t = [&tag](const Element& e) { return pair(tag, e); };
    for (const auto& i : p.states) {
        std::vector<Element> moves;
        for (const auto& a : p.moves_at(i)) {
            std::vector<Element> counters;
            for (const auto& d : p.counters_at(i, a)) {
                out.next.emplace(Key3{t(i), t(a), t(d)}, t(p.next_state(i, a, d)));
                counters.push_back(t(d));
            }
            out.counters.emplace(Key2{t(i), t(a)}, FiniteSet(std::move(counters)));
            moves.push_back(t(a));
        }
        out.moves.emplace(t(i), FiniteSet(std::move(moves)));
    }
    std::vector<Element> states = out.states.elements();
    for (const auto& i : p.states)
        states.push_back(t(i));
    out.states = FiniteSet(std::move(states));
}

const Element& untag(const Element& e) { return e.snd(); }

void check_k(int k)
{
    if (k != 1 && k != 2)
        throw ShapeError("summand index must be 1 or 2");
}

} // namespace

Element summand_tag(int k)
{
    check_k(k);
    return atom(k == 1 ? "L" : "R");
}

Game oplus(const Game& p1, const Game& p2)
{
    Game g;
    tag_into(g, p1, summand_tag(1));
    tag_into(g, p2, summand_tag(2));
    return g;
}

Game zero_game() { return Game{}; }

Game bigoplus(std::span<const Game> games)
{
    Game g;
    for (std::size_t k = 0; k < games.size(); ++k)
        tag_into(g, games[k], atom(std::to_string(k)));
    return g;
}

Simulation injection(int k, GameRef p1, GameRef p2)
{
    Element tag = summand_tag(k);
    auto sum = share(oplus(*p1, *p2));
    GameRef part = k == 1 ? p1 : p2;
    return graph_sim(
        part, sum, [&](const Element& i) { return pair(tag, i); },
        [&](const Element&, const Element& a) { return pair(tag, a); },
        [](const Element&, const Element&, const Element& d) { return untag(d); });
}

Simulation projection(int k, GameRef p1, GameRef p2)
{
    Element tag = summand_tag(k);
    auto sum = share(oplus(*p1, *p2));
    GameRef part = k == 1 ? p1 : p2;
    std::map<Element, Element> leg1, leg2;
    for (const auto& i : part->states) {
        leg1.emplace(i, pair(tag, i));
        leg2.emplace(i, i);
    }
    const Game& g = *part;
    return tabulate(
        sum, part, part->states, std::move(leg1), std::move(leg2),
        [](const Element&, const Element& a) { return untag(a); },
        [&](const Element&, const Element&, const Element& d) { return pair(tag, d); },
        [&](const Element& r, const Element& a, const Element& d) { return g.next_state(r, untag(a), d); });
}

Simulation copair(const Simulation& s1, const Simulation& s2)
{
    if (!(s1.p2() == s2.p2()))
        throw ShapeError("copair: targets differ");
    auto sum = share(oplus(s1.p1(), s2.p1()));
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    const Simulation* part[] = {&s1, &s2};
    for (int k = 1; k <= 2; ++k) {
        Element tag = summand_tag(k);
        for (const auto& r : part[k - 1]->apex) {
            Element tr = pair(tag, r);
            leg1.emplace(tr, pair(tag, part[k - 1]->leg1.at(r)));
            leg2.emplace(tr, part[k - 1]->leg2.at(r));
            apex.push_back(std::move(tr));
        }
    }
    auto which = [&](const Element& tr) -> const Simulation& {
        return *part[tr.fst() == summand_tag(1) ? 0 : 1];
    };
    return tabulate(
        sum, s1.dst, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [&](const Element& tr, const Element& a) { return which(tr).alpha.at(Key2{untag(tr), untag(a)}); },
        [&](const Element& tr, const Element& a, const Element& d) {
            return pair(tr.fst(), which(tr).beta.at(Key3{untag(tr), untag(a), d}));
        },
        [&](const Element& tr, const Element& a, const Element& d) {
            return pair(tr.fst(), which(tr).gamma.at(Key3{untag(tr), untag(a), d}));
        });
}

Simulation pairing(const Simulation& s1, const Simulation& s2)
{
    if (!(s1.p1() == s2.p1()))
        throw ShapeError("pairing: sources differ");
    return add(compose(s1, injection(1, s1.dst, s2.dst)), compose(s2, injection(2, s1.dst, s2.dst)));
}

std::pair<Simulation, Simulation> split_copair(const Simulation& s, GameRef p1, GameRef p2)
{
    if (!(s.p1() == oplus(*p1, *p2)))
        throw ShapeError("split_copair: source is not the sum of the given games");
    auto half = [&](int k, GameRef part) {
        Element tag = summand_tag(k);
        Simulation out = zero_sim(std::move(part), s.dst);
        std::vector<Element> apex;
        for (const auto& r : s.apex) {
            const Element& i = s.leg1.at(r);
            if (!(i.fst() == tag))
                continue;
            apex.push_back(r);
            out.leg1.emplace(r, untag(i));
            out.leg2.emplace(r, s.leg2.at(r));
        }
        out.apex = FiniteSet(std::move(apex));
        for (const auto& [key, v] : s.alpha)
            if (out.apex.contains(key.first))
                out.alpha.emplace(Key2{key.first, untag(key.second)}, v);
        for (const auto& [key, v] : s.beta) {
            const auto& [r, a, d] = key;
            if (out.apex.contains(r)) {
                out.beta.emplace(Key3{r, untag(a), d}, untag(v));
                out.gamma.emplace(Key3{r, untag(a), d}, s.gamma.at(key));
            }
        }
        return out;
    };
    return {half(1, std::move(p1)), half(2, std::move(p2))};
}

Game free_game(const FiniteSet& i)
{
    Game g;
    g.states = i;
    for (const auto& x : i)
        g.moves.emplace(x, FiniteSet{});
    return g;
}

Game cofree_game(const FiniteSet& i)
{
    Game g;
    g.states = i;
    for (const auto& x : i) {
        g.moves.emplace(x, FiniteSet{x});
        g.counters.emplace(Key2{x, x}, FiniteSet{});
    }
    return g;
}

Simulation left_transpose(const Span& s, GameRef p)
{
    if (!(s.to == p->states))
        throw ShapeError("left_transpose: span does not land in the game's states");
    Simulation out = zero_sim(share(free_game(s.from)), std::move(p));
    out.apex = s.apex;
    out.leg1 = s.leg1;
    out.leg2 = s.leg2;
    return out;
}

Span left_untranspose(const Simulation& s)
{
    return Span{s.p1().states, s.p2().states, s.apex, s.leg1, s.leg2};
}

Simulation right_transpose(const Span& s, GameRef p)
{
    if (!(s.from == p->states))
        throw ShapeError("right_transpose: span does not start at the game's states");
    Simulation out = zero_sim(std::move(p), share(cofree_game(s.to)));
    out.apex = s.apex;
    out.leg1 = s.leg1;
    out.leg2 = s.leg2;
    // One obligation per source move: answer with the target state itself.
    for (const auto& r : s.apex)
        for (const auto& a : out.p1().moves_at(s.leg1.at(r)))
            out.alpha.emplace(Key2{r, a}, s.leg2.at(r));
    return out;
}

Span right_untranspose(const Simulation& s)
{
    return Span{s.p1().states, s.p2().states, s.apex, s.leg1, s.leg2};
}

} // namespace polygame

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

#include "polygame/synthesis.hpp"

#include <stdexcept>

#include "polygame/smcc.hpp"

namespace polygame {

namespace {

// Downward iteration of a monotone step on subsets of the states.
template <class Keep>
Region greatest_fixpoint(const Game& p, Side side, Keep keep)
{
    Region r;
    r.side = side;
    r.states = p.states;
    while (true) {
        ++r.rounds;
        std::vector<Element> kept;
        for (const auto& i : r.states)
            if (keep(i, r.states))
                kept.push_back(i);
        if (kept.size() == r.states.size())
            return r;
        r.states = FiniteSet(std::move(kept));
    }
}

const Element* safe_move(const Game& p, const Element& i, const FiniteSet& h)
{
    for (const auto& a : p.moves_at(i)) {
        bool ok = true;
        for (const auto& d : p.counters_at(i, a))
            ok = ok && h.contains(p.next_state(i, a, d));
        if (ok)
            return &a;
    }
    return nullptr;
}

const Element* safe_counter(const Game& p, const Element& i, const Element& a, const FiniteSet& h)
{
    for (const auto& d : p.counters_at(i, a))
        if (h.contains(p.next_state(i, a, d)))
            return &d;
    return nullptr;
}

} // namespace

Region alfred_region(const Game& p)
{
    return greatest_fixpoint(p, Side::alfred, [&](const Element& i, const FiniteSet& h) {
        return safe_move(p, i, h) != nullptr;
    });
}

Region dominic_region(const Game& p)
{
    return greatest_fixpoint(p, Side::dominic, [&](const Element& i, const FiniteSet& h) {
        for (const auto& a : p.moves_at(i))
            if (!safe_counter(p, i, a, h))
                return false;
        return true;
    });
}

Simulation alfred_strategy(GameRef p)
{
    FiniteSet h = alfred_region(*p).states;
    std::map<Element, Element> leg1, leg2;
    for (const auto& i : h) {
        leg1.emplace(i, Element::star());
        leg2.emplace(i, i);
    }
    const Game& g = *p;
    return tabulate(
        share(unit_game()), p, h, std::move(leg1), std::move(leg2),
        [&](const Element& i, const Element&) { return *safe_move(g, i, h); },
        [](const Element&, const Element&, const Element&) { return Element::star(); },
        [&](const Element& i, const Element&, const Element& d) { return g.next_state(i, *safe_move(g, i, h), d); });
}

Simulation dominic_strategy(GameRef p)
{
    FiniteSet h = dominic_region(*p).states;
    std::map<Element, Element> leg1, leg2;
    for (const auto& i : h) {
        leg1.emplace(i, i);
        leg2.emplace(i, Element::star());
    }
    const Game& g = *p;
    return tabulate(
        p, share(unit_game()), h, std::move(leg1), std::move(leg2),
        [](const Element&, const Element&) { return Element::star(); },
        [&](const Element& i, const Element& a, const Element&) { return *safe_counter(g, i, a, h); },
        [&](const Element& i, const Element& a, const Element&) {
            return g.next_state(i, a, *safe_counter(g, i, a, h));
        });
}

namespace {

// First a2 answering a1 from (i1, i2) within r, or nullptr.
const Element* answer(const Game& p1, const Game& p2, const Element& i1, const Element& i2, const Element& a1,
                      const FiniteSet& r)
{
    for (const auto& a2 : p2.moves_at(i2)) {
        bool ok = true;
        for (const auto& d2 : p2.counters_at(i2, a2)) {
            bool found = false;
            for (const auto& d1 : p1.counters_at(i1, a1))
                if (r.contains(pair(p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2)))) {
                    found = true;
                    break;
                }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok)
            return &a2;
    }
    return nullptr;
}

const Element& back_answer(const Game& p1, const Game& p2, const Element& i1, const Element& i2,
                           const Element& a1, const Element& a2, const Element& d2, const FiniteSet& r)
{
    for (const auto& d1 : p1.counters_at(i1, a1))
        if (r.contains(pair(p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2))))
            return d1;
    throw std::logic_error("back_answer: relation is not a post-fixpoint");
}

} // namespace

FiniteSet max_simulation_relation(const Game& p1, const Game& p2, std::size_t* rounds)
{
    std::vector<Element> all;
    for (const auto& i1 : p1.states)
        for (const auto& i2 : p2.states)
            all.push_back(pair(i1, i2));
    FiniteSet r(std::move(all));
    std::size_t n = 0;
    while (true) {
        ++n;
        std::vector<Element> kept;
        for (const auto& x : r) {
            bool ok = true;
            for (const auto& a1 : p1.moves_at(x.fst()))
                if (!answer(p1, p2, x.fst(), x.snd(), a1, r)) {
                    ok = false;
                    break;
                }
            if (ok)
                kept.push_back(x);
        }
        if (kept.size() == r.size())
            break;
        r = FiniteSet(std::move(kept));
    }
    if (rounds)
        *rounds = n;
    return r;
}

Simulation max_simulation(GameRef p1, GameRef p2)
{
    FiniteSet r = max_simulation_relation(*p1, *p2);
    std::map<Element, Element> leg1, leg2;
    for (const auto& x : r) {
        leg1.emplace(x, x.fst());
        leg2.emplace(x, x.snd());
    }
    const Game& g1 = *p1;
    const Game& g2 = *p2;
    auto alpha = [&](const Element& x, const Element& a1) { return *answer(g1, g2, x.fst(), x.snd(), a1, r); };
    auto beta = [&](const Element& x, const Element& a1, const Element& d2) {
        return back_answer(g1, g2, x.fst(), x.snd(), a1, alpha(x, a1), d2, r);
    };
    return tabulate(p1, p2, r, std::move(leg1), std::move(leg2), alpha, beta,
                    [&](const Element& x, const Element& a1, const Element& d2) {
                        return pair(g1.next_state(x.fst(), a1, beta(x, a1, d2)),
                                    g2.next_state(x.snd(), alpha(x, a1), d2));
                    });
}

bool sim_exists(const Game& p1, const Game& p2, const Element& i1, const Element& i2)
{
    if (!p1.states.contains(i1))
        throw ShapeError("sim_exists: " + to_string(i1) + " is not a state of the first game");
    if (!p2.states.contains(i2))
        throw ShapeError("sim_exists: " + to_string(i2) + " is not a state of the second game");
    return max_simulation_relation(p1, p2).contains(pair(i1, i2));
}

Simulation dominic_to_dual_alfred(const Simulation& s, GameRef dual_p)
{
    const Element star = Element::star();
    std::map<Element, Element> leg1, leg2;
    for (const auto& r : s.apex) {
        leg1.emplace(r, star);
        leg2.emplace(r, s.leg1.at(r));
    }
    return tabulate(
        share(unit_game()), std::move(dual_p), s.apex, std::move(leg1), std::move(leg2),
        [&](const Element& r, const Element&) {
            std::vector<Element::Binding> f;
            for (const auto& a : s.p1().moves_at(s.leg1.at(r)))
                f.emplace_back(a, s.beta.at(Key3{r, a, star}));
            return Element::fun(std::move(f));
        },
        [&](const Element&, const Element&, const Element&) { return star; },
        [&](const Element& r, const Element&, const Element& a) { return s.gamma.at(Key3{r, a, star}); });
}

Simulation dual_alfred_to_dominic(const Simulation& t, GameRef p)
{
    const Element star = Element::star();
    std::map<Element, Element> leg1, leg2;
    for (const auto& r : t.apex) {
        leg1.emplace(r, t.leg2.at(r));
        leg2.emplace(r, star);
    }
    return tabulate(
        std::move(p), share(unit_game()), t.apex, std::move(leg1), std::move(leg2),
        [&](const Element&, const Element&) { return star; },
        [&](const Element& r, const Element& a, const Element&) { return t.alpha.at(Key2{r, star}).apply(a); },
        [&](const Element& r, const Element& a, const Element&) { return t.gamma.at(Key3{r, star, a}); });
}

} // namespace polygame

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

#include "polygame/random.hpp"

#include <algorithm>
#include <iterator>

#include "polygame/synthesis.hpp"

namespace polygame {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    // Plain modulo keeps streams identical across standard libraries.
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

namespace {

bool coin(Rng& rng, unsigned percent) { return rng() % 100 < percent; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs)
{
    return xs[uniform(rng, 0, xs.size() - 1)];
}

const Element& pick(Rng& rng, const FiniteSet& xs) { return xs[uniform(rng, 0, xs.size() - 1)]; }

Element name(char prefix, std::size_t n) { return atom(std::string(1, prefix) + std::to_string(n)); }

std::vector<Element> all_moves(const Game& g)
{
    std::vector<Element> out;
    for (const auto& [i, as] : g.moves)
        out.insert(out.end(), as.begin(), as.end());
    return out;
}

std::vector<Element> all_counters(const Game& g)
{
    std::vector<Element> out;
    for (const auto& [k, ds] : g.counters)
        out.insert(out.end(), ds.begin(), ds.end());
    return out;
}

} // namespace

Game random_game(Rng& rng, const GameShape& shape)
{
    Game g;
    std::size_t n = uniform(rng, 1, shape.max_states);
    std::vector<Element> states;
    for (std::size_t i = 0; i < n; ++i)
        states.push_back(name('s', i));
    g.states = FiniteSet(states);
    std::size_t min_moves = shape.allow_dead_ends ? 0 : 1;
    for (const auto& i : states) {
        std::size_t na = uniform(rng, min_moves, shape.max_moves);
        std::vector<Element> moves;
        for (std::size_t a = 0; a < na; ++a) {
            Element mv = name('a', a);
            std::size_t nd = uniform(rng, min_moves, shape.max_counters);
            std::vector<Element> counters;
            for (std::size_t d = 0; d < nd; ++d) {
                counters.push_back(name('d', d));
                g.next.emplace(Key3{i, mv, counters.back()}, pick(rng, states));
            }
            g.counters.emplace(Key2{i, mv}, FiniteSet(std::move(counters)));
            moves.push_back(std::move(mv));
        }
        g.moves.emplace(i, FiniteSet(std::move(moves)));
    }
    return g;
}

Element random_element(Rng& rng, int depth)
{
    static const char* names[] = {"a", "b", "c", "h", "t"};
    auto leaf = [&]() { return coin(rng, 20) ? Element::star() : atom(names[uniform(rng, 0, 4)]); };
    if (depth <= 0 || coin(rng, 30))
        return leaf();
    auto items = [&]() {
        std::vector<Element> xs;
        std::size_t n = uniform(rng, 0, 3);
        for (std::size_t k = 0; k < n; ++k)
            xs.push_back(random_element(rng, depth - 1));
        return xs;
    };
    switch (uniform(rng, 0, 3)) {
    case 0:
        return pair(random_element(rng, depth - 1), random_element(rng, depth - 1));
    case 1:
        return tuple(items());
    case 2: {
        // Built unsorted on purpose.
        return Element::raw_mset(items());
    }
    default: {
        std::vector<Element::Binding> graph;
        std::size_t n = uniform(rng, 0, 3);
        for (std::size_t k = 0; k < n; ++k)
            graph.emplace_back(random_element(rng, depth - 1), random_element(rng, depth - 1));
        return Element::raw_fun(std::move(graph));
    }
    }
}

Simulation random_simulation(Rng& rng, GameRef src, GameRef dst, std::size_t max_apex)
{
    const Game& p1 = *src;
    const Game& p2 = *dst;
    Simulation s = zero_sim(src, dst);
    if (p1.states.empty() || p2.states.empty() || max_apex == 0)
        return s;

    FiniteSet closed = max_simulation_relation(p1, p2);
    std::size_t n = uniform(rng, 1, max_apex);
    std::vector<Element> apex;
    for (std::size_t k = 0; k < n; ++k) {
        Element legs = !closed.empty() && coin(rng, 75) ? pick(rng, closed)
                                                         : pair(pick(rng, p1.states), pick(rng, p2.states));
        Element r = name('r', k);
        s.leg1.emplace(r, legs.fst());
        s.leg2.emplace(r, legs.snd());
        apex.push_back(std::move(r));
    }

    // Apex elements covering a given pair of states.
    auto covering = [&](const std::vector<Element>& live, const Element& i1, const Element& i2) {
        std::vector<Element> out;
        for (const auto& r : live)
            if (s.leg1.at(r) == i1 && s.leg2.at(r) == i2)
                out.push_back(r);
        return out;
    };
    auto answers = [&](const std::vector<Element>& live, const Element& r, const Element& a1, const Element& a2) {
        const Element& i1 = s.leg1.at(r);
        const Element& i2 = s.leg2.at(r);
        for (const auto& d2 : p2.counters_at(i2, a2)) {
            bool ok = false;
            for (const auto& d1 : p1.counters_at(i1, a1))
                ok = ok || !covering(live, p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2)).empty();
            if (!ok)
                return false;
        }
        return true;
    };
    auto feasible = [&](const std::vector<Element>& live, const Element& r) {
        for (const auto& a1 : p1.moves_at(s.leg1.at(r))) {
            bool ok = false;
            for (const auto& a2 : p2.moves_at(s.leg2.at(r)))
                ok = ok || answers(live, r, a1, a2);
            if (!ok)
                return false;
        }
        return true;
    };
    while (true) {
        std::vector<Element> kept;
        std::copy_if(apex.begin(), apex.end(), std::back_inserter(kept),
                     [&](const Element& r) { return feasible(apex, r); });
        if (kept.size() == apex.size())
            break;
        apex = std::move(kept);
    }
    FiniteSet live(apex);
    for (auto it = s.leg1.begin(); it != s.leg1.end();)
        it = live.contains(it->first) ? std::next(it) : s.leg1.erase(it);
    for (auto it = s.leg2.begin(); it != s.leg2.end();)
        it = live.contains(it->first) ? std::next(it) : s.leg2.erase(it);
    s.apex = live;

    for (const auto& r : apex) {
        const Element& i1 = s.leg1.at(r);
        const Element& i2 = s.leg2.at(r);
        for (const auto& a1 : p1.moves_at(i1)) {
            std::vector<Element> good;
            for (const auto& a2 : p2.moves_at(i2))
                if (answers(apex, r, a1, a2))
                    good.push_back(a2);
            Element a2 = pick(rng, good);
            s.alpha.emplace(Key2{r, a1}, a2);
            for (const auto& d2 : p2.counters_at(i2, a2)) {
                std::vector<Key2> options;
                for (const auto& d1 : p1.counters_at(i1, a1))
                    for (auto& g : covering(apex, p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2)))
                        options.emplace_back(d1, g);
                const Key2& choice = pick(rng, options);
                s.beta.emplace(Key3{r, a1, d2}, choice.first);
                s.gamma.emplace(Key3{r, a1, d2}, choice.second);
            }
        }
    }
    return s;
}

Simulation random_candidate(Rng& rng, GameRef src, GameRef dst, std::size_t max_apex)
{
    const Game& p1 = *src;
    const Game& p2 = *dst;
    Simulation s;
    if (coin(rng, 60)) {
        s = random_simulation(rng, src, dst, max_apex);
    } else {
        s = zero_sim(src, dst);
        if (!p1.states.empty() && !p2.states.empty()) {
            std::size_t n = uniform(rng, 1, max_apex);
            std::vector<Element> apex;
            for (std::size_t k = 0; k < n; ++k) {
                Element r = name('r', k);
                s.leg1.emplace(r, pick(rng, p1.states));
                s.leg2.emplace(r, pick(rng, p2.states));
                apex.push_back(r);
            }
            s.apex = FiniteSet(apex);
            for (const auto& r : apex)
                for (const auto& a1 : p1.moves_at(s.leg1.at(r))) {
                    const FiniteSet& a2s = p2.moves_at(s.leg2.at(r));
                    if (a2s.empty())
                        continue;
                    const Element& a2 = pick(rng, a2s);
                    s.alpha.emplace(Key2{r, a1}, a2);
                    const FiniteSet& d1s = p1.counters_at(s.leg1.at(r), a1);
                    for (const auto& d2 : p2.counters_at(s.leg2.at(r), a2)) {
                        if (!d1s.empty())
                            s.beta.emplace(Key3{r, a1, d2}, pick(rng, d1s));
                        s.gamma.emplace(Key3{r, a1, d2}, pick(rng, apex));
                    }
                }
        }
    }

    std::size_t mutations = uniform(rng, 0, 2);
    auto moves2 = all_moves(p2);
    auto counters1 = all_counters(p1);
    for (std::size_t m = 0; m < mutations; ++m) {
        switch (uniform(rng, 0, 6)) {
        case 0:
            if (!s.alpha.empty() && !moves2.empty()) {
                auto it = std::next(s.alpha.begin(), uniform(rng, 0, s.alpha.size() - 1));
                it->second = pick(rng, moves2);
            }
            break;
        case 1:
            if (!s.beta.empty() && !counters1.empty()) {
                auto it = std::next(s.beta.begin(), uniform(rng, 0, s.beta.size() - 1));
                it->second = pick(rng, counters1);
            }
            break;
        case 2:
            if (!s.gamma.empty()) {
                auto it = std::next(s.gamma.begin(), uniform(rng, 0, s.gamma.size() - 1));
                it->second = pick(rng, s.apex);
            }
            break;
        case 3:
            if (!s.beta.empty())
                s.beta.erase(std::next(s.beta.begin(), uniform(rng, 0, s.beta.size() - 1)));
            break;
        case 4:
            if (!s.apex.empty() && !moves2.empty())
                s.alpha.emplace(Key2{pick(rng, s.apex), atom("extra")}, pick(rng, moves2));
            break;
        case 5:
            if (!s.apex.empty())
                s.leg2[pick(rng, s.apex)] = pick(rng, p2.states);
            break;
        default:
            if (!p1.states.empty() && !p2.states.empty()) {
                Element r = name('x', m);
                auto v = s.apex.elements();
                v.push_back(r);
                s.apex = FiniteSet(std::move(v));
                s.leg1[r] = pick(rng, p1.states);
                s.leg2[r] = pick(rng, p2.states);
            }
            break;
        }
    }
    return s;
}

Span random_span(Rng& rng, const FiniteSet& from, const FiniteSet& to, std::size_t max_apex)
{
    Span s{from, to, {}, {}, {}};
    if (from.empty() || to.empty())
        return s;
    std::size_t n = uniform(rng, 0, max_apex);
    std::vector<Element> apex;
    for (std::size_t k = 0; k < n; ++k) {
        Element r = name('r', k);
        s.leg1.emplace(r, pick(rng, from));
        s.leg2.emplace(r, pick(rng, to));
        apex.push_back(std::move(r));
    }
    s.apex = FiniteSet(std::move(apex));
    return s;
}

} // namespace polygame

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

#include "polygame/game.hpp"

#include <algorithm>
#include <functional>

#include "detail.hpp"

namespace polygame {

const FiniteSet& Game::moves_at(const Element& i) const
{
    auto it = moves.find(i);
    if (it == moves.end())
        throw ShapeError("no move table for state " + polygame::to_string(i));
    return it->second;
}

const FiniteSet& Game::counters_at(const Element& i, const Element& a) const
{
    auto it = counters.find(Key2{i, a});
    if (it == counters.end())
        throw ShapeError("no counter table for (state, move) " + polygame::to_string(tuple({i, a})));
    return it->second;
}

const Element& Game::next_state(const Element& i, const Element& a, const Element& d) const
{
    auto it = next.find(Key3{i, a, d});
    if (it == next.end())
        throw ShapeError("no next entry for " + polygame::to_string(tuple({i, a, d})));
    return it->second;
}

void Game::add_transition(const Element& i, const Element& a, const Element& d, const Element& j)
{
    auto add = [](FiniteSet& s, const Element& e) {
        if (!s.contains(e)) {
            auto v = s.elements();
            v.push_back(e);
            s = FiniteSet(std::move(v));
        }
    };
    add(states, i);
    add(moves[i], a);
    add(counters[Key2{i, a}], d);
    next[Key3{i, a, d}] = j;
}

Diagnostics validate_game(const Game& g)
{
    Diagnostics out;
    auto key = [](std::vector<Element> parts) { return to_string(tuple(std::move(parts))); };

    auto check_element = [&out](const Element& e, const std::string& where) {
        for (auto& msg : element_diagnostics(e))
            out.push_back({"malformed element " + msg, where});
    };

    for (const auto& i : g.states)
        check_element(i, to_string(i));

    for (const auto& i : g.states) {
        auto mit = g.moves.find(i);
        if (mit == g.moves.end()) {
            out.push_back({"missing move table", to_string(i)});
            continue;
        }
        for (const auto& a : mit->second) {
            auto cit = g.counters.find(Key2{i, a});
            if (cit == g.counters.end()) {
                out.push_back({"missing counter table", key({i, a})});
                continue;
            }
            for (const auto& d : cit->second) {
                auto nit = g.next.find(Key3{i, a, d});
                if (nit == g.next.end())
                    out.push_back({"missing next entry", key({i, a, d})});
                else if (!g.states.contains(nit->second))
                    out.push_back({"next state " + to_string(nit->second) + " is not a state",
                                   key({i, a, d})});
            }
        }
    }

    for (const auto& [i, as] : g.moves)
        if (!g.states.contains(i))
            out.push_back({"move table for unknown state", to_string(i)});
    for (const auto& [k, ds] : g.counters) {
        const auto& [i, a] = k;
        auto mit = g.moves.find(i);
        if (mit == g.moves.end() || !mit->second.contains(a))
            out.push_back({"counter table for invalid (state, move)", key({i, a})});
    }
    for (const auto& [k, j] : g.next) {
        const auto& [i, a, d] = k;
        auto cit = g.counters.find(Key2{i, a});
        if (cit == g.counters.end() || !cit->second.contains(d))
            out.push_back({"next entry for invalid (state, move, counter)", key({i, a, d})});
    }
    return out;
}

using detail::sat_add;
using detail::sat_mul;

std::size_t extension_size(const Game& g, const FamilySet& x, const Element& i)
{
    std::size_t total = 0;
    for (const auto& a : g.moves_at(i)) {
        std::size_t prod = 1;
        for (const auto& d : g.counters_at(i, a))
            prod = sat_mul(prod, x.fiber.at(g.next_state(i, a, d)).size());
        total = sat_add(total, prod);
    }
    return total;
}

FamilySet extend(const Game& g, const FamilySet& x, const Limits& limits)
{
    if (!(x.base == g.states))
        throw ShapeError("extend: family base differs from the game's states");
    for (const auto& i : g.states)
        if (!x.fiber.count(i))
            throw ShapeError("extend: family has no fibre at " + to_string(i));

    FamilySet out;
    out.base = g.states;
    for (const auto& i : g.states) {
        std::size_t n = extension_size(g, x, i);
        if (n > limits.max_enum)
            throw SizingError("extend: fibre at " + to_string(i) + " has " + std::to_string(n) +
                              " elements, above the bound " + std::to_string(limits.max_enum));
        std::vector<Element> elems;
        elems.reserve(n);
        for (const auto& a : g.moves_at(i)) {
            const auto& ds = g.counters_at(i, a);
            std::vector<const FiniteSet*> cods;
            for (const auto& d : ds)
                cods.push_back(&x.fiber.at(g.next_state(i, a, d)));
            for (auto& f : dependent_functions(ds.elements(), cods))
                elems.push_back(pair(a, std::move(f)));
        }
        out.fiber.emplace(i, FiniteSet(std::move(elems)));
    }
    return out;
}

Game from_symmetric_game(const FiniteSet& states, const MoveSpan& a_span, const MoveSpan& d_span)
{
    Game g;
    g.states = states;
    for (const auto& i : states) {
        auto ait = a_span.moves.find(i);
        if (ait == a_span.moves.end())
            throw ValidationError("from_symmetric_game: a_span has no move table at " + to_string(i));
        g.moves[i] = ait->second;
        for (const auto& a : ait->second) {
            auto nit = a_span.next.find(Key2{i, a});
            if (nit == a_span.next.end())
                throw ValidationError("from_symmetric_game: a_span has no next entry at " +
                                      to_string(tuple({i, a})));
            const Element& mid = nit->second;
            if (!states.contains(mid))
                throw ValidationError("from_symmetric_game: a_span leads outside the states at " +
                                      to_string(tuple({i, a})));
            auto dit = d_span.moves.find(mid);
            if (dit == d_span.moves.end())
                throw ValidationError("from_symmetric_game: d_span has no move table at " +
                                      to_string(mid));
            g.counters[Key2{i, a}] = dit->second;
            for (const auto& d : dit->second) {
                auto dn = d_span.next.find(Key2{mid, d});
                if (dn == d_span.next.end())
                    throw ValidationError("from_symmetric_game: d_span has no next entry at " +
                                          to_string(tuple({mid, d})));
                g.next[Key3{i, a, d}] = dn->second;
            }
        }
    }
    return g;
}

namespace {

// Shape of a state once states are coloured: multiset over moves of the
// multiset over counters of successor colours.
using StateShape = std::vector<std::vector<std::size_t>>;

StateShape state_shape(const Game& g, const Element& i, const std::map<Element, std::size_t>& colour)
{
    StateShape shape;
    for (const auto& a : g.moves_at(i)) {
        std::vector<std::size_t> succ;
        for (const auto& d : g.counters_at(i, a))
            succ.push_back(colour.at(g.next_state(i, a, d)));
        std::sort(succ.begin(), succ.end());
        shape.push_back(std::move(succ));
    }
    std::sort(shape.begin(), shape.end());
    return shape;
}

} // namespace

bool isomorphic(const Game& g, const Game& h)
{
    if (g.states.size() != h.states.size() || g.move_count() != h.move_count() ||
        g.counter_count() != h.counter_count())
        return false;

    // Joint colour refinement over both state sets.
    std::map<Element, std::size_t> cg, ch;
    for (const auto& i : g.states)
        cg[i] = 0;
    for (const auto& i : h.states)
        ch[i] = 0;
    std::size_t classes = 1;
    while (true) {
        std::map<std::pair<std::size_t, StateShape>, std::size_t> ids;
        std::map<Element, std::size_t> ng, nh;
        auto assign = [&ids](std::size_t old, StateShape s) {
            auto [it, inserted] = ids.emplace(std::make_pair(old, std::move(s)), ids.size());
            return it->second;
        };
        for (const auto& i : g.states)
            ng[i] = assign(cg[i], state_shape(g, i, cg));
        for (const auto& i : h.states)
            nh[i] = assign(ch[i], state_shape(h, i, ch));
        cg = std::move(ng);
        ch = std::move(nh);
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }

    std::vector<std::size_t> hist_g(classes, 0), hist_h(classes, 0);
    for (auto& [i, c] : cg)
        ++hist_g[c];
    for (auto& [i, c] : ch)
        ++hist_h[c];
    if (hist_g != hist_h)
        return false;

    // Backtrack over colour-preserving state bijections; a bijection works when
    // every state's shape matches under it.
    const auto& gs = g.states.elements();
    std::map<Element, std::size_t> pi;
    std::vector<bool> used(h.states.size(), false);

    auto shape_under = [](const Game& game, const Element& i, const std::map<Element, std::size_t>& c) {
        return state_shape(game, i, c);
    };

    std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
        if (pos == gs.size()) {
            std::map<Element, std::size_t> h_index;
            for (std::size_t k = 0; k < h.states.size(); ++k)
                h_index[h.states[k]] = k;
            for (const auto& i : gs)
                if (shape_under(g, i, pi) != shape_under(h, h.states[pi.at(i)], h_index))
                    return false;
            return true;
        }
        for (std::size_t k = 0; k < h.states.size(); ++k) {
            if (used[k] || ch.at(h.states[k]) != cg.at(gs[pos]))
                continue;
            used[k] = true;
            pi[gs[pos]] = k;
            if (search(pos + 1))
                return true;
            used[k] = false;
            pi.erase(gs[pos]);
        }
        return false;
    };
    return search(0);
}

namespace fixtures {

Game unit()
{
    Game g;
    g.add_transition(atom("s"), atom("a"), atom("d"), atom("s"));
    return g;
}

Game coin()
{
    Game g;
    for (const char* side : {"h", "t"})
        for (const char* land : {"h", "t"})
            g.add_transition(atom(side), atom("flip"), atom(std::string("land_") + land), atom(land));
    return g;
}

Game trap()
{
    Game g;
    g.add_transition(atom("ok"), atom("go"), atom("safe"), atom("ok"));
    g.add_transition(atom("ok"), atom("go"), atom("trap"), atom("dead"));
    g.states = FiniteSet{atom("ok"), atom("dead")};
    g.moves[atom("dead")] = FiniteSet{};
    return g;
}

Game oneway()
{
    Game g;
    g.add_transition(atom("ok"), atom("go"), atom("safe"), atom("ok"));
    g.states = FiniteSet{atom("ok"), atom("dead")};
    g.moves[atom("dead")] = FiniteSet{};
    return g;
}

Game empty() { return Game{}; }

} // namespace fixtures

} // namespace polygame

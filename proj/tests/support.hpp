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

// Independent oracles and small helpers shared by the tests. Nothing here
// calls the library routine it is used to check.
#pragma once

#include <set>

#include "polygame/random.hpp"
#include "polygame/simulation.hpp"

namespace polygame::testing {

inline GameRef UNIT() { return share(fixtures::unit()); }
inline GameRef COIN() { return share(fixtures::coin()); }
inline GameRef TRAP() { return share(fixtures::trap()); }
inline GameRef ONEWAY() { return share(fixtures::oneway()); }
inline GameRef EMPTY() { return share(fixtures::empty()); }

inline std::vector<GameRef> all_fixtures() { return {UNIT(), COIN(), TRAP(), ONEWAY(), EMPTY()}; }

inline Element A(const char* s) { return atom(s); }

// Direct reading of the closure condition: for all r and a1 there is the
// tabled a2 such that for all d2 the tabled d1 and r' exist, are legal and
// track both next states. Tables must hold no other entries.
inline bool oracle_valid(const Simulation& s)
{
    const Game& p = *s.src;
    const Game& q = *s.dst;
    std::size_t want_alpha = 0, want_beta = 0;
    if (s.leg1.size() != s.apex.size() || s.leg2.size() != s.apex.size())
        return false;
    for (const auto& r : s.apex) {
        auto l1 = s.leg1.find(r), l2 = s.leg2.find(r);
        if (l1 == s.leg1.end() || l2 == s.leg2.end())
            return false;
        const Element& i1 = l1->second;
        const Element& i2 = l2->second;
        if (!p.states.contains(i1) || !q.states.contains(i2))
            return false;
        for (const auto& a1 : p.moves.at(i1)) {
            ++want_alpha;
            auto al = s.alpha.find({r, a1});
            if (al == s.alpha.end())
                return false;
            const Element& a2 = al->second;
            if (!q.moves.at(i2).contains(a2))
                return false;
            for (const auto& d2 : q.counters.at({i2, a2})) {
                ++want_beta;
                auto be = s.beta.find({r, a1, d2});
                auto ga = s.gamma.find({r, a1, d2});
                if (be == s.beta.end() || ga == s.gamma.end())
                    return false;
                const Element& d1 = be->second;
                if (!p.counters.at({i1, a1}).contains(d1))
                    return false;
                const Element& r2 = ga->second;
                if (!s.apex.contains(r2))
                    return false;
                if (!(s.leg1.at(r2) == p.next.at({i1, a1, d1})) || !(s.leg2.at(r2) == q.next.at({i2, a2, d2})))
                    return false;
            }
        }
    }
    return s.alpha.size() == want_alpha && s.beta.size() == want_beta && s.gamma.size() == want_beta;
}

// Every relation R on states closed under the simulation step is contained
// in the greatest one; brute force over all 2^(|I1||I2|) relations.
inline bool closed_relation(const Game& p, const Game& q, const std::set<std::pair<Element, Element>>& rel)
{
    for (const auto& [i1, i2] : rel) {
        for (const auto& a1 : p.moves.at(i1)) {
            bool some_a2 = false;
            for (const auto& a2 : q.moves.at(i2)) {
                bool all_d2 = true;
                for (const auto& d2 : q.counters.at({i2, a2})) {
                    bool some_d1 = false;
                    for (const auto& d1 : p.counters.at({i1, a1}))
                        some_d1 = some_d1 || rel.count({p.next.at({i1, a1, d1}), q.next.at({i2, a2, d2})});
                    all_d2 = all_d2 && some_d1;
                }
                some_a2 = some_a2 || all_d2;
            }
            if (!some_a2)
                return false;
        }
    }
    return true;
}

inline std::set<std::pair<Element, Element>> brute_max_relation(const Game& p, const Game& q)
{
    std::vector<std::pair<Element, Element>> all;
    for (const auto& i1 : p.states)
        for (const auto& i2 : q.states)
            all.emplace_back(i1, i2);
    std::set<std::pair<Element, Element>> best;
    for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
        std::set<std::pair<Element, Element>> rel;
        for (std::size_t j = 0; j < all.size(); ++j)
            if ((mask >> j) & 1)
                rel.insert(all[j]);
        if (closed_relation(p, q, rel))
            best.insert(rel.begin(), rel.end());
    }
    return best;
}

inline std::size_t binom(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

} // namespace polygame::testing

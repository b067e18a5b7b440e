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

#include "polygame/exponential.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "polygame/smcc.hpp"

#include "detail.hpp"

namespace polygame {

using detail::sat_add;
using detail::sat_mul;
using detail::sat_pow;

Element orbit(const Element& word)
{
    auto items = word.items();
    return Element::mset(std::vector<Element>(items.begin(), items.end()));
}

Element section(const Element& mset)
{
    auto items = mset.items();
    return tuple(std::vector<Element>(items.begin(), items.end()));
}

Element act(const Perm& sigma, const Element& word)
{
    if (sigma.size() != word.size())
        throw ShapeError("act: permutation and word differ in length");
    std::vector<Element> out;
    out.reserve(sigma.size());
    for (std::size_t j : sigma)
        out.push_back(word[j]);
    return tuple(std::move(out));
}

Perm inverse(const Perm& sigma)
{
    Perm inv(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
        inv[sigma[j]] = j;
    return inv;
}

Perm then(const Perm& s, const Perm& t)
{
    Perm out(t.size());
    for (std::size_t j = 0; j < t.size(); ++j)
        out[j] = s[t[j]];
    return out;
}

std::vector<Perm> all_perms(std::size_t k)
{
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::optional<Perm> matching_perm(const Element& from, const Element& to)
{
    if (from.size() != to.size())
        return std::nullopt;
    // Greedy: position j takes the first unused index holding to_j, which
    // yields the lexicographically least permutation.
    Perm sigma(to.size());
    std::vector<bool> used(from.size(), false);
    for (std::size_t j = 0; j < to.size(); ++j) {
        std::size_t i = 0;
        while (i < from.size() && (used[i] || !(from[i] == to[j])))
            ++i;
        if (i == from.size())
            return std::nullopt;
        used[i] = true;
        sigma[j] = i;
    }
    return sigma;
}

namespace {

// Cartesian product, last factor varying fastest.
std::vector<std::vector<Element>> product(const std::vector<const FiniteSet*>& factors)
{
    std::vector<std::vector<Element>> out;
    for (const FiniteSet* f : factors)
        if (f->empty())
            return out;
    std::vector<std::size_t> digit(factors.size(), 0);
    while (true) {
        std::vector<Element> row;
        row.reserve(factors.size());
        for (std::size_t n = 0; n < factors.size(); ++n)
            row.push_back((*factors[n])[digit[n]]);
        out.push_back(std::move(row));
        std::size_t pos = factors.size();
        while (true) {
            if (pos == 0)
                return out;
            --pos;
            if (++digit[pos] < factors[pos]->size())
                break;
            digit[pos] = 0;
        }
    }
}

void multisets_rec(const FiniteSet& s, std::size_t from, std::size_t left, std::vector<Element>& cur,
                   std::vector<Element>& out)
{
    if (left == 0) {
        out.push_back(Element::mset(cur));
        return;
    }
    for (std::size_t n = from; n < s.size(); ++n) {
        cur.push_back(s[n]);
        multisets_rec(s, n, left - 1, cur, out);
        cur.pop_back();
    }
}

// C(n + k - 1, k), saturating.
std::size_t multiset_count(std::size_t n, std::size_t k)
{
    if (n == 0)
        return k == 0 ? 1 : 0;
    std::size_t r = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        r = sat_mul(r, n - 1 + j);
        if (r == detail::kSaturated)
            return r;
        r /= j;
    }
    return r;
}

void guard(std::size_t n, const Limits& limits, const std::string& what)
{
    if (n > limits.max_enum)
        throw SizingError(what + ": " + (n == detail::kSaturated ? std::string("too many") : std::to_string(n)) +
                          " elements exceed the bound " + std::to_string(limits.max_enum));
}

Element concat(const Element& head, const Element& word)
{
    std::vector<Element> items{head};
    for (const auto& x : word.items())
        items.push_back(x);
    return tuple(std::move(items));
}

std::vector<Element> items_of(const Element& e) { return {e.items().begin(), e.items().end()}; }

Element state_word(const Element& move_word)
{
    std::vector<Element> out;
    for (const auto& x : move_word.items())
        out.push_back(x.fst());
    return tuple(std::move(out));
}

void merge_into(Game& out, const Game& g)
{
    std::vector<Element> states = out.states.elements();
    states.insert(states.end(), g.states.begin(), g.states.end());
    out.states = FiniteSet(std::move(states));
    out.moves.insert(g.moves.begin(), g.moves.end());
    out.counters.insert(g.counters.begin(), g.counters.end());
    out.next.insert(g.next.begin(), g.next.end());
}

} // namespace

std::vector<Element> multisets(const FiniteSet& s, std::size_t k)
{
    std::vector<Element> out, cur;
    multisets_rec(s, 0, k, cur, out);
    return out;
}

std::vector<Element> words(const FiniteSet& s, std::size_t k)
{
    std::vector<const FiniteSet*> factors(k, &s);
    std::vector<Element> out;
    for (auto& row : product(factors))
        out.push_back(tuple(std::move(row)));
    return out;
}

Game power_game(const Game& p, std::size_t k, const Limits& limits)
{
    guard(multiset_count(p.states.size(), k), limits, "power_game states");
    Game g;
    std::vector<Element> states = multisets(p.states, k);
    g.states = FiniteSet(states);
    for (const auto& m : states) {
        std::vector<Element> order = items_of(m);
        // Size first: distinct orderings times move choices.
        std::size_t count = 0;
        do {
            std::size_t n = 1;
            for (const auto& i : order)
                n = sat_mul(n, p.moves_at(i).size());
            count = sat_add(count, n);
        } while (std::next_permutation(order.begin(), order.end()));
        guard(count, limits, "power_game moves at " + to_string(m));

        std::vector<Element> moves;
        do {
            std::vector<const FiniteSet*> choices;
            for (const auto& i : order)
                choices.push_back(&p.moves_at(i));
            for (auto& as : product(choices)) {
                std::vector<Element> word;
                std::vector<const FiniteSet*> ds;
                for (std::size_t j = 0; j < k; ++j) {
                    word.push_back(pair(order[j], as[j]));
                    ds.push_back(&p.counters_at(order[j], as[j]));
                }
                Element a = tuple(std::move(word));
                std::size_t nd = 1;
                for (auto* d : ds)
                    nd = sat_mul(nd, d->size());
                guard(nd, limits, "power_game counters of " + to_string(a));
                std::vector<Element> counters;
                for (auto& dvec : product(ds)) {
                    std::vector<Element> nexts;
                    for (std::size_t j = 0; j < k; ++j)
                        nexts.push_back(p.next_state(order[j], as[j], dvec[j]));
                    Element d = tuple(std::move(dvec));
                    g.next.emplace(Key3{m, a, d}, Element::mset(std::move(nexts)));
                    counters.push_back(std::move(d));
                }
                g.counters.emplace(Key2{m, a}, FiniteSet(std::move(counters)));
                moves.push_back(std::move(a));
            }
        } while (std::next_permutation(order.begin(), order.end()));
        g.moves.emplace(m, FiniteSet(std::move(moves)));
    }
    return g;
}

Game tensor_power(const Game& p, std::size_t k, const Limits& limits)
{
    guard(sat_pow(p.states.size(), k), limits, "tensor_power states");
    Game g;
    std::vector<Element> states = words(p.states, k);
    g.states = FiniteSet(states);
    for (const auto& w : states) {
        std::vector<const FiniteSet*> choices;
        std::size_t n = 1;
        for (const auto& i : w.items()) {
            choices.push_back(&p.moves_at(i));
            n = sat_mul(n, choices.back()->size());
        }
        guard(n, limits, "tensor_power moves at " + to_string(w));
        std::vector<Element> moves;
        for (auto& as : product(choices)) {
            Element a = tuple(as);
            std::vector<const FiniteSet*> ds;
            for (std::size_t j = 0; j < k; ++j)
                ds.push_back(&p.counters_at(w[j], as[j]));
            std::vector<Element> counters;
            for (auto& dvec : product(ds)) {
                std::vector<Element> nexts;
                for (std::size_t j = 0; j < k; ++j)
                    nexts.push_back(p.next_state(w[j], as[j], dvec[j]));
                Element d = tuple(std::move(dvec));
                g.next.emplace(Key3{w, a, d}, tuple(std::move(nexts)));
                counters.push_back(std::move(d));
            }
            g.counters.emplace(Key2{w, a}, FiniteSet(std::move(counters)));
            moves.push_back(std::move(a));
        }
        g.moves.emplace(w, FiniteSet(std::move(moves)));
    }
    return g;
}

Simulation symmetry_sim(GameRef tensor_pow, std::size_t k, const Perm& sigma)
{
    if (sigma.size() != k)
        throw ShapeError("symmetry_sim: permutation has the wrong length");
    Perm inv = inverse(sigma);
    return graph_sim(
        tensor_pow, tensor_pow, [&](const Element& w) { return act(sigma, w); },
        [&](const Element&, const Element& a) { return act(sigma, a); },
        [&](const Element&, const Element&, const Element& d) { return act(inv, d); });
}

Simulation chat(GameRef p, std::size_t k, const Limits& limits)
{
    auto src = share(power_game(*p, k, limits));
    auto dst = share(tensor_power(*p, k, limits));
    std::map<Element, Element> leg1, leg2;
    for (const auto& w : dst->states) {
        leg1.emplace(w, orbit(w));
        leg2.emplace(w, w);
    }
    auto sigma = [](const Element& w, const Element& a) { return *matching_perm(state_word(a), w); };
    auto answer = [&](const Element& w, const Element& a) {
        std::vector<Element> out;
        Element permuted = act(sigma(w, a), a);
        for (const auto& x : permuted.items())
            out.push_back(x.snd());
        return tuple(std::move(out));
    };
    const Game& g = *p;
    return tabulate(
        src, dst, dst->states, std::move(leg1), std::move(leg2), answer,
        [&](const Element& w, const Element& a, const Element& d) { return act(inverse(sigma(w, a)), d); },
        [&](const Element& w, const Element& a, const Element& d) {
            Element b = answer(w, a);
            std::vector<Element> nexts;
            for (std::size_t j = 0; j < k; ++j)
                nexts.push_back(g.next_state(w[j], b[j], d[j]));
            return tuple(std::move(nexts));
        });
}

namespace {

Element map_word(const ElementMap& g, const Element& word)
{
    std::vector<Element> out;
    for (const auto& x : word.items())
        out.push_back(g.at(x));
    return tuple(std::move(out));
}

} // namespace

ElementMap permutation_transport(const ElementMap& h, const ElementMap& g, const FiniteSet& v, std::size_t k)
{
    ElementMap rho;
    for (const auto& w : words(v, k)) {
        Element u = map_word(g, w);
        auto it = h.find(u);
        if (it == h.end())
            throw ShapeError("permutation_transport: h undefined at " + to_string(u));
        auto sigma = matching_perm(u, it->second);
        if (!sigma)
            throw ValidationError("permutation_transport: h does not preserve the orbit of " + to_string(u));
        rho.emplace(w, act(*sigma, w));
    }
    return rho;
}

std::vector<std::string> check_transport_square(const ElementMap& h, const ElementMap& g, const ElementMap& rho,
                                                const FiniteSet& v, std::size_t k)
{
    std::vector<std::string> out;
    auto vk = words(v, k);
    std::map<Key2, int> hits;
    for (const auto& w : vk) {
        auto it = rho.find(w);
        if (it == rho.end()) {
            out.push_back("rho undefined at " + to_string(w));
            continue;
        }
        if (!(orbit(it->second) == orbit(w)))
            out.push_back("rho changes the orbit of " + to_string(w));
        Element u = map_word(g, w);
        if (!(map_word(g, it->second) == h.at(u)))
            out.push_back("square does not commute at " + to_string(w));
        ++hits[Key2{u, it->second}];
    }
    // Pullback: w -> (g^k w, rho w) must be a bijection onto
    // {(u, w') : h(u) = g^k(w')}.
    std::size_t pullback = 0;
    for (const auto& [u, hu] : h)
        for (const auto& w2 : vk)
            if (map_word(g, w2) == hu) {
                ++pullback;
                if (hits[Key2{u, w2}] != 1)
                    out.push_back("pullback element " + to_string(pair(u, w2)) + " hit " +
                                  std::to_string(hits[Key2{u, w2}]) + " times");
            }
    if (pullback != vk.size())
        out.push_back("square is not a pullback: " + std::to_string(pullback) + " pullback elements for " +
                      std::to_string(vk.size()) + " words");
    return out;
}

SymWitness find_witnesses(const FiniteSet& apex, const ElementMap& j, const ElementMap& f, std::size_t k)
{
    std::map<Key2, std::vector<Element>> groups;
    for (const auto& r : apex)
        groups[Key2{j.at(r), f.at(r)}].push_back(r);
    SymWitness out;
    for (const auto& sigma : all_perms(k)) {
        ElementMap h;
        for (const auto& [key, rs] : groups) {
            auto it = groups.find(Key2{key.first, act(sigma, key.second)});
            if (it == groups.end() || it->second.size() != rs.size())
                throw NotEqualizing("no symmetry witness: the span is not invariant under the permutation "
                                    "taking " + to_string(key.second) + " to " +
                                    to_string(act(sigma, key.second)));
            for (std::size_t n = 0; n < rs.size(); ++n)
                h.emplace(rs[n], it->second[n]);
        }
        out.emplace(sigma, std::move(h));
    }
    return out;
}

std::vector<std::string> check_witnesses(const SymWitness& w, const FiniteSet& apex, const ElementMap& j,
                                         const ElementMap& f, std::size_t k)
{
    std::vector<std::string> out;
    for (const auto& sigma : all_perms(k)) {
        auto it = w.find(sigma);
        if (it == w.end()) {
            out.push_back("missing witness for a permutation");
            continue;
        }
        std::map<Element, int> image;
        for (const auto& r : apex) {
            auto h = it->second.find(r);
            if (h == it->second.end() || !apex.contains(h->second)) {
                out.push_back("witness undefined or outside the apex at " + to_string(r));
                continue;
            }
            ++image[h->second];
            if (!(f.at(h->second) == act(sigma, f.at(r))) || !(j.at(h->second) == j.at(r)))
                out.push_back("witness condition fails at " + to_string(r));
        }
        if (image.size() != apex.size())
            out.push_back("witness is not a bijection");
    }
    return out;
}

Simulation factor_through_power(const Simulation& s, GameRef p, std::size_t k,
                                const std::optional<SymWitness>& witnesses, const Limits& limits)
{
    if (!(s.p2() == tensor_power(*p, k, limits)))
        throw ShapeError("factor_through_power: target is not the tensor power of the given game");
    SymWitness w;
    if (witnesses) {
        auto bad = check_witnesses(*witnesses, s.apex, s.leg1, s.leg2, k);
        if (!bad.empty())
            throw WitnessError("factor_through_power: " + bad.front());
        w = *witnesses;
    } else {
        w = find_witnesses(s.apex, s.leg1, s.leg2, k);
    }

    auto power = share(power_game(*p, k, limits));
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& r : s.apex) {
        const Element& word = s.leg2.at(r);
        Element m = orbit(word);
        if (!(section(m) == word))
            continue;
        leg1.emplace(r, s.leg1.at(r));
        leg2.emplace(r, m);
        apex.push_back(r);
    }
    return tabulate(
        s.src, power, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [&](const Element& r, const Element& b) {
            const Element& word = s.leg2.at(r);
            const Element& as = s.alpha.at(Key2{r, b});
            std::vector<Element> out;
            for (std::size_t n = 0; n < k; ++n)
                out.push_back(pair(word[n], as[n]));
            return tuple(std::move(out));
        },
        [&](const Element& r, const Element& b, const Element& d) { return s.beta.at(Key3{r, b, d}); },
        [&](const Element& r, const Element& b, const Element& d) {
            const Element& g = s.gamma.at(Key3{r, b, d});
            const Element& word = s.leg2.at(g);
            Perm sigma = *matching_perm(word, section(orbit(word)));
            return w.at(sigma).at(g);
        });
}

Game bang(const Game& p, std::size_t bound, const Limits& limits)
{
    Game g;
    for (std::size_t k = 0; k <= bound; ++k)
        merge_into(g, power_game(p, k, limits));
    return g;
}

Simulation counit_sim(GameRef p, std::size_t bound, const Limits& limits)
{
    auto src = share(bang(*p, bound, limits));
    Element empty = Element::mset({});
    Element r = pair(empty, Element::star());
    return tabulate(
        src, share(unit_game()), FiniteSet{r}, {{r, empty}}, {{r, Element::star()}},
        [](const Element&, const Element&) { return Element::star(); },
        [](const Element&, const Element&, const Element&) { return tuple({}); },
        [](const Element& r, const Element&, const Element&) { return r; });
}

namespace {

// Positions of the move word that go to the left part m1: each position
// takes a copy of its state from m1 while m1 still has one. For m1 > m2
// the split is the mirror of (m2, m1), so swapping the parts swaps the
// halves of the split.
std::vector<bool> split_positions(const Element& word, const Element& m1, const Element& m2)
{
    if (m2 < m1) {
        auto v = split_positions(word, m2, m1);
        v.flip();
        return v;
    }
    std::map<Element, std::size_t> left;
    for (const auto& i : m1.items())
        ++left[i];
    std::vector<bool> to_left;
    for (const auto& x : word.items()) {
        auto it = left.find(x.fst());
        bool l = it != left.end() && it->second > 0;
        if (l)
            --it->second;
        to_left.push_back(l);
    }
    return to_left;
}

Element orbit_of(const std::vector<Element>& xs) { return Element::mset(xs); }

} // namespace

Simulation comul_sim(GameRef p, std::size_t bound, const Limits& limits)
{
    auto b = share(bang(*p, bound, limits));
    auto dst = share(tensor(*b, *b));
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& m : b->states) {
        // Distinct sub-multisets m1 of m.
        std::vector<Element> items = items_of(m);
        std::set<Element> seen;
        for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
            std::vector<Element> x, y;
            for (std::size_t n = 0; n < items.size(); ++n)
                ((mask >> n) & 1 ? x : y).push_back(items[n]);
            Element m1 = orbit_of(x), m2 = orbit_of(y);
            if (!seen.insert(m1).second)
                continue;
            Element r = pair(m, pair(m1, m2));
            leg1.emplace(r, m);
            leg2.emplace(r, pair(m1, m2));
            apex.push_back(std::move(r));
        }
    }

    struct Layout {
        std::vector<std::size_t> left, right;
        bool paired = false;   // equal parts with equal sub-words
    };
    auto layout = [](const Element& r, const Element& a) {
        const Element& m1 = r.snd().fst();
        const Element& m2 = r.snd().snd();
        auto to_left = split_positions(a, m1, m2);
        Layout l;
        for (std::size_t n = 0; n < a.size(); ++n)
            (to_left[n] ? l.left : l.right).push_back(n);
        if (m1 == m2) {
            l.paired = true;
            for (std::size_t t = 0; t < l.left.size(); ++t)
                l.paired = l.paired && a[l.left[t]] == a[l.right[t]];
        }
        return l;
    };
    auto sub = [](const Element& a, const std::vector<std::size_t>& pos) {
        std::vector<Element> out;
        for (std::size_t n : pos)
            out.push_back(a[n]);
        return tuple(std::move(out));
    };
    auto parts = [&](const Element& r, const Element& a) {
        auto l = layout(r, a);
        return pair(sub(a, l.left), sub(a, l.right));
    };
    // Counter words merge back position by position. When both halves are
    // the same sub-word, paired positions get their two counters in sorted
    // order, so the merge does not depend on which half is which.
    auto merged = [&](const Element& r, const Element& a, const Element& d) {
        auto l = layout(r, a);
        std::vector<Element> e(a.size());
        for (std::size_t t = 0; t < l.left.size(); ++t)
            e[l.left[t]] = d.fst()[t];
        for (std::size_t t = 0; t < l.right.size(); ++t)
            e[l.right[t]] = d.snd()[t];
        if (l.paired)
            for (std::size_t t = 0; t < l.left.size(); ++t) {
                std::size_t lo = std::min(l.left[t], l.right[t]), hi = std::max(l.left[t], l.right[t]);
                if (e[hi] < e[lo])
                    std::swap(e[lo], e[hi]);
            }
        return tuple(std::move(e));
    };
    const Game& g = *p;
    return tabulate(b, dst, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2), parts, merged,
                    [&](const Element& r, const Element& a, const Element& d) {
                        auto l = layout(r, a);
                        Element e = merged(r, a, d);
                        std::vector<Element> all, x, y;
                        for (std::size_t n = 0; n < a.size(); ++n)
                            all.push_back(g.next_state(a[n].fst(), a[n].snd(), e[n]));
                        for (std::size_t t = 0; t < l.left.size(); ++t)
                            x.push_back(g.next_state(a[l.left[t]].fst(), a[l.left[t]].snd(), d.fst()[t]));
                        for (std::size_t t = 0; t < l.right.size(); ++t)
                            y.push_back(g.next_state(a[l.right[t]].fst(), a[l.right[t]].snd(), d.snd()[t]));
                        return pair(orbit_of(all), pair(orbit_of(x), orbit_of(y)));
                    });
}

Simulation dereliction_sim(GameRef p, std::size_t bound, const Limits& limits)
{
    if (bound == 0)
        throw ShapeError("dereliction_sim: bound must be at least 1");
    auto src = share(bang(*p, bound, limits));
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& i : p->states) {
        Element r = pair(Element::mset({i}), i);
        leg1.emplace(r, r.fst());
        leg2.emplace(r, i);
        apex.push_back(std::move(r));
    }
    const Game& g = *p;
    return tabulate(
        src, p, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [](const Element&, const Element& a) { return a[0].snd(); },
        [](const Element&, const Element&, const Element& d) { return tuple({d}); },
        [&](const Element& r, const Element& a, const Element& d) {
            Element n = g.next_state(r.snd(), a[0].snd(), d);
            return pair(Element::mset({n}), n);
        });
}

namespace {

struct Part {
    Element part;
    std::vector<std::size_t> positions;
};

// Distributes the positions of a move word over the parts of M: parts in
// sorted order each take the earliest free positions holding their states;
// the parts are then ordered by first position, empty parts last.
std::vector<Part> digging_layout(const Element& big_m, const Element& word)
{
    std::vector<bool> used(word.size(), false);
    std::vector<Part> parts;
    for (const auto& part : big_m.items()) {
        Part p{part, {}};
        for (const auto& x : part.items()) {
            std::size_t n = 0;
            while (used[n] || !(word[n].fst() == x))
                ++n;
            used[n] = true;
            p.positions.push_back(n);
        }
        std::sort(p.positions.begin(), p.positions.end());
        parts.push_back(std::move(p));
    }
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
        std::size_t fa = a.positions.empty() ? std::numeric_limits<std::size_t>::max() : a.positions.front();
        std::size_t fb = b.positions.empty() ? std::numeric_limits<std::size_t>::max() : b.positions.front();
        return fa < fb;
    });
    return parts;
}

} // namespace

Simulation digging_sim(GameRef p, std::size_t bound, const Limits& limits)
{
    auto inner = share(bang(*p, bound, limits));
    auto outer = share(bang(*inner, bound, limits));
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& big_m : outer->states) {
        std::vector<Element> all;
        for (const auto& part : big_m.items())
            for (const auto& x : part.items())
                all.push_back(x);
        if (all.size() > bound)
            continue;
        Element r = pair(orbit_of(all), big_m);
        leg1.emplace(r, r.fst());
        leg2.emplace(r, big_m);
        apex.push_back(std::move(r));
    }
    auto scatter = [](const Element& r, const Element& a, const Element& d) {
        std::vector<Element> e(a.size());
        auto layout = digging_layout(r.snd(), a);
        for (std::size_t q = 0; q < layout.size(); ++q)
            for (std::size_t t = 0; t < layout[q].positions.size(); ++t)
                e[layout[q].positions[t]] = d[q][t];
        return tuple(std::move(e));
    };
    const Game& g = *p;
    return tabulate(
        inner, outer, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [](const Element& r, const Element& a) {
            std::vector<Element> out;
            for (auto& part : digging_layout(r.snd(), a)) {
                std::vector<Element> sub;
                for (std::size_t n : part.positions)
                    sub.push_back(a[n]);
                out.push_back(pair(part.part, tuple(std::move(sub))));
            }
            return tuple(std::move(out));
        },
        scatter,
        [&](const Element& r, const Element& a, const Element& d) {
            Element e = scatter(r, a, d);
            std::vector<Element> all, parts;
            for (auto& part : digging_layout(r.snd(), a)) {
                std::vector<Element> sub;
                for (std::size_t n : part.positions)
                    sub.push_back(g.next_state(a[n].fst(), a[n].snd(), e[n]));
                all.insert(all.end(), sub.begin(), sub.end());
                parts.push_back(orbit_of(sub));
            }
            return pair(orbit_of(all), orbit_of(parts));
        });
}

Simulation deriving_sim(GameRef p, std::size_t bound, const Limits& limits)
{
    if (bound == 0)
        throw ShapeError("deriving_sim: bound must be at least 1");
    auto smaller = bang(*p, bound - 1, limits);
    auto src = share(tensor(*p, smaller));
    auto dst = share(bang(*p, bound, limits));
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& i : p->states)
        for (const auto& m : smaller.states) {
            Element whole = orbit(concat(i, section(m)));
            Element r = pair(pair(i, m), whole);
            leg1.emplace(r, pair(i, m));
            leg2.emplace(r, whole);
            apex.push_back(std::move(r));
        }
    const Game& g = *p;
    return tabulate(
        src, dst, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [](const Element& r, const Element& a) { return concat(pair(r.fst().fst(), a.fst()), a.snd()); },
        [](const Element&, const Element&, const Element& d) {
            auto items = d.items();
            return pair(items[0], tuple(std::vector<Element>(items.begin() + 1, items.end())));
        },
        [&](const Element& r, const Element& a, const Element& d) {
            Element n0 = g.next_state(r.fst().fst(), a.fst(), d[0]);
            std::vector<Element> rest;
            for (std::size_t n = 0; n < a.snd().size(); ++n)
                rest.push_back(g.next_state(a.snd()[n].fst(), a.snd()[n].snd(), d[n + 1]));
            Element m = orbit_of(rest);
            rest.push_back(n0);
            return pair(pair(n0, m), orbit_of(rest));
        });
}

namespace {

// Apex element of u serving each position of a !X move word: elements of M
// in sorted order take the earliest free position at their source state.
std::vector<Element> bang_layout(const Simulation& u, const Element& big_m, const Element& word)
{
    std::vector<Element> at(word.size());
    std::vector<bool> used(word.size(), false);
    for (const auto& r : big_m.items()) {
        std::size_t n = 0;
        while (used[n] || !(word[n].fst() == u.leg1.at(r)))
            ++n;
        used[n] = true;
        at[n] = r;
    }
    return at;
}

} // namespace

Simulation bang_sim(const Simulation& u, std::size_t bound, const Limits& limits)
{
    auto src = share(bang(u.p1(), bound, limits));
    auto dst = share(bang(u.p2(), bound, limits));
    guard(multiset_count(u.apex.size(), bound), limits, "bang_sim apex");
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (std::size_t k = 0; k <= bound; ++k)
        for (auto& big_m : multisets(u.apex, k)) {
            std::vector<Element> x, y;
            for (const auto& r : big_m.items()) {
                x.push_back(u.leg1.at(r));
                y.push_back(u.leg2.at(r));
            }
            leg1.emplace(big_m, orbit_of(x));
            leg2.emplace(big_m, orbit_of(y));
            apex.push_back(std::move(big_m));
        }
    return tabulate(
        src, dst, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [&](const Element& big_m, const Element& a) {
            auto at = bang_layout(u, big_m, a);
            std::vector<Element> out;
            for (std::size_t n = 0; n < a.size(); ++n)
                out.push_back(pair(u.leg2.at(at[n]), u.alpha.at(Key2{at[n], a[n].snd()})));
            return tuple(std::move(out));
        },
        [&](const Element& big_m, const Element& a, const Element& d) {
            auto at = bang_layout(u, big_m, a);
            std::vector<Element> out;
            for (std::size_t n = 0; n < a.size(); ++n)
                out.push_back(u.beta.at(Key3{at[n], a[n].snd(), d[n]}));
            return tuple(std::move(out));
        },
        [&](const Element& big_m, const Element& a, const Element& d) {
            auto at = bang_layout(u, big_m, a);
            std::vector<Element> out;
            for (std::size_t n = 0; n < a.size(); ++n)
                out.push_back(u.gamma.at(Key3{at[n], a[n].snd(), d[n]}));
            return orbit_of(out);
        });
}

Span hat_c(const FiniteSet& i, std::size_t k)
{
    FiniteSet ws(words(i, k));
    Span s{ws, FiniteSet(multisets(i, k)), ws, {}, {}};
    for (const auto& w : ws) {
        s.leg1.emplace(w, w);
        s.leg2.emplace(w, orbit(w));
    }
    return s;
}

Span hat_s(const FiniteSet& i, std::size_t k)
{
    FiniteSet ms(multisets(i, k));
    Span s{ms, FiniteSet(words(i, k)), ms, {}, {}};
    for (const auto& m : ms) {
        s.leg1.emplace(m, m);
        s.leg2.emplace(m, section(m));
    }
    return s;
}

Span symmetry_span(const FiniteSet& i, std::size_t k, const Perm& sigma)
{
    FiniteSet ws(words(i, k));
    Span s{ws, ws, ws, {}, {}};
    for (const auto& w : ws) {
        s.leg1.emplace(w, w);
        s.leg2.emplace(w, act(sigma, w));
    }
    return s;
}

FreeMonoidFactor span_free_monoid_factor(const Span& phi, const FiniteSet& i, std::size_t k,
                                         const std::optional<SymWitness>& witnesses)
{
    if (!(phi.from == FiniteSet(words(i, k))))
        throw ShapeError("span_free_monoid_factor: span does not start at the words of length k");
    FreeMonoidFactor out;
    if (witnesses) {
        auto bad = check_witnesses(*witnesses, phi.apex, phi.leg2, phi.leg1, k);
        if (!bad.empty())
            throw WitnessError("span_free_monoid_factor: " + bad.front());
        out.witnesses = *witnesses;
    } else {
        out.witnesses = find_witnesses(phi.apex, phi.leg2, phi.leg1, k);
    }
    out.psi = compose_spans(hat_s(i, k), phi);
    out.composite = compose_spans(hat_c(i, k), out.psi);
    for (const auto& r : phi.apex) {
        const Element& w = phi.leg1.at(r);
        Element m = orbit(w);
        Perm sigma = *matching_perm(w, section(m));
        out.epsilon.emplace(r, pair(w, pair(m, out.witnesses.at(sigma).at(r))));
    }
    return out;
}

std::vector<std::string> check_free_monoid_factor(const Span& phi, const FreeMonoidFactor& f)
{
    std::vector<std::string> out;
    std::set<Element> image;
    for (const auto& r : phi.apex) {
        auto it = f.epsilon.find(r);
        if (it == f.epsilon.end()) {
            out.push_back("epsilon undefined at " + to_string(r));
            continue;
        }
        const Element& e = it->second;
        if (!f.composite.apex.contains(e)) {
            out.push_back("epsilon leaves the composite apex at " + to_string(r));
            continue;
        }
        image.insert(e);
        if (!(f.composite.leg1.at(e) == phi.leg1.at(r)) || !(f.composite.leg2.at(e) == phi.leg2.at(r)))
            out.push_back("epsilon does not commute with the legs at " + to_string(r));
    }
    if (image.size() != phi.apex.size() || image.size() != f.composite.apex.size())
        out.push_back("epsilon is not a bijection");
    return out;
}

UniquenessReport factor_uniqueness(const Span& phi, const FreeMonoidFactor& f, const FiniteSet& i,
                                   std::size_t k, const Limits& limits)
{
    std::map<Key2, std::size_t> counts;
    for (const auto& r : phi.apex)
        ++counts[Key2{phi.leg1.at(r), phi.leg2.at(r)}];
    std::size_t top = 0;
    for (auto& [key, n] : counts)
        top = std::max(top, n);

    // A span Mf^k(I) -> J up to iso is a matrix of multiplicities; entries
    // above the largest multiplicity of phi cannot factor it.
    FiniteSet rows(multisets(i, k));
    std::vector<Key2> cells;
    for (const auto& m : rows)
        for (const auto& x : phi.to)
            cells.emplace_back(m, x);
    std::size_t total = sat_pow(top + 1, cells.size());
    if (total > limits.max_enum * 100)
        throw SizingError("factor_uniqueness: " + std::to_string(total) + " candidate spans");

    Span c = hat_c(i, k);
    UniquenessReport rep;
    std::vector<std::size_t> digit(cells.size(), 0);
    while (true) {
        Span cand{rows, phi.to, {}, {}, {}};
        std::vector<Element> apex;
        for (std::size_t n = 0; n < cells.size(); ++n)
            for (std::size_t c2 = 0; c2 < digit[n]; ++c2) {
                Element r = tuple({cells[n].first, cells[n].second, atom(std::to_string(c2))});
                cand.leg1.emplace(r, cells[n].first);
                cand.leg2.emplace(r, cells[n].second);
                apex.push_back(std::move(r));
            }
        cand.apex = FiniteSet(std::move(apex));
        ++rep.candidates;
        if (span_iso(compose_spans(c, cand), phi, limits)) {
            ++rep.factorings;
            if (!span_iso(cand, f.psi, limits))
                ++rep.non_isomorphic;
        }
        std::size_t pos = cells.size();
        while (true) {
            if (pos == 0)
                return rep;
            --pos;
            if (++digit[pos] <= top)
                break;
            digit[pos] = 0;
        }
    }
}

} // namespace polygame

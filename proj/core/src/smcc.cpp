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

#include "polygame/smcc.hpp"

#include "detail.hpp"

namespace polygame {

using detail::sat_add;
using detail::sat_mul;
using detail::sat_pow;

Game tensor(const Game& p1, const Game& p2)
{
    Game g;
    std::vector<Element> states;
    for (const auto& i1 : p1.states)
        for (const auto& i2 : p2.states)
            states.push_back(pair(i1, i2));
    g.states = FiniteSet(std::move(states));
    for (const auto& i1 : p1.states)
        for (const auto& i2 : p2.states) {
            Element i = pair(i1, i2);
            std::vector<Element> moves;
            for (const auto& a1 : p1.moves_at(i1))
                for (const auto& a2 : p2.moves_at(i2)) {
                    Element a = pair(a1, a2);
                    std::vector<Element> counters;
                    for (const auto& d1 : p1.counters_at(i1, a1))
                        for (const auto& d2 : p2.counters_at(i2, a2)) {
                            Element d = pair(d1, d2);
                            g.next.emplace(Key3{i, a, d}, pair(p1.next_state(i1, a1, d1), p2.next_state(i2, a2, d2)));
                            counters.push_back(std::move(d));
                        }
                    g.counters.emplace(Key2{i, a}, FiniteSet(std::move(counters)));
                    moves.push_back(std::move(a));
                }
            g.moves.emplace(i, FiniteSet(std::move(moves)));
        }
    return g;
}

Game unit_game()
{
    Game g;
    g.add_transition(Element::star(), Element::star(), Element::star(), Element::star());
    return g;
}

Simulation tensor_sim(const Simulation& s1, const Simulation& s2)
{
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& r1 : s1.apex)
        for (const auto& r2 : s2.apex) {
            Element r = pair(r1, r2);
            leg1.emplace(r, pair(s1.leg1.at(r1), s2.leg1.at(r2)));
            leg2.emplace(r, pair(s1.leg2.at(r1), s2.leg2.at(r2)));
            apex.push_back(std::move(r));
        }
    auto k3 = [](const Element& r, const Element& a, const Element& d, bool second) {
        return second ? Key3{r.snd(), a.snd(), d.snd()} : Key3{r.fst(), a.fst(), d.fst()};
    };
    return tabulate(
        share(tensor(s1.p1(), s2.p1())), share(tensor(s1.p2(), s2.p2())), FiniteSet(std::move(apex)),
        std::move(leg1), std::move(leg2),
        [&](const Element& r, const Element& a) {
            return pair(s1.alpha.at(Key2{r.fst(), a.fst()}), s2.alpha.at(Key2{r.snd(), a.snd()}));
        },
        [&](const Element& r, const Element& a, const Element& d) {
            return pair(s1.beta.at(k3(r, a, d, false)), s2.beta.at(k3(r, a, d, true)));
        },
        [&](const Element& r, const Element& a, const Element& d) {
            return pair(s1.gamma.at(k3(r, a, d, false)), s2.gamma.at(k3(r, a, d, true)));
        });
}

std::size_t lollipop_move_count(const Game& p2, const Game& p3, const Element& i2, const Element& i3)
{
    // Σ_f Π_{a2} g(a2, f a2) = Π_{a2} Σ_{a3} g(a2, a3), g = |D2|^|D3|.
    std::size_t total = 1;
    for (const auto& a2 : p2.moves_at(i2)) {
        std::size_t n2 = p2.counters_at(i2, a2).size();
        std::size_t sum = 0;
        for (const auto& a3 : p3.moves_at(i3))
            sum = sat_add(sum, sat_pow(n2, p3.counters_at(i3, a3).size()));
        total = sat_mul(total, sum);
    }
    return total;
}

Game lollipop(const Game& p2, const Game& p3, const Limits& limits)
{
    for (const auto& i2 : p2.states)
        for (const auto& i3 : p3.states) {
            std::size_t n = lollipop_move_count(p2, p3, i2, i3);
            if (n > limits.max_enum)
                throw SizingError("lollipop: " + std::to_string(n) + " moves at " +
                                  to_string(pair(i2, i3)) + " exceed the bound " +
                                  std::to_string(limits.max_enum));
        }

    Game g;
    std::vector<Element> states;
    for (const auto& i2 : p2.states)
        for (const auto& i3 : p3.states)
            states.push_back(pair(i2, i3));
    g.states = FiniteSet(std::move(states));

    for (const auto& i2 : p2.states)
        for (const auto& i3 : p3.states) {
            Element i = pair(i2, i3);
            const FiniteSet& a2s = p2.moves_at(i2);
            std::vector<Element> moves;
            for (const auto& f : enumerate_functions(a2s, p3.moves_at(i3))) {
                // phi(a2) ranges over D3(i3, f a2) -> D2(i2, a2).
                std::vector<FiniteSet> backs;
                for (const auto& a2 : a2s)
                    backs.push_back(enumerate_functions(p3.counters_at(i3, f.apply(a2)), p2.counters_at(i2, a2)));
                std::vector<const FiniteSet*> cods;
                for (const auto& b : backs)
                    cods.push_back(&b);
                for (auto& phi : dependent_functions(a2s.elements(), cods)) {
                    Element a = pair(f, phi);
                    std::vector<Element> counters;
                    for (const auto& a2 : a2s) {
                        const Element& a3 = f.apply(a2);
                        const Element& back = phi.apply(a2);
                        for (const auto& d3 : p3.counters_at(i3, a3)) {
                            Element d = pair(a2, d3);
                            g.next.emplace(Key3{i, a, d}, pair(p2.next_state(i2, a2, back.apply(d3)),
                                                              p3.next_state(i3, a3, d3)));
                            counters.push_back(std::move(d));
                        }
                    }
                    g.counters.emplace(Key2{i, a}, FiniteSet(std::move(counters)));
                    moves.push_back(std::move(a));
                }
            }
            g.moves.emplace(i, FiniteSet(std::move(moves)));
        }
    return g;
}

Simulation curry(const Simulation& s, GameRef p1, GameRef p2, const Limits& limits)
{
    if (!(s.p1() == tensor(*p1, *p2)))
        throw ShapeError("curry: source is not the tensor of the given games");
    auto hom = share(lollipop(*p2, s.p2(), limits));

    std::map<Element, Element> leg1, leg2;
    for (const auto& r : s.apex) {
        const Element& i = s.leg1.at(r);
        leg1.emplace(r, i.fst());
        leg2.emplace(r, pair(i.snd(), s.leg2.at(r)));
    }
    const Game& g2 = *p2;
    auto i2_of = [&s](const Element& r) -> const Element& { return s.leg1.at(r).snd(); };

    return tabulate(
        std::move(p1), hom, s.apex, std::move(leg1), std::move(leg2),
        [&](const Element& r, const Element& a1) {
            std::vector<Element::Binding> f, phi;
            for (const auto& a2 : g2.moves_at(i2_of(r))) {
                Element a = pair(a1, a2);
                const Element& a3 = s.alpha.at(Key2{r, a});
                f.emplace_back(a2, a3);
                std::vector<Element::Binding> back;
                for (const auto& d3 : s.p2().counters_at(s.leg2.at(r), a3))
                    back.emplace_back(d3, s.beta.at(Key3{r, a, d3}).snd());
                phi.emplace_back(a2, Element::fun(std::move(back)));
            }
            return pair(Element::fun(std::move(f)), Element::fun(std::move(phi)));
        },
        [&](const Element& r, const Element& a1, const Element& d) {
            return s.beta.at(Key3{r, pair(a1, d.fst()), d.snd()}).fst();
        },
        [&](const Element& r, const Element& a1, const Element& d) {
            return s.gamma.at(Key3{r, pair(a1, d.fst()), d.snd()});
        });
}

Simulation uncurry(const Simulation& s, GameRef p2, GameRef p3)
{
    auto src = share(tensor(s.p1(), *p2));
    std::map<Element, Element> leg1, leg2;
    for (const auto& r : s.apex) {
        const Element& j = s.leg2.at(r);
        leg1.emplace(r, pair(s.leg1.at(r), j.fst()));
        leg2.emplace(r, j.snd());
    }
    return tabulate(
        src, std::move(p3), s.apex, std::move(leg1), std::move(leg2),
        [&](const Element& r, const Element& a) { return s.alpha.at(Key2{r, a.fst()}).fst().apply(a.snd()); },
        [&](const Element& r, const Element& a, const Element& d3) {
            const Element& phi = s.alpha.at(Key2{r, a.fst()}).snd();
            return pair(s.beta.at(Key3{r, a.fst(), pair(a.snd(), d3)}), phi.apply(a.snd()).apply(d3));
        },
        [&](const Element& r, const Element& a, const Element& d3) {
            return s.gamma.at(Key3{r, a.fst(), pair(a.snd(), d3)});
        });
}

Simulation eval_sim(GameRef p2, GameRef p3, const Limits& limits)
{
    auto hom = share(lollipop(*p2, *p3, limits));
    return uncurry(identity_sim(hom), std::move(p2), std::move(p3));
}

Simulation rearrangement_sim(GameRef src, GameRef dst, const std::function<Element(const Element&)>& rho,
                             const std::function<Element(const Element&)>& rho_inv)
{
    return graph_sim(
        std::move(src), std::move(dst), rho, [&](const Element&, const Element& a) { return rho(a); },
        [&](const Element&, const Element&, const Element& d) { return rho_inv(d); });
}

Simulation structural_iso(Structural kind, std::span<const GameRef> games, bool inverse)
{
    using Fn = std::function<Element(const Element&)>;
    auto arity = [&](std::size_t n) {
        if (games.size() != n)
            throw ShapeError("structural_iso: expected " + std::to_string(n) + " games");
    };
    GameRef from, to;
    Fn rho, back;
    switch (kind) {
    case Structural::assoc:
        arity(3);
        from = share(tensor(tensor(*games[0], *games[1]), *games[2]));
        to = share(tensor(*games[0], tensor(*games[1], *games[2])));
        rho = [](const Element& x) { return pair(x.fst().fst(), pair(x.fst().snd(), x.snd())); };
        back = [](const Element& x) { return pair(pair(x.fst(), x.snd().fst()), x.snd().snd()); };
        break;
    case Structural::unit_l:
        arity(1);
        from = share(tensor(unit_game(), *games[0]));
        to = games[0];
        rho = [](const Element& x) { return x.snd(); };
        back = [](const Element& x) { return pair(Element::star(), x); };
        break;
    case Structural::unit_r:
        arity(1);
        from = share(tensor(*games[0], unit_game()));
        to = games[0];
        rho = [](const Element& x) { return x.fst(); };
        back = [](const Element& x) { return pair(x, Element::star()); };
        break;
    case Structural::symmetry:
        arity(2);
        from = share(tensor(*games[0], *games[1]));
        to = share(tensor(*games[1], *games[0]));
        rho = [](const Element& x) { return pair(x.snd(), x.fst()); };
        back = rho;
        break;
    }
    if (inverse)
        return rearrangement_sim(std::move(to), std::move(from), back, rho);
    return rearrangement_sim(std::move(from), std::move(to), rho, back);
}

Game dual(const Game& p, const Limits& limits)
{
    Game g;
    g.states = p.states;
    for (const auto& i : p.states) {
        const FiniteSet& as = p.moves_at(i);
        std::size_t n = 1;
        std::vector<const FiniteSet*> cods;
        for (const auto& a : as) {
            cods.push_back(&p.counters_at(i, a));
            n = sat_mul(n, cods.back()->size());
        }
        if (n > limits.max_enum)
            throw SizingError("dual: " + std::to_string(n) + " choice functions at " + to_string(i) +
                              " exceed the bound " + std::to_string(limits.max_enum));
        std::vector<Element> moves;
        for (auto& f : dependent_functions(as.elements(), cods)) {
            g.counters.emplace(Key2{i, f}, as);
            for (const auto& a : as)
                g.next.emplace(Key3{i, f, a}, p.next_state(i, a, f.apply(a)));
            moves.push_back(std::move(f));
        }
        g.moves.emplace(i, FiniteSet(std::move(moves)));
    }
    return g;
}

} // namespace polygame

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

#include "polygame/simulation.hpp"

#include <algorithm>

namespace polygame {

namespace {

std::string key_text(std::vector<Element> parts) { return to_string(tuple(std::move(parts))); }

bool same_game(const GameRef& a, const GameRef& b) { return a == b || (a && b && *a == *b); }

const Element* find(const std::map<Element, Element>& m, const Element& k)
{
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
}

template <class K>
const Element* find(const std::map<K, Element>& m, const K& k)
{
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
}

} // namespace

Diagnostics check_simulation(const Simulation& s)
{
    Diagnostics out;
    if (!s.src || !s.dst) {
        out.push_back({"simulation has no source or target game", ""});
        return out;
    }
    for (auto& d : validate_game(*s.src))
        out.push_back({"source game: " + d.what, d.key});
    for (auto& d : validate_game(*s.dst))
        out.push_back({"target game: " + d.what, d.key});
    if (!out.empty())
        return out;

    const Game& p1 = *s.src;
    const Game& p2 = *s.dst;

    for (const auto& r : s.apex)
        for (auto& msg : element_diagnostics(r))
            out.push_back({"malformed apex element " + msg, to_string(r)});

    // Keys that a valid simulation must define, collected while walking.
    std::size_t alpha_keys = 0, beta_keys = 0;

    for (const auto& r : s.apex) {
        const Element* i1 = find(s.leg1, r);
        const Element* i2 = find(s.leg2, r);
        if (!i1)
            out.push_back({"leg1 undefined", to_string(r)});
        else if (!p1.states.contains(*i1))
            out.push_back({"leg1 lands outside the source states", to_string(r)});
        if (!i2)
            out.push_back({"leg2 undefined", to_string(r)});
        else if (!p2.states.contains(*i2))
            out.push_back({"leg2 lands outside the target states", to_string(r)});
        if (!i1 || !i2 || !p1.states.contains(*i1) || !p2.states.contains(*i2))
            continue;

        for (const auto& a1 : p1.moves_at(*i1)) {
            ++alpha_keys;
            const Element* a2 = find(s.alpha, Key2{r, a1});
            if (!a2) {
                out.push_back({"alpha undefined", key_text({r, a1})});
                continue;
            }
            if (!p2.moves_at(*i2).contains(*a2)) {
                out.push_back({"alpha answers " + to_string(*a2) + ", not a target move", key_text({r, a1})});
                continue;
            }
            const FiniteSet& d1s = p1.counters_at(*i1, a1);
            for (const auto& d2 : p2.counters_at(*i2, *a2)) {
                ++beta_keys;
                Key3 k{r, a1, d2};
                const Element* d1 = find(s.beta, k);
                const Element* g = find(s.gamma, k);
                if (!d1) {
                    out.push_back({"beta undefined", key_text({r, a1, d2})});
                } else if (!d1s.contains(*d1)) {
                    out.push_back({"beta answers " + to_string(*d1) + ", not a source counter",
                                   key_text({r, a1, d2})});
                    d1 = nullptr;
                }
                if (!g) {
                    out.push_back({"gamma undefined", key_text({r, a1, d2})});
                    continue;
                }
                if (!s.apex.contains(*g)) {
                    out.push_back({"gamma lands outside the apex", key_text({r, a1, d2})});
                    continue;
                }
                if (!d1)
                    continue;
                const Element& n1 = p1.next_state(*i1, a1, *d1);
                const Element& n2 = p2.next_state(*i2, *a2, d2);
                const Element* g1 = find(s.leg1, *g);
                const Element* g2 = find(s.leg2, *g);
                if (!g1 || !g2 || !(*g1 == n1) || !(*g2 == n2))
                    out.push_back({"gamma " + to_string(*g) + " does not cover the next pair " +
                                       key_text({n1, n2}),
                                   key_text({r, a1, d2})});
            }
        }
    }

    for (const auto& [r, v] : s.leg1)
        if (!s.apex.contains(r))
            out.push_back({"extraneous leg1 entry", to_string(r)});
    for (const auto& [r, v] : s.leg2)
        if (!s.apex.contains(r))
            out.push_back({"extraneous leg2 entry", to_string(r)});

    // Extraneous transport entries: anything not on the walked key set.
    if (s.alpha.size() > alpha_keys || s.beta.size() > beta_keys || s.gamma.size() > beta_keys) {
        auto valid_alpha = [&](const Element& r, const Element& a1) {
            const Element* i1 = find(s.leg1, r);
            return s.apex.contains(r) && i1 && p1.states.contains(*i1) &&
                   p1.moves_at(*i1).contains(a1);
        };
        auto valid_beta = [&](const Key3& k) {
            const auto& [r, a1, d2] = k;
            if (!valid_alpha(r, a1))
                return false;
            const Element* a2 = find(s.alpha, Key2{r, a1});
            const Element* i2 = find(s.leg2, r);
            return a2 && i2 && p2.states.contains(*i2) && p2.moves_at(*i2).contains(*a2) &&
                   p2.counters_at(*i2, *a2).contains(d2);
        };
        for (const auto& [k, v] : s.alpha)
            if (!valid_alpha(k.first, k.second))
                out.push_back({"extraneous alpha entry", key_text({k.first, k.second})});
        for (const auto& [k, v] : s.beta)
            if (!valid_beta(k))
                out.push_back({"extraneous beta entry",
                               key_text({std::get<0>(k), std::get<1>(k), std::get<2>(k)})});
        for (const auto& [k, v] : s.gamma)
            if (!valid_beta(k))
                out.push_back({"extraneous gamma entry",
                               key_text({std::get<0>(k), std::get<1>(k), std::get<2>(k)})});
    }
    return out;
}

void require_valid(const Simulation& s)
{
    auto diags = check_simulation(s);
    if (diags.empty())
        return;
    std::string msg = "invalid simulation:";
    for (auto& d : diags)
        msg += "\n  " + d.to_string();
    throw ValidationError(msg);
}

Simulation tabulate(GameRef src, GameRef dst, FiniteSet apex, std::map<Element, Element> leg1,
                    std::map<Element, Element> leg2, const AlphaFn& alpha, const BetaFn& beta,
                    const GammaFn& gamma)
{
    Simulation s;
    s.src = std::move(src);
    s.dst = std::move(dst);
    s.apex = std::move(apex);
    s.leg1 = std::move(leg1);
    s.leg2 = std::move(leg2);
    for (const auto& r : s.apex) {
        const Element& i1 = s.leg1.at(r);
        const Element& i2 = s.leg2.at(r);
        for (const auto& a1 : s.p1().moves_at(i1)) {
            Element a2 = alpha(r, a1);
            for (const auto& d2 : s.p2().counters_at(i2, a2)) {
                Key3 k{r, a1, d2};
                s.beta.emplace(k, beta(r, a1, d2));
                s.gamma.emplace(k, gamma(r, a1, d2));
            }
            s.alpha.emplace(Key2{r, a1}, std::move(a2));
        }
    }
    return s;
}

Simulation graph_sim(GameRef src, GameRef dst, const std::function<Element(const Element&)>& state,
                     const AlphaFn& alpha, const BetaFn& beta)
{
    std::map<Element, Element> leg1, leg2;
    for (const auto& i : src->states) {
        leg1.emplace(i, i);
        leg2.emplace(i, state(i));
    }
    const Game* p1 = src.get();
    FiniteSet apex = src->states;
    return tabulate(std::move(src), std::move(dst), std::move(apex), std::move(leg1), std::move(leg2),
                    alpha, beta, [&](const Element& r, const Element& a1, const Element& d2) {
                        return p1->next_state(r, a1, beta(r, a1, d2));
                    });
}

Simulation identity_sim(GameRef g)
{
    return graph_sim(
        g, g, [](const Element& i) { return i; }, [](const Element&, const Element& a) { return a; },
        [](const Element&, const Element&, const Element& d) { return d; });
}

Simulation compose(const Simulation& s, const Simulation& t)
{
    if (!same_game(s.dst, t.src))
        throw ShapeError("compose: middle games differ");
    std::vector<Element> apex;
    std::map<Element, Element> leg1, leg2;
    for (const auto& r : s.apex)
        for (const auto& q : t.apex)
            if (s.leg2.at(r) == t.leg1.at(q)) {
                Element rq = pair(r, q);
                leg1.emplace(rq, s.leg1.at(r));
                leg2.emplace(rq, t.leg2.at(q));
                apex.push_back(std::move(rq));
            }
    auto mid = [&](const Element& rq, const Element& a1) -> const Element& {
        return s.alpha.at(Key2{rq.fst(), a1});
    };
    return tabulate(
        s.src, t.dst, FiniteSet(std::move(apex)), std::move(leg1), std::move(leg2),
        [&](const Element& rq, const Element& a1) { return t.alpha.at(Key2{rq.snd(), mid(rq, a1)}); },
        [&](const Element& rq, const Element& a1, const Element& d3) {
            const Element& d2 = t.beta.at(Key3{rq.snd(), mid(rq, a1), d3});
            return s.beta.at(Key3{rq.fst(), a1, d2});
        },
        [&](const Element& rq, const Element& a1, const Element& d3) {
            const Element& a2 = mid(rq, a1);
            const Element& d2 = t.beta.at(Key3{rq.snd(), a2, d3});
            return pair(s.gamma.at(Key3{rq.fst(), a1, d2}), t.gamma.at(Key3{rq.snd(), a2, d3}));
        });
}

Simulation zero_sim(GameRef src, GameRef dst)
{
    Simulation s;
    s.src = std::move(src);
    s.dst = std::move(dst);
    return s;
}

Simulation add(const Simulation& s, const Simulation& t)
{
    if (!same_game(s.src, t.src) || !same_game(s.dst, t.dst))
        throw ShapeError("add: endpoints differ");
    Simulation out = zero_sim(s.src, s.dst);
    std::vector<Element> apex;
    auto absorb = [&](const Simulation& x, const Element& tag) {
        auto tg = [&tag](const Element& r) { return pair(tag, r); };
        for (const auto& r : x.apex) {
            apex.push_back(tg(r));
            out.leg1.emplace(tg(r), x.leg1.at(r));
            out.leg2.emplace(tg(r), x.leg2.at(r));
        }
        for (const auto& [k, v] : x.alpha)
            out.alpha.emplace(Key2{tg(k.first), k.second}, v);
        for (const auto& [k, v] : x.beta)
            out.beta.emplace(Key3{tg(std::get<0>(k)), std::get<1>(k), std::get<2>(k)}, v);
        for (const auto& [k, v] : x.gamma)
            out.gamma.emplace(Key3{tg(std::get<0>(k)), std::get<1>(k), std::get<2>(k)}, tg(v));
    };
    absorb(s, atom("L"));
    absorb(t, atom("R"));
    out.apex = FiniteSet(std::move(apex));
    return out;
}

namespace {

// Pairs apex elements that share (leg1, leg2), in canonical order.
std::optional<SpanIso> match_by_legs(const FiniteSet& a, const std::map<Element, Element>& a1,
                                     const std::map<Element, Element>& a2, const FiniteSet& b,
                                     const std::map<Element, Element>& b1,
                                     const std::map<Element, Element>& b2)
{
    std::map<Key2, std::vector<Element>> groups_a, groups_b;
    for (const auto& r : a)
        groups_a[Key2{a1.at(r), a2.at(r)}].push_back(r);
    for (const auto& r : b)
        groups_b[Key2{b1.at(r), b2.at(r)}].push_back(r);
    if (groups_a.size() != groups_b.size())
        return std::nullopt;
    SpanIso iso;
    for (auto& [k, xs] : groups_a) {
        auto it = groups_b.find(k);
        if (it == groups_b.end() || it->second.size() != xs.size())
            return std::nullopt;
        for (std::size_t n = 0; n < xs.size(); ++n) {
            iso.forward.emplace(xs[n], it->second[n]);
            iso.backward.emplace(it->second[n], xs[n]);
        }
    }
    return iso;
}

using Colouring = std::map<Element, std::size_t>;

// The empty atom is the least element of the order; used to seek the first
// table key with a given prefix.
const Element& lowest()
{
    static const Element e = atom("");
    return e;
}

// Initial signature: legs and the alpha / beta tables of r.
Element local_signature(const Simulation& s, const Element& r)
{
    std::vector<Element> alpha, beta;
    for (auto it = s.alpha.lower_bound(Key2{r, lowest()}); it != s.alpha.end() && it->first.first == r; ++it)
        alpha.push_back(pair(it->first.second, it->second));
    for (auto it = s.beta.lower_bound(Key3{r, lowest(), lowest()});
         it != s.beta.end() && std::get<0>(it->first) == r; ++it)
        beta.push_back(tuple({std::get<1>(it->first), std::get<2>(it->first), it->second}));
    return tuple({s.leg1.at(r), s.leg2.at(r), tuple(std::move(alpha)), tuple(std::move(beta))});
}

} // namespace

std::optional<SpanIso> equivalent(const Simulation& s, const Simulation& t, EquivMode mode,
                                  const Limits& limits)
{
    if (!same_game(s.src, t.src) || !same_game(s.dst, t.dst))
        throw ShapeError("equivalent: endpoints differ");
    if (s.apex.size() != t.apex.size())
        return std::nullopt;
    if (mode == EquivMode::span_only)
        return match_by_legs(s.apex, s.leg1, s.leg2, t.apex, t.leg1, t.leg2);
    if (s.apex.size() > limits.search_bound)
        throw SearchRefused("equivalent: apex size " + std::to_string(s.apex.size()) +
                            " exceeds the search bound " + std::to_string(limits.search_bound));

    // Colour refinement shared by both simulations, then backtracking
    // within colour classes.
    Colouring cs, ct;
    {
        std::map<Element, std::size_t> ids;
        auto id = [&ids](Element sig) { return ids.emplace(std::move(sig), ids.size()).first->second; };
        for (const auto& r : s.apex)
            cs[r] = id(local_signature(s, r));
        for (const auto& r : t.apex)
            ct[r] = id(local_signature(t, r));
    }
    using Signature = std::pair<std::size_t, std::vector<std::pair<Key2, std::size_t>>>;
    auto signature = [](const Simulation& x, const Colouring& c, const Element& r) {
        Signature sig{c.at(r), {}};
        for (auto it = x.gamma.lower_bound(Key3{r, lowest(), lowest()});
             it != x.gamma.end() && std::get<0>(it->first) == r; ++it)
            sig.second.emplace_back(Key2{std::get<1>(it->first), std::get<2>(it->first)}, c.at(it->second));
        return sig;
    };
    std::size_t classes = 0;
    while (true) {
        std::map<Signature, std::size_t> ids;
        Colouring ns, nt;
        for (const auto& r : s.apex)
            ns[r] = ids.emplace(signature(s, cs, r), ids.size()).first->second;
        for (const auto& r : t.apex)
            nt[r] = ids.emplace(signature(t, ct, r), ids.size()).first->second;
        cs = std::move(ns);
        ct = std::move(nt);
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    {
        std::map<std::size_t, int> hist;
        for (auto& [r, c] : cs)
            ++hist[c];
        for (auto& [r, c] : ct)
            --hist[c];
        for (auto& [c, n] : hist)
            if (n != 0)
                return std::nullopt;
    }

    const auto& xs = s.apex.elements();
    std::map<Element, Element> fwd;
    std::map<Element, bool> used;

    // gamma edges touching r whose both ends are mapped must agree.
    auto consistent = [&](const Element& r) {
        for (auto it = s.gamma.lower_bound(Key3{r, lowest(), lowest()});
             it != s.gamma.end() && std::get<0>(it->first) == r; ++it) {
            auto target = fwd.find(it->second);
            if (target == fwd.end())
                continue;
            const auto& [_, a1, d2] = it->first;
            if (!(t.gamma.at(Key3{fwd.at(r), a1, d2}) == target->second))
                return false;
        }
        for (const auto& [q, img] : fwd) {
            for (auto it = s.gamma.lower_bound(Key3{q, lowest(), lowest()});
                 it != s.gamma.end() && std::get<0>(it->first) == q; ++it) {
                if (!(it->second == r))
                    continue;
                const auto& [_, a1, d2] = it->first;
                if (!(t.gamma.at(Key3{img, a1, d2}) == fwd.at(r)))
                    return false;
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t pos) {
        if (pos == xs.size())
            return true;
        const Element& r = xs[pos];
        for (const auto& q : t.apex) {
            if (used[q] || ct.at(q) != cs.at(r))
                continue;
            used[q] = true;
            fwd[r] = q;
            if (consistent(r) && search(pos + 1))
                return true;
            fwd.erase(r);
            used[q] = false;
        }
        return false;
    };
    if (!search(0))
        return std::nullopt;
    SpanIso iso;
    for (auto& [r, q] : fwd) {
        iso.forward.emplace(r, q);
        iso.backward.emplace(q, r);
    }
    return iso;
}

Span underlying_span(const Simulation& s)
{
    return Span{s.p1().states, s.p2().states, s.apex, s.leg1, s.leg2};
}

Span identity_span(const FiniteSet& x)
{
    Span out{x, x, x, {}, {}};
    for (const auto& e : x) {
        out.leg1.emplace(e, e);
        out.leg2.emplace(e, e);
    }
    return out;
}

Span compose_spans(const Span& a, const Span& b)
{
    if (!(a.to == b.from))
        throw ShapeError("compose_spans: middle sets differ");
    Span out{a.from, b.to, {}, {}, {}};
    std::vector<Element> apex;
    for (const auto& r : a.apex)
        for (const auto& q : b.apex)
            if (a.leg2.at(r) == b.leg1.at(q)) {
                Element rq = pair(r, q);
                out.leg1.emplace(rq, a.leg1.at(r));
                out.leg2.emplace(rq, b.leg2.at(q));
                apex.push_back(std::move(rq));
            }
    out.apex = FiniteSet(std::move(apex));
    return out;
}

std::optional<SpanIso> span_iso(const Span& a, const Span& b, const Limits&)
{
    if (a.apex.size() != b.apex.size())
        return std::nullopt;
    return match_by_legs(a.apex, a.leg1, a.leg2, b.apex, b.leg1, b.leg2);
}

bool span_embeds(const Span& a, const Span& b)
{
    std::map<Key2, long> count;
    for (const auto& r : b.apex)
        ++count[Key2{b.leg1.at(r), b.leg2.at(r)}];
    for (const auto& r : a.apex)
        if (--count[Key2{a.leg1.at(r), a.leg2.at(r)}] < 0)
            return false;
    return true;
}

Diagnostics check_span(const Span& s)
{
    Diagnostics out;
    for (const auto& r : s.apex) {
        const Element* x = find(s.leg1, r);
        const Element* y = find(s.leg2, r);
        if (!x || !s.from.contains(*x))
            out.push_back({"leg1 undefined or outside the source set", to_string(r)});
        if (!y || !s.to.contains(*y))
            out.push_back({"leg2 undefined or outside the target set", to_string(r)});
    }
    for (const auto& [r, v] : s.leg1)
        if (!s.apex.contains(r))
            out.push_back({"extraneous leg1 entry", to_string(r)});
    for (const auto& [r, v] : s.leg2)
        if (!s.apex.contains(r))
            out.push_back({"extraneous leg2 entry", to_string(r)});
    return out;
}

} // namespace polygame

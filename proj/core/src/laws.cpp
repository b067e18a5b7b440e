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

#include "polygame/laws.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "polygame/additive.hpp"
#include "polygame/exponential.hpp"
#include "polygame/random.hpp"
#include "polygame/smcc.hpp"
#include "polygame/synthesis.hpp"

namespace polygame {

const std::vector<std::string>& law_suites()
{
    static const std::vector<std::string> names = {"category",    "enrichment", "smcc",    "biproduct",
                                                   "exponential", "synthesis",  "multiset"};
    return names;
}

namespace {

class Recorder {
public:
    Recorder(std::vector<LawResult>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

    // Runs one case; a false result or an exception other than a bound
    // refusal counts as a failure.
    void check(const std::string& law, const std::function<bool(std::string&, std::vector<Simulation>&)>& body)
    {
        LawResult& r = find(law);
        ++r.cases;
        std::string why;
        std::vector<Simulation> evidence;
        bool ok = false;
        try {
            ok = body(why, evidence);
        } catch (const SearchRefused&) {
            ++r.skipped;
            return;
        } catch (const SizingError&) {
            ++r.skipped;
            return;
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (ok)
            return;
        if (r.failures++ == 0) {
            r.counterexample = why.empty() ? "law does not hold" : why;
            r.evidence = std::move(evidence);
        }
    }

private:
    LawResult& find(const std::string& law)
    {
        for (auto& r : out_)
            if (r.suite == suite_ && r.law == law)
                return r;
        LawResult r;
        r.suite = suite_;
        r.law = law;
        out_.push_back(std::move(r));
        return out_.back();
    }

    std::vector<LawResult>& out_;
    std::string suite_;
};

struct Context {
    const LawOptions& opt;
    std::vector<GameRef> given;
    Rng rng;
    Limits limits;

    GameRef any_game()
    {
        if (given.empty() || uniform(rng, 0, 1) == 0)
            return share(random_game(rng));
        return given[uniform(rng, 0, given.size() - 1)];
    }
    Simulation sim(const GameRef& a, const GameRef& b) { return random_simulation(rng, a, b, opt.max_apex); }
};

bool equiv(const Simulation& a, const Simulation& b, const Limits& limits, std::string& why,
           std::vector<Simulation>& ev, EquivMode mode = EquivMode::full)
{
    if (equivalent(a, b, mode, limits))
        return true;
    why = "not equivalent (apex sizes " + std::to_string(a.apex.size()) + " and " + std::to_string(b.apex.size()) + ")";
    ev = {a, b};
    return false;
}

bool valid(const Simulation& s, std::string& why, std::vector<Simulation>& ev)
{
    auto d = check_simulation(s);
    if (d.empty())
        return true;
    why = "invalid simulation: " + d.front().to_string();
    ev = {s};
    return false;
}

bool same_data(const Simulation& a, const Simulation& b)
{
    return *a.src == *b.src && *a.dst == *b.dst && a.apex == b.apex && a.leg1 == b.leg1 && a.leg2 == b.leg2 &&
           a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
}

std::vector<GameRef> v(std::initializer_list<GameRef> xs) { return xs; }

void category(Context& c, Recorder& rec)
{
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        auto p = c.any_game(), q = c.any_game(), r = c.any_game(), s = c.any_game();
        auto a = c.sim(p, q), b = c.sim(q, r), d = c.sim(r, s);
        rec.check("composite is valid", [&](auto& why, auto& ev) { return valid(compose(a, b), why, ev); });
        rec.check("left identity", [&](auto& why, auto& ev) {
            return equiv(compose(identity_sim(p), a), a, c.limits, why, ev);
        });
        rec.check("right identity", [&](auto& why, auto& ev) {
            return equiv(compose(a, identity_sim(q)), a, c.limits, why, ev);
        });
        rec.check("associativity", [&](auto& why, auto& ev) {
            return equiv(compose(compose(a, b), d), compose(a, compose(b, d)), c.limits, why, ev);
        });
        rec.check("forgetful functor preserves composition", [&](auto& why, auto& ev) {
            bool ok = underlying_span(compose(a, b)) == compose_spans(underlying_span(a), underlying_span(b));
            if (!ok) {
                why = "span of the composite differs from the composite of spans";
                ev = {a, b};
            }
            return ok;
        });
    }
}

void enrichment(Context& c, Recorder& rec)
{
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        auto o = c.any_game(), p = c.any_game(), q = c.any_game(), r = c.any_game();
        auto a = c.sim(p, q), b = c.sim(p, q), d = c.sim(p, q), e = c.sim(o, p), f = c.sim(q, r);
        rec.check("addition is commutative",
                  [&](auto& why, auto& ev) { return equiv(add(a, b), add(b, a), c.limits, why, ev); });
        rec.check("addition is associative", [&](auto& why, auto& ev) {
            return equiv(add(add(a, b), d), add(a, add(b, d)), c.limits, why, ev);
        });
        rec.check("zero is a unit",
                  [&](auto& why, auto& ev) { return equiv(add(a, zero_sim(p, q)), a, c.limits, why, ev); });
        rec.check("composition distributes on the left", [&](auto& why, auto& ev) {
            return equiv(compose(e, add(a, b)), add(compose(e, a), compose(e, b)), c.limits, why, ev);
        });
        rec.check("composition distributes on the right", [&](auto& why, auto& ev) {
            return equiv(compose(add(a, b), f), add(compose(a, f), compose(b, f)), c.limits, why, ev);
        });
        rec.check("zero absorbs", [&](auto& why, auto& ev) {
            bool ok = compose(zero_sim(o, p), a).apex.empty() && compose(a, zero_sim(q, r)).apex.empty();
            if (!ok) {
                why = "composite with zero is not empty";
                ev = {a};
            }
            return ok;
        });
    }
}

// Σ_f Π_{a2} |D2(a2)|^{|D3(f a2)|}, enumerating the functions f.
std::size_t lollipop_count_oracle(const Game& p2, const Game& p3, const Element& i2, const Element& i3)
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

// Π_{a2} Σ_{a3} Π_{d3} Σ_{d2} |X(i2[a2/d2], i3[a3/d3])|.
std::size_t extension_oracle(const Game& p2, const Game& p3, const FamilySet& x, const Element& i2, const Element& i3)
{
    std::size_t prod = 1;
    for (const auto& a2 : p2.moves_at(i2)) {
        std::size_t sum = 0;
        for (const auto& a3 : p3.moves_at(i3)) {
            std::size_t inner = 1;
            for (const auto& d3 : p3.counters_at(i3, a3)) {
                std::size_t s = 0;
                for (const auto& d2 : p2.counters_at(i2, a2))
                    s += x.fiber.at(pair(p2.next_state(i2, a2, d2), p3.next_state(i3, a3, d3))).size();
                inner *= s;
            }
            sum += inner;
        }
        prod *= sum;
    }
    return prod;
}

void smcc(Context& c, Recorder& rec)
{
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        auto p0 = c.any_game(), p1 = c.any_game(), p2 = c.any_game(), p3 = c.any_game();
        auto s = c.sim(share(tensor(*p1, *p2)), p3);
        rec.check("curry then uncurry is the identity", [&](auto& why, auto& ev) {
            bool ok = same_data(uncurry(curry(s, p1, p2, c.limits), p2, p3), s);
            if (!ok) {
                why = "round trip changed the data";
                ev = {s};
            }
            return ok;
        });
        rec.check("uncurry then curry is the identity", [&](auto& why, auto& ev) {
            Simulation t = curry(s, p1, p2, c.limits);
            bool ok = same_data(curry(uncurry(t, p2, p3), p1, p2, c.limits), t);
            if (!ok) {
                why = "round trip changed the data";
                ev = {t};
            }
            return ok;
        });
        rec.check("evaluation after curry", [&](auto& why, auto& ev) {
            auto lhs = compose(tensor_sim(curry(s, p1, p2, c.limits), identity_sim(p2)), eval_sim(p2, p3, c.limits));
            return equiv(lhs, s, c.limits, why, ev);
        });
        rec.check("curry is natural", [&](auto& why, auto& ev) {
            auto u = c.sim(p0, p1);
            auto lhs = curry(compose(tensor_sim(u, identity_sim(p2)), s), p0, p2, c.limits);
            return equiv(lhs, compose(u, curry(s, p1, p2, c.limits)), c.limits, why, ev);
        });
        rec.check("tensor interchange", [&](auto& why, auto& ev) {
            auto a = c.sim(p0, p1), b = c.sim(p1, p2), d = c.sim(p2, p3), e = c.sim(p3, p0);
            return equiv(tensor_sim(compose(a, b), compose(d, e)), compose(tensor_sim(a, d), tensor_sim(b, e)),
                         c.limits, why, ev);
        });
        rec.check("coherence isomorphisms are invertible", [&](auto& why, auto& ev) {
            std::vector<GameRef> one{p1}, two{p1, p2}, three{p1, p2, p3};
            for (auto [kind, games] : {std::pair{Structural::unit_l, one}, std::pair{Structural::unit_r, one},
                                       std::pair{Structural::symmetry, two}, std::pair{Structural::assoc, three}}) {
                auto there = structural_iso(kind, games);
                auto back = structural_iso(kind, games, true);
                if (!equiv(compose(there, back), identity_sim(there.src), c.limits, why, ev) ||
                    !equiv(compose(back, there), identity_sim(there.dst), c.limits, why, ev))
                    return false;
            }
            return true;
        });
        rec.check("symmetry is an involution", [&](auto& why, auto& ev) {
            auto sw = structural_iso(Structural::symmetry, v({p1, p2}));
            auto ws = structural_iso(Structural::symmetry, v({p2, p1}));
            return equiv(compose(sw, ws), identity_sim(sw.src), c.limits, why, ev);
        });
        rec.check("lollipop move count", [&](auto& why, auto&) {
            Game l = lollipop(*p2, *p3, c.limits);
            for (const auto& i2 : p2->states)
                for (const auto& i3 : p3->states) {
                    std::size_t got = l.moves_at(pair(i2, i3)).size();
                    std::size_t want = lollipop_count_oracle(*p2, *p3, i2, i3);
                    if (got != want) {
                        why = "at " + to_string(pair(i2, i3)) + ": " + std::to_string(got) + " moves, formula " +
                              std::to_string(want);
                        return false;
                    }
                }
            return true;
        });
        rec.check("extension of the lollipop", [&](auto& why, auto&) {
            Game l = lollipop(*p2, *p3, c.limits);
            FamilySet x{l.states, {}};
            for (const auto& i : l.states) {
                std::vector<Element> fib;
                for (std::size_t k = uniform(c.rng, 0, 2); k > 0; --k)
                    fib.push_back(atom("x" + std::to_string(k)));
                x.fiber.emplace(i, FiniteSet(std::move(fib)));
            }
            FamilySet ext = extend(l, x, c.limits);
            for (const auto& i2 : p2->states)
                for (const auto& i3 : p3->states) {
                    std::size_t got = ext.fiber.at(pair(i2, i3)).size();
                    std::size_t want = extension_oracle(*p2, *p3, x, i2, i3);
                    if (got != want) {
                        why = "at " + to_string(pair(i2, i3)) + ": " + std::to_string(got) + " elements, formula " +
                              std::to_string(want);
                        return false;
                    }
                }
            return true;
        });
        rec.check("dual agrees with the lollipop into the unit", [&](auto& why, auto&) {
            bool ok = isomorphic(dual(*p1, c.limits), lollipop(*p1, unit_game(), c.limits));
            if (!ok)
                why = "carriers differ";
            return ok;
        });
    }
}

void biproduct(Context& c, Recorder& rec)
{
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        auto p1 = c.any_game(), p2 = c.any_game(), q = c.any_game();
        GameRef part[] = {p1, p2};
        for (int k = 1; k <= 2; ++k) {
            rec.check("projection after injection is the identity", [&](auto& why, auto& ev) {
                return equiv(compose(injection(k, p1, p2), projection(k, p1, p2)), identity_sim(part[k - 1]),
                             c.limits, why, ev);
            });
            rec.check("projection after the other injection is zero", [&](auto& why, auto& ev) {
                return equiv(compose(injection(k, p1, p2), projection(3 - k, p1, p2)),
                             zero_sim(part[k - 1], part[2 - k]), c.limits, why, ev);
            });
        }
        rec.check("sum of idempotents is the identity", [&](auto& why, auto& ev) {
            auto e1 = compose(projection(1, p1, p2), injection(1, p1, p2));
            auto e2 = compose(projection(2, p1, p2), injection(2, p1, p2));
            return equiv(add(e1, e2), identity_sim(e1.src), c.limits, why, ev);
        });
        rec.check("split then merge", [&](auto& why, auto& ev) {
            auto s = c.sim(share(oplus(*p1, *p2)), q);
            auto [s1, s2] = split_copair(s, p1, p2);
            return valid(s1, why, ev) && valid(s2, why, ev) && equiv(copair(s1, s2), s, c.limits, why, ev);
        });
        rec.check("copair after injection", [&](auto& why, auto& ev) {
            auto s1 = c.sim(p1, q), s2 = c.sim(p2, q);
            return equiv(compose(injection(1, p1, p2), copair(s1, s2)), s1, c.limits, why, ev) &&
                   equiv(compose(injection(2, p1, p2), copair(s1, s2)), s2, c.limits, why, ev);
        });
        rec.check("projection after pairing", [&](auto& why, auto& ev) {
            auto s1 = c.sim(q, p1), s2 = c.sim(q, p2);
            auto t = pairing(s1, s2);
            return valid(t, why, ev) && equiv(compose(t, projection(1, p1, p2)), s1, c.limits, why, ev) &&
                   equiv(compose(t, projection(2, p1, p2)), s2, c.limits, why, ev);
        });
        rec.check("forgetful functor preserves sums", [&](auto& why, auto&) {
            std::vector<Element> tagged;
            for (const auto& i : p1->states)
                tagged.push_back(pair(summand_tag(1), i));
            for (const auto& i : p2->states)
                tagged.push_back(pair(summand_tag(2), i));
            bool ok = oplus(*p1, *p2).states == FiniteSet(tagged);
            if (!ok)
                why = "states of the sum are not the tagged union";
            return ok;
        });
        rec.check("adjoint transposes are inverse", [&](auto& why, auto& ev) {
            FiniteSet i{atom("x"), atom("y")};
            Span l = random_span(c.rng, i, p1->states, c.opt.max_apex);
            Span r = random_span(c.rng, p1->states, i, c.opt.max_apex);
            auto ls = left_transpose(l, p1);
            auto rs = right_transpose(r, p1);
            if (!valid(ls, why, ev) || !valid(rs, why, ev))
                return false;
            bool ok = left_untranspose(ls) == l && right_untranspose(rs) == r;
            if (!ok)
                why = "transpose round trip changed the span";
            return ok;
        });
    }
}

// Sum over all permutations of s followed by the symmetry.
Simulation symmetrize(const Simulation& s, const GameRef& tp, std::size_t k)
{
    Simulation out = zero_sim(s.src, tp);
    for (const auto& sigma : all_perms(k))
        out = add(out, compose(s, symmetry_sim(tp, k, sigma)));
    return out;
}

bool is_identity_span(const Span& s, std::size_t size)
{
    std::set<Element> seen;
    for (const auto& r : s.apex) {
        if (!(s.leg1.at(r) == s.leg2.at(r)))
            return false;
        seen.insert(s.leg1.at(r));
    }
    return seen.size() == s.apex.size() && s.apex.size() == size;
}

void exponential(Context& c, Recorder& rec)
{
    std::size_t bound = c.opt.bound;
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        auto p = c.any_game();
        auto q = c.any_game();
        std::size_t k = uniform(c.rng, 1, 3);
        rec.check("orbit after section", [&](auto& why, auto&) {
            for (const auto& m : multisets(p->states, k))
                if (!(orbit(section(m)) == m)) {
                    why = "fails at " + to_string(m);
                    return false;
                }
            return true;
        });
        rec.check("orbit span after section span is the identity", [&](auto& why, auto&) {
            Span cs = compose_spans(hat_s(p->states, k), hat_c(p->states, k));
            bool ok = is_identity_span(cs, multisets(p->states, k).size());
            if (!ok)
                why = "composite is not the diagonal";
            return ok;
        });
        rec.check("power of one is the game", [&](auto& why, auto&) {
            bool ok = isomorphic(power_game(*p, 1, c.limits), *p);
            if (!ok)
                why = "carriers differ";
            return ok;
        });
        auto tp = share(tensor_power(*p, k, c.limits));
        rec.check("symmetries compose", [&](auto& why, auto& ev) {
            auto perms = all_perms(k);
            const Perm& s = perms[uniform(c.rng, 0, perms.size() - 1)];
            const Perm& t = perms[uniform(c.rng, 0, perms.size() - 1)];
            return equiv(compose(symmetry_sim(tp, k, s), symmetry_sim(tp, k, t)), symmetry_sim(tp, k, then(s, t)),
                         c.limits, why, ev);
        });
        rec.check("cone equalizes the symmetries", [&](auto& why, auto& ev) {
            auto ch = chat(p, k, c.limits);
            if (!valid(ch, why, ev))
                return false;
            for (const auto& sigma : all_perms(k))
                if (!equiv(compose(ch, symmetry_sim(tp, k, sigma)), ch, c.limits, why, ev, EquivMode::span_only))
                    return false;
            return true;
        });
        rec.check("factoring a symmetrized simulation", [&](auto& why, auto& ev) {
            auto s = symmetrize(c.sim(q, tp), tp, k);
            auto f = factor_through_power(s, p, k, std::nullopt, c.limits);
            return valid(f, why, ev) &&
                   equiv(compose(f, chat(p, k, c.limits)), s, c.limits, why, ev, EquivMode::span_only);
        });
        rec.check("factoring a cone composite recovers it", [&](auto& why, auto& ev) {
            auto pk = share(power_game(*p, k, c.limits));
            auto u = c.sim(q, pk);
            auto f = factor_through_power(compose(u, chat(p, k, c.limits)), p, k, std::nullopt, c.limits);
            return equiv(f, u, c.limits, why, ev, EquivMode::span_only);
        });
    }

    // Comonoid and comonad laws on the given games only.
    for (const auto& p : c.given) {
        for (std::size_t kk = 0; kk <= bound; ++kk) {
            auto b = share(bang(*p, kk, c.limits));
            auto idb = identity_sim(b);
            const std::string at = " (K=" + std::to_string(kk) + ")";
            rec.check("carrier of the exponential", [&](auto& why, auto&) {
                std::vector<Element> ms;
                for (std::size_t j = 0; j <= kk; ++j)
                    for (auto& m : multisets(p->states, j))
                        ms.push_back(m);
                bool ok = b->states == FiniteSet(ms);
                if (!ok)
                    why = "states are not the multisets of size at most K" + at;
                return ok;
            });
            rec.check("comultiplication counit laws", [&](auto& why, auto& ev) {
                auto cm = comul_sim(p, kk, c.limits);
                auto cu = counit_sim(p, kk, c.limits);
                auto l = compose(compose(cm, tensor_sim(cu, idb)), structural_iso(Structural::unit_l, v({b})));
                auto r = compose(compose(cm, tensor_sim(idb, cu)), structural_iso(Structural::unit_r, v({b})));
                return valid(cm, why, ev) && valid(cu, why, ev) && equiv(l, idb, c.limits, why, ev) &&
                       equiv(r, idb, c.limits, why, ev);
            });
            rec.check("comultiplication is coassociative", [&](auto& why, auto& ev) {
                auto cm = comul_sim(p, kk, c.limits);
                auto l = compose(compose(cm, tensor_sim(cm, idb)), structural_iso(Structural::assoc, v({b, b, b})));
                auto r = compose(cm, tensor_sim(idb, cm));
                return equiv(l, r, c.limits, why, ev);
            });
            rec.check("comultiplication is cocommutative", [&](auto& why, auto& ev) {
                auto cm = comul_sim(p, kk, c.limits);
                return equiv(compose(cm, structural_iso(Structural::symmetry, v({b, b}))), cm, c.limits, why, ev);
            });
            if (kk == 0)
                continue;
            rec.check("digging counit laws", [&](auto& why, auto& ev) {
                auto dig = digging_sim(p, kk, c.limits);
                return valid(dig, why, ev) &&
                       equiv(compose(dig, dereliction_sim(b, kk, c.limits)), idb, c.limits, why, ev) &&
                       equiv(compose(dig, bang_sim(dereliction_sim(p, kk, c.limits), kk, c.limits)), idb, c.limits,
                             why, ev);
            });
            if (kk == 1)
                rec.check("digging is coassociative (K=1)", [&](auto& why, auto& ev) {
                    auto dig = digging_sim(p, 1, c.limits);
                    return equiv(compose(dig, digging_sim(b, 1, c.limits)), compose(dig, bang_sim(dig, 1, c.limits)),
                                 c.limits, why, ev);
                });
            rec.check("deriving is valid", [&](auto& why, auto& ev) { return valid(deriving_sim(p, kk, c.limits), why, ev); });
        }
    }
}

void synthesis(Context& c, Recorder& rec)
{
    auto unit = share(unit_game());
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        auto p = c.any_game(), q = c.any_game();
        rec.check("regions are greatest post-fixpoints", [&](auto& why, auto&) {
            FiniteSet ha = alfred_region(*p).states, hd = dominic_region(*p).states;
            const auto& st = p->states.elements();
            for (std::size_t mask = 0; mask < (std::size_t{1} << st.size()); ++mask) {
                std::vector<Element> sub;
                for (std::size_t j = 0; j < st.size(); ++j)
                    if ((mask >> j) & 1)
                        sub.push_back(st[j]);
                FiniteSet h(sub);
                bool alf = true, dom = true;
                for (const auto& i : h) {
                    bool some = false, all = true;
                    for (const auto& a : p->moves_at(i)) {
                        bool every = true, exists = false;
                        for (const auto& d : p->counters_at(i, a)) {
                            bool in = h.contains(p->next_state(i, a, d));
                            every = every && in;
                            exists = exists || in;
                        }
                        some = some || every;
                        all = all && exists;
                    }
                    alf = alf && some;
                    dom = dom && all;
                }
                for (const auto& i : h)
                    if ((alf && !ha.contains(i)) || (dom && !hd.contains(i))) {
                        why = "post-fixpoint " + to_string(Element::mset(sub)) + " escapes the region";
                        return false;
                    }
            }
            return true;
        });
        rec.check("strategies are valid", [&](auto& why, auto& ev) {
            return valid(alfred_strategy(p), why, ev) && valid(dominic_strategy(p), why, ev);
        });
        rec.check("regions contain every strategy", [&](auto& why, auto& ev) {
            auto a = c.sim(unit, p), d = c.sim(p, unit);
            FiniteSet ha = alfred_region(*p).states, hd = dominic_region(*p).states;
            for (const auto& r : a.apex)
                if (!ha.contains(a.leg2.at(r))) {
                    why = "Alfred strategy reaches " + to_string(a.leg2.at(r)) + " outside the region";
                    ev = {a};
                    return false;
                }
            for (const auto& r : d.apex)
                if (!hd.contains(d.leg1.at(r))) {
                    why = "Dominic strategy reaches " + to_string(d.leg1.at(r)) + " outside the region";
                    ev = {d};
                    return false;
                }
            return true;
        });
        rec.check("maximal simulation is valid", [&](auto& why, auto& ev) { return valid(max_simulation(p, q), why, ev); });
        rec.check("maximal simulation contains every relation", [&](auto& why, auto& ev) {
            auto s = c.sim(p, q);
            FiniteSet rel = max_simulation_relation(*p, *q);
            for (const auto& r : s.apex)
                if (!rel.contains(pair(s.leg1.at(r), s.leg2.at(r)))) {
                    why = "pair " + to_string(pair(s.leg1.at(r), s.leg2.at(r))) + " missing from the maximal relation";
                    ev = {s};
                    return false;
                }
            return true;
        });
        rec.check("duality exchanges the players", [&](auto& why, auto& ev) {
            auto dp = share(dual(*p, c.limits));
            if (!(alfred_region(*dp).states == dominic_region(*p).states)) {
                why = "Alfred region of the dual differs from the Dominic region";
                return false;
            }
            auto s = c.sim(p, unit);
            auto t = dominic_to_dual_alfred(s, dp);
            if (!valid(t, why, ev))
                return false;
            bool ok = same_data(dual_alfred_to_dominic(t, p), s);
            if (!ok) {
                why = "strategy round trip changed the data";
                ev = {s, t};
            }
            return ok;
        });
    }
}

void multiset_suite(Context& c, Recorder& rec)
{
    for (std::size_t n = 0; n < c.opt.cases; ++n) {
        FiniteSet i(std::vector<Element>{atom("i0"), atom("i1")});
        if (uniform(c.rng, 0, 2) == 0)
            i = FiniteSet{atom("i0")};
        std::size_t k = uniform(c.rng, 1, 2);
        std::vector<Element> js;
        for (std::size_t j = uniform(c.rng, 1, 3); j > 0; --j)
            js.push_back(atom("j" + std::to_string(j)));
        FiniteSet jset(js);
        FiniteSet ws(words(i, k));
        Span raw = random_span(c.rng, ws, jset, 2);
        Span phi{ws, jset, {}, {}, {}};
        {
            std::vector<Element> apex;
            for (const auto& sigma : all_perms(k)) {
                Span part = compose_spans(symmetry_span(i, k, sigma), raw);
                for (const auto& r : part.apex) {
                    Element t = pair(tuple({atom(std::to_string(apex.size()))}), r);
                    phi.leg1.emplace(t, part.leg1.at(r));
                    phi.leg2.emplace(t, part.leg2.at(r));
                    apex.push_back(t);
                }
            }
            phi.apex = FiniteSet(std::move(apex));
        }
        rec.check("free monoid factor identifies the span", [&](auto& why, auto&) {
            auto f = span_free_monoid_factor(phi, i, k);
            auto bad = check_free_monoid_factor(phi, f);
            if (!bad.empty())
                why = bad.front();
            return bad.empty();
        });
        rec.check("free monoid factor is unique", [&](auto& why, auto&) {
            auto f = span_free_monoid_factor(phi, i, k);
            auto rep = factor_uniqueness(phi, f, i, k, c.limits);
            if (rep.factorings == 0 || rep.non_isomorphic != 0) {
                why = std::to_string(rep.factorings) + " factorings, " + std::to_string(rep.non_isomorphic) +
                      " not isomorphic to the constructed one";
                return false;
            }
            return true;
        });
    }
    rec.check("asymmetric span is rejected", [&](auto& why, auto&) {
        FiniteSet i{atom("i0"), atom("i1")};
        Span phi{FiniteSet(words(i, 2)), FiniteSet{atom("j")}, FiniteSet{atom("r")}, {}, {}};
        phi.leg1.emplace(atom("r"), tuple({atom("i0"), atom("i1")}));
        phi.leg2.emplace(atom("r"), atom("j"));
        try {
            span_free_monoid_factor(phi, i, 2);
        } catch (const NotEqualizing&) {
            return true;
        }
        why = "a span with a single asymmetric pair was accepted";
        return false;
    });
}

} // namespace

std::vector<LawResult> run_laws(const std::string& suite, const std::vector<Game>& games, const LawOptions& options)
{
    std::vector<std::string> run;
    if (suite == "all")
        run = law_suites();
    else if (std::find(law_suites().begin(), law_suites().end(), suite) != law_suites().end())
        run = {suite};
    else
        throw ShapeError("unknown law suite '" + suite + "'");

    std::vector<GameRef> given;
    if (games.empty())
        for (auto g : {fixtures::unit(), fixtures::coin(), fixtures::trap(), fixtures::oneway()})
            given.push_back(share(std::move(g)));
    else
        for (const auto& g : games)
            given.push_back(share(g));

    std::vector<LawResult> out;
    for (std::size_t n = 0; n < run.size(); ++n) {
        const auto& name = run[n];
        // Each suite draws from its own stream so suites are reproducible alone.
        std::size_t index = std::find(law_suites().begin(), law_suites().end(), name) - law_suites().begin();
        Context c{options, given, Rng(options.seed * 1000003u + index), options.limits};
        Recorder rec(out, name);
        if (name == "category")
            category(c, rec);
        else if (name == "enrichment")
            enrichment(c, rec);
        else if (name == "smcc")
            smcc(c, rec);
        else if (name == "biproduct")
            biproduct(c, rec);
        else if (name == "exponential")
            exponential(c, rec);
        else if (name == "synthesis")
            synthesis(c, rec);
        else
            multiset_suite(c, rec);
    }
    return out;
}

} // namespace polygame

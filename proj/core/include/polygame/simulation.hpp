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

#pragma once

#include <functional>
#include <map>
#include <optional>

#include "polygame/game.hpp"

namespace polygame {

/**
 * Simulation diagram from src to dst: a span of states with transports.
 *
 * For every apex element r and src move a1 at leg1(r), alpha answers with a
 * dst move; for every dst counter d2 to that move, beta answers with a src
 * counter and gamma names the apex element tracking the two next states.
 */
struct Simulation {
    GameRef src;
    GameRef dst;
    FiniteSet apex;
    std::map<Element, Element> leg1;
    std::map<Element, Element> leg2;
    std::map<Key2, Element> alpha;   ///< (r, a1) -> a2
    std::map<Key3, Element> beta;    ///< (r, a1, d2) -> d1
    std::map<Key3, Element> gamma;   ///< (r, a1, d2) -> r'

    const Game& p1() const { return *src; }
    const Game& p2() const { return *dst; }
};

/// Empty iff s is a valid simulation; entries outside the valid key set are
/// reported as extraneous.
Diagnostics check_simulation(const Simulation& s);

/// Throws ValidationError listing the diagnostics of s, if any.
void require_valid(const Simulation& s);

using AlphaFn = std::function<Element(const Element& r, const Element& a1)>;
using BetaFn = std::function<Element(const Element& r, const Element& a1, const Element& d2)>;
using GammaFn = BetaFn;

/**
 * Builds the transport tables by walking every (r, a1) and (r, a1, d2) of
 * the valid key set. The legs must already be total on the apex.
 */
Simulation tabulate(GameRef src, GameRef dst, FiniteSet apex, std::map<Element, Element> leg1,
                    std::map<Element, Element> leg2, const AlphaFn& alpha, const BetaFn& beta,
                    const GammaFn& gamma);

/**
 * Simulation whose apex is src's states, with leg1 the identity and leg2 the
 * given state map. Used for isomorphisms and graph spans of game maps.
 * gamma is the src next state.
 */
Simulation graph_sim(GameRef src, GameRef dst, const std::function<Element(const Element&)>& state,
                     const AlphaFn& alpha, const BetaFn& beta);

Simulation identity_sim(GameRef g);

/// s then t. Throws ShapeError if s.dst and t.src differ.
Simulation compose(const Simulation& s, const Simulation& t);

Simulation zero_sim(GameRef src, GameRef dst);

/// Disjoint union of apexes, tagged Pair("L", r) and Pair("R", r).
Simulation add(const Simulation& s, const Simulation& t);

/// Bijection between apexes.
struct SpanIso {
    std::map<Element, Element> forward;
    std::map<Element, Element> backward;
};

enum class EquivMode { full, span_only };

/**
 * Searches for an apex bijection commuting with the legs and, in full
 * mode, with alpha, beta and gamma.
 *
 * Returns nullopt when none exists. Throws SearchRefused when the apexes
 * have equal size above limits.search_bound, ShapeError when the endpoints
 * differ.
 */
std::optional<SpanIso> equivalent(const Simulation& s, const Simulation& t,
                                  EquivMode mode = EquivMode::full, const Limits& limits = {});

/// Span between two finite sets.
struct Span {
    FiniteSet from;
    FiniteSet to;
    FiniteSet apex;
    std::map<Element, Element> leg1;
    std::map<Element, Element> leg2;

    friend bool operator==(const Span&, const Span&) = default;
};

Span underlying_span(const Simulation& s);

/// Identity span (the diagonal).
Span identity_span(const FiniteSet& x);

/// Pullback composite with apex Pair(r, r').
Span compose_spans(const Span& a, const Span& b);

/// Legs-commuting bijection, or nullopt. Throws SearchRefused like equivalent.
std::optional<SpanIso> span_iso(const Span& a, const Span& b, const Limits& limits = {});

/// True when a's apex injects into b's commuting with the legs.
bool span_embeds(const Span& a, const Span& b);

/// Diagnostics for a span whose legs must be total and land in from / to.
Diagnostics check_span(const Span& s);

} // namespace polygame

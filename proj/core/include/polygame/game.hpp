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

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polygame/element.hpp"
#include "polygame/errors.hpp"

namespace polygame {

using Key2 = std::pair<Element, Element>;
using Key3 = std::tuple<Element, Element, Element>;

/**
 * Finite game, i.e. a polynomial diagram I <- D -> A -> I over finite sets.
 *
 * States carry Alfred moves, each move carries Dominic counters, and each
 * (state, move, counter) triple has a next state. The tables are plain
 * maps so that malformed games can be represented and diagnosed; every
 * constructor in the library produces games that pass validate_game().
 */
struct Game {
    FiniteSet states;
    std::map<Element, FiniteSet> moves;     ///< i -> A(i)
    std::map<Key2, FiniteSet> counters;     ///< (i, a) -> D(i, a)
    std::map<Key3, Element> next;           ///< (i, a, d) -> i[a/d]

    /// Checked accessors; throw ShapeError on a missing entry.
    const FiniteSet& moves_at(const Element& i) const;
    const FiniteSet& counters_at(const Element& i, const Element& a) const;
    const Element& next_state(const Element& i, const Element& a, const Element& d) const;

    std::size_t move_count() const { return counters.size(); }
    std::size_t counter_count() const { return next.size(); }

    /// Adds state i with move a, counter d and next state j, creating the
    /// intermediate entries as needed.
    void add_transition(const Element& i, const Element& a, const Element& d, const Element& j);

    friend bool operator==(const Game&, const Game&) = default;
};

using GameRef = std::shared_ptr<const Game>;

inline GameRef share(Game g) { return std::make_shared<const Game>(std::move(g)); }

/// A violated invariant, with the key it concerns.
struct Diagnostic {
    std::string what;
    std::string key;

    std::string to_string() const { return key.empty() ? what : what + " at " + key; }
};

using Diagnostics = std::vector<Diagnostic>;

/// Empty iff all Game invariants hold.
Diagnostics validate_game(const Game& g);

/// Family of finite sets indexed by the states of a game (an object of Set/I).
struct FamilySet {
    FiniteSet base;
    std::map<Element, FiniteSet> fiber;

    friend bool operator==(const FamilySet&, const FamilySet&) = default;
};

/**
 * Extension of g applied to x: the fibre at i is the set of Pair(a, f) with
 * a a move at i and f a Fun sending each counter d to an element of
 * x.fiber(i[a/d]).
 *
 * Throws ShapeError when x.base differs from g.states, SizingError when a
 * fibre would exceed limits.max_enum.
 */
FamilySet extend(const Game& g, const FamilySet& x, const Limits& limits = {});

/// Sum over moves of the product over counters of fibre sizes; no enumeration.
std::size_t extension_size(const Game& g, const FamilySet& x, const Element& i);

/// One half of a symmetric game: moves per state with their successor.
struct MoveSpan {
    std::map<Element, FiniteSet> moves;
    std::map<Key2, Element> next;
};

/**
 * Alternating game from a symmetric one. Alfred moves first along a_span;
 * Dominic's counters to (i, a) are his moves at the state reached,
 * n_a(i, a), and the next state is n_d applied there.
 *
 * Throws ValidationError when either span table is partial.
 */
Game from_symmetric_game(const FiniteSet& states, const MoveSpan& a_span, const MoveSpan& d_span);

/// True when g and h are equal after renaming states, moves and counters.
bool isomorphic(const Game& g, const Game& h);

namespace fixtures {

/// One state, one move, one counter, looping.
Game unit();
/// States h and t; a single flip move whose counters land_h / land_t choose the side.
Game coin();
/// ok --go--> {safe: ok, trap: dead}; dead has no move.
Game trap();
/// trap() without the trap counter.
Game oneway();
/// No states.
Game empty();

} // namespace fixtures

} // namespace polygame

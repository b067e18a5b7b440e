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

#include <span>
#include <utility>

#include "polygame/simulation.hpp"

namespace polygame {

/// Tag of the k-th summand (k = 1, 2) of a binary sum: Atom "L" or "R".
Element summand_tag(int k);

/// Disjoint union; every state, move and counter of p_k is Pair(tag_k, e).
Game oplus(const Game& p1, const Game& p2);

/// No states.
Game zero_game();

/// Indexed sum; component k is tagged Pair(Atom("<k>"), e), k from 0.
Game bigoplus(std::span<const Game> games);

/// p_k -> p1 ⊕ p2, the graph of the tagged inclusion.
Simulation injection(int k, GameRef p1, GameRef p2);

/// p1 ⊕ p2 -> p_k, the injection's span with its legs swapped.
Simulation projection(int k, GameRef p1, GameRef p2);

/// [s1, s2] : P1 ⊕ P2 -> Q with a tagged disjoint apex.
Simulation copair(const Simulation& s1, const Simulation& s2);

/// <s1, s2> : Q -> P1 ⊕ P2, defined as s1;ι1 + s2;ι2.
Simulation pairing(const Simulation& s1, const Simulation& s2);

/// Splits s : P1 ⊕ P2 -> Q along the tags of its source leg.
std::pair<Simulation, Simulation> split_copair(const Simulation& s, GameRef p1, GameRef p2);

/// L(I): states I, no moves.
Game free_game(const FiniteSet& i);

/// R(I): states I, the single move at i is i itself and has no counters.
Game cofree_game(const FiniteSet& i);

/// Span I -> U(P) as a simulation L(I) -> P, and back.
Simulation left_transpose(const Span& s, GameRef p);
Span left_untranspose(const Simulation& s);

/// Span U(P) -> I as a simulation P -> R(I), and back.
Simulation right_transpose(const Span& s, GameRef p);
Span right_untranspose(const Simulation& s);

} // namespace polygame

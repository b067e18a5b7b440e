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

#include "polygame/simulation.hpp"

namespace polygame {

/// Pointwise product: both games advance together.
Game tensor(const Game& p1, const Game& p2);

/// One state, one move, one counter, all the star.
Game unit_game();

/// s1 ⊗ s2, apex Pair(r1, r2).
Simulation tensor_sim(const Simulation& s1, const Simulation& s2);

/**
 * Internal hom P2 ⊸ P3. States are Pair(i2, i3); a move is Pair(f, phi)
 * where f maps P2 moves to P3 moves and phi(a2) maps P3 counters to f(a2)
 * back to P2 counters to a2. Counters of (f, phi) are Pair(a2, d3).
 *
 * Throws SizingError when some state would have more than limits.max_enum
 * moves; the count is computed before anything is enumerated.
 */
Game lollipop(const Game& p2, const Game& p3, const Limits& limits = {});

/// Number of lollipop moves at (i2, i3), saturating at SIZE_MAX.
std::size_t lollipop_move_count(const Game& p2, const Game& p3, const Element& i2, const Element& i3);

/// P1 ⊗ P2 -> P3 becomes P1 -> (P2 ⊸ P3); the apex is kept as is.
Simulation curry(const Simulation& s, GameRef p1, GameRef p2, const Limits& limits = {});

/// Inverse of curry: P1 -> (P2 ⊸ P3) becomes P1 ⊗ P2 -> P3.
Simulation uncurry(const Simulation& s, GameRef p2, GameRef p3);

/// (P2 ⊸ P3) ⊗ P2 -> P3.
Simulation eval_sim(GameRef p2, GameRef p3, const Limits& limits = {});

enum class Structural { assoc, unit_l, unit_r, symmetry };

/**
 * Coherence isomorphisms of ⊗:
 *   assoc    (P ⊗ Q) ⊗ R -> P ⊗ (Q ⊗ R)   games = {P, Q, R}
 *   unit_l   1 ⊗ P -> P                   games = {P}
 *   unit_r   P ⊗ 1 -> P                   games = {P}
 *   symmetry P ⊗ Q -> Q ⊗ P               games = {P, Q}
 * With inverse set, the reverse direction.
 */
Simulation structural_iso(Structural kind, std::span<const GameRef> games, bool inverse = false);

/**
 * Simulation induced by a renaming rho of elements applied uniformly to
 * states and moves, with counters renamed back by rho_inv.
 */
Simulation rearrangement_sim(GameRef src, GameRef dst, const std::function<Element(const Element&)>& rho,
                             const std::function<Element(const Element&)>& rho_inv);

/**
 * Linear negation. Moves at i are the Funs choosing a counter for every
 * move of p at i; the counters of such a choice are p's moves, and
 * next(i, f, a) = p.next(i, a, f(a)).
 */
Game dual(const Game& p, const Limits& limits = {});

} // namespace polygame

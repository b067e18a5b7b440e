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

#include "polygame/simulation.hpp"

namespace polygame {

enum class Side { alfred, dominic };

/// Post-fixpoint of one player's safety step, with the number of rounds
/// the downward iteration took.
struct Region {
    FiniteSet states;
    Side side = Side::alfred;
    std::size_t rounds = 0;
};

/// Greatest H with: every i in H has a move all of whose counters stay in H.
Region alfred_region(const Game& p);

/// Greatest H with: at every i in H, every move has a counter staying in H.
Region dominic_region(const Game& p);

/// Non-losing strategy for Alfred as a simulation unit_game -> p, apex the
/// region, answering with the first safe move.
Simulation alfred_strategy(GameRef p);

/// Non-losing strategy for Dominic as a simulation p -> unit_game, apex the
/// region, answering with the first safe counter.
Simulation dominic_strategy(GameRef p);

/// Greatest relation R with: for (i1, i2) in R, every a1 has an a2 such that
/// every d2 has a d1 with the next pair in R.
FiniteSet max_simulation_relation(const Game& p1, const Game& p2, std::size_t* rounds = nullptr);

/// The relation above as a simulation, apex Pair(i1, i2), first witnesses.
Simulation max_simulation(GameRef p1, GameRef p2);

/// Whether (i1, i2) is in the maximal relation. Throws ShapeError for
/// states outside the games.
bool sim_exists(const Game& p1, const Game& p2, const Element& i1, const Element& i2);

/// Dominic strategy P -> 1 as an Alfred strategy 1 -> dual(P), and back.
/// The apex is kept; beta choices become choice functions.
Simulation dominic_to_dual_alfred(const Simulation& s, GameRef dual_p);
Simulation dual_alfred_to_dominic(const Simulation& t, GameRef p);

} // namespace polygame

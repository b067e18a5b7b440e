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

#include <cstdint>
#include <random>

#include "polygame/simulation.hpp"

namespace polygame {

using Rng = std::mt19937_64;

/// Size caps for generated games; desk scale by default.
struct GameShape {
    std::size_t max_states = 3;
    std::size_t max_moves = 2;
    std::size_t max_counters = 2;
    bool allow_dead_ends = true;   ///< states without moves, moves without counters
};

/// States s0.., moves a0.., counters d0..; next chosen uniformly.
Game random_game(Rng& rng, const GameShape& shape = {});

/// Random element of depth at most depth over a few atoms.
Element random_element(Rng& rng, int depth);

/**
 * Valid simulation src -> dst with at most max_apex apex elements. Apex
 * candidates (state pairs, possibly repeated) are pruned to the largest
 * closed subset, then transports are chosen at random among the valid
 * ones. May be empty.
 */
Simulation random_simulation(Rng& rng, GameRef src, GameRef dst, std::size_t max_apex = 3);

/**
 * Candidate simulation: either a valid one with a few random corruptions
 * or arbitrary tables. Used to test the checker.
 */
Simulation random_candidate(Rng& rng, GameRef src, GameRef dst, std::size_t max_apex = 3);

/// Random span between two sets with at most max_apex apex elements.
Span random_span(Rng& rng, const FiniteSet& from, const FiniteSet& to, std::size_t max_apex = 3);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

} // namespace polygame

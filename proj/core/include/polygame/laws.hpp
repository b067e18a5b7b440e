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
#include <string>
#include <vector>

#include "polygame/simulation.hpp"

namespace polygame {

/// Outcome of one law over all its cases.
struct LawResult {
    std::string suite;
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;          ///< cases refused by a size or search bound
    std::string counterexample;       ///< first failure, described
    std::vector<Simulation> evidence; ///< simulations involved in the first failure

    bool ok() const { return failures == 0; }
};

struct LawOptions {
    std::uint64_t seed = 0;
    std::size_t cases = 20;       ///< random cases per law
    std::size_t max_apex = 2;     ///< apex size of random simulations
    std::size_t bound = 2;        ///< truncation bound K for !
    Limits limits{10000, 64};     ///< laws search larger apexes than the default
};

/// category, enrichment, smcc, biproduct, exponential, synthesis, multiset.
const std::vector<std::string>& law_suites();

/**
 * Runs one suite (or "all") on the given games together with random games
 * drawn from the seed. With no games, the fixtures are used. Deterministic
 * for fixed inputs. Throws ShapeError for an unknown suite.
 */
std::vector<LawResult> run_laws(const std::string& suite, const std::vector<Game>& games,
                                const LawOptions& options = {});

} // namespace polygame

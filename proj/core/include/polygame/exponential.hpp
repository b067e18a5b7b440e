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
#include <optional>
#include <vector>

#include "polygame/simulation.hpp"

namespace polygame {

/// Permutation in one-line notation; act(sigma, x)_j = x_{sigma(j)}.
using Perm = std::vector<std::size_t>;

/// Multiset of the word's items.
Element orbit(const Element& word);

/// Sorted word of the multiset's items; orbit(section(m)) == m.
Element section(const Element& mset);

Element act(const Perm& sigma, const Element& word);
Perm inverse(const Perm& sigma);
/// act(then(s, t), x) == act(t, act(s, x)).
Perm then(const Perm& s, const Perm& t);
/// All permutations of k in lexicographic order.
std::vector<Perm> all_perms(std::size_t k);

/// Lexicographically least sigma with act(sigma, from) == to, if any.
std::optional<Perm> matching_perm(const Element& from, const Element& to);

/// All multisets of size k over s.
std::vector<Element> multisets(const FiniteSet& s, std::size_t k);
/// All words of length k over s.
std::vector<Element> words(const FiniteSet& s, std::size_t k);

/**
 * Symmetric power P^k. States are size-k multisets; a move at m is a word of
 * Pair(state, move) whose state word has orbit m; counters are words of
 * counters, position by position; next is the orbit of the pointwise next.
 */
Game power_game(const Game& p, std::size_t k, const Limits& limits = {});

/// P ⊗ ... ⊗ P with flat tuples for states, moves and counters.
Game tensor_power(const Game& p, std::size_t k, const Limits& limits = {});

/// Action of sigma on P^{⊗k}, the graph of x -> act(sigma, x).
Simulation symmetry_sim(GameRef tensor_pow, std::size_t k, const Perm& sigma);

/**
 * Cone from P^k to P^{⊗k}. The apex is the state words; a move word is
 * reordered by the least permutation taking its state word to the apex
 * word, and counters are reordered back.
 */
Simulation chat(GameRef p, std::size_t k, const Limits& limits = {});

using ElementMap = std::map<Element, Element>;

/**
 * Given h on words over U preserving orbits and g : V -> U, the map
 * rho(v) = act(sigma, v) with sigma the least permutation taking g^k(v) to
 * h(g^k(v)). Throws ValidationError if h does not preserve orbits.
 */
ElementMap permutation_transport(const ElementMap& h, const ElementMap& g, const FiniteSet& v,
                                 std::size_t k);

/// Checks orbit(rho v) = orbit(v), g^k∘rho = h∘g^k, and that the square is a
/// pullback. Returns the violations.
std::vector<std::string> check_transport_square(const ElementMap& h, const ElementMap& g,
                                                const ElementMap& rho, const FiniteSet& v, std::size_t k);

/// H_sigma for each sigma, bijections of an apex.
using SymWitness = std::map<Perm, ElementMap>;

/**
 * Witnesses that (apex, j, f) equalizes the symmetries: f∘H_sigma =
 * act(sigma)∘f and j∘H_sigma = j. Throws NotEqualizing when some sigma
 * has none.
 */
SymWitness find_witnesses(const FiniteSet& apex, const ElementMap& j, const ElementMap& f, std::size_t k);

/// Violations of the witness conditions (missing sigma, non-bijective, ...).
std::vector<std::string> check_witnesses(const SymWitness& w, const FiniteSet& apex, const ElementMap& j,
                                         const ElementMap& f, std::size_t k);

/**
 * Factors s : Q -> P^{⊗k} through chat. The apex keeps the r whose target
 * word is sorted; gamma is re-sorted with the witness of the sorting
 * permutation.
 *
 * Throws NotEqualizing when s does not equalize the symmetries (span
 * level), WitnessError when supplied witnesses are wrong.
 */
Simulation factor_through_power(const Simulation& s, GameRef p, std::size_t k,
                                const std::optional<SymWitness>& witnesses = std::nullopt,
                                const Limits& limits = {});

/// !P truncated to multisets of size at most K; states are the multisets.
Game bang(const Game& p, std::size_t bound, const Limits& limits = {});

/// !P -> 1.
Simulation counit_sim(GameRef p, std::size_t bound, const Limits& limits = {});
/// !P -> !P ⊗ !P, apex Pair(m, Pair(m1, m2)) with m1 ⊎ m2 = m.
Simulation comul_sim(GameRef p, std::size_t bound, const Limits& limits = {});
/// !P -> P, apex Pair({i}, i). Needs bound >= 1.
Simulation dereliction_sim(GameRef p, std::size_t bound, const Limits& limits = {});
/// !P -> !!P, apex Pair(m, M) with ⊎M = m; both bounds are K.
Simulation digging_sim(GameRef p, std::size_t bound, const Limits& limits = {});
/// P ⊗ !P_{K-1} -> !P_K, apex Pair(Pair(i, m), {i} ⊎ m). Throws ShapeError for K = 0.
Simulation deriving_sim(GameRef p, std::size_t bound, const Limits& limits = {});
/// !u : !X -> !Y, apex the multisets of u's apex of size at most K.
Simulation bang_sim(const Simulation& u, std::size_t bound, const Limits& limits = {});

/// Orbit span I^k -> Mf^k(I) and its section Mf^k(I) -> I^k.
Span hat_c(const FiniteSet& i, std::size_t k);
Span hat_s(const FiniteSet& i, std::size_t k);

/// Graph span of act(sigma) on I^k.
Span symmetry_span(const FiniteSet& i, std::size_t k, const Perm& sigma);

struct FreeMonoidFactor {
    Span psi;                 ///< Mf^k(I) -> J
    Span composite;           ///< psi after hat_c, I^k -> J
    ElementMap epsilon;       ///< phi's apex -> composite's apex
    SymWitness witnesses;
};

/**
 * Factors phi : I^k -> J through hat_c: psi = hat_s then phi, and epsilon
 * identifies phi with psi after hat_c using the witnesses. Throws
 * NotEqualizing when phi does not coequalize the symmetries.
 */
FreeMonoidFactor span_free_monoid_factor(const Span& phi, const FiniteSet& i, std::size_t k,
                                         const std::optional<SymWitness>& witnesses = std::nullopt);

/// Empty iff epsilon is a legs-commuting bijection from phi to the composite.
std::vector<std::string> check_free_monoid_factor(const Span& phi, const FreeMonoidFactor& f);

/**
 * Exhaustively enumerates spans psi' : Mf^k(I) -> J up to isomorphism
 * (count matrices) and returns how many satisfy psi' after hat_c ≅ phi and
 * how many of those are not isomorphic to f.psi.
 */
struct UniquenessReport {
    std::size_t candidates = 0;
    std::size_t factorings = 0;
    std::size_t non_isomorphic = 0;
};
UniquenessReport factor_uniqueness(const Span& phi, const FreeMonoidFactor& f, const FiniteSet& i,
                                   std::size_t k, const Limits& limits = {});

} // namespace polygame

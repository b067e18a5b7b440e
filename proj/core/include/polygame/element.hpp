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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polygame {

/**
 * Structured value naming a state, move or counter of a game.
 *
 * Elements form a closed grammar (atoms, the star, pairs, tuples, multisets
 * and finite functions) with a global total order: first by constructor
 * tag, then lexicographically by fields. Composite games name their states
 * and moves with nested elements instead of integer renaming tables.
 *
 * Elements are immutable and cheap to copy (shared nodes).
 */
class Element {
public:
    enum class Kind : std::uint8_t { atom, star, pair, tuple, mset, fun };

    using Binding = std::pair<Element, Element>;

    /// The star.
    Element();

    static Element atom(std::string name);
    static Element star() { return Element(); }
    static Element pair(Element fst, Element snd);
    static Element tuple(std::vector<Element> items);

    /// Multiset; items are sorted.
    static Element mset(std::vector<Element> items);

    /// Finite function; the graph is sorted by key. Duplicate keys are kept
    /// and reported by element_diagnostics().
    static Element fun(std::vector<Binding> graph);

    /// Constructors that keep the given order (used by parsers before
    /// canonicalization).
    static Element raw_mset(std::vector<Element> items);
    static Element raw_fun(std::vector<Binding> graph);

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    /// Atom name. Empty for other kinds.
    const std::string& name() const;

    const Element& fst() const;
    const Element& snd() const;

    /// Items of a pair (two), tuple or multiset. Empty for other kinds.
    std::span<const Element> items() const;
    std::size_t size() const { return items().size(); }
    const Element& operator[](std::size_t i) const { return items()[i]; }

    /// Graph of a function.
    std::span<const Binding> graph() const;

    /// Function application; nullptr when key is not in the domain.
    const Element* lookup(const Element& key) const;

    /// Function application; throws std::out_of_range when undefined.
    const Element& apply(const Element& key) const;

    friend std::strong_ordering operator<=>(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);

private:
    struct Node;
    explicit Element(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Recursively sorts multisets and function graphs. Idempotent.
Element canonicalize(const Element& e);

/// Invariant violations inside e (unsorted multisets, unsorted or duplicate
/// function keys, empty atom names). Empty when e is canonical and valid.
std::vector<std::string> element_diagnostics(const Element& e);

/// Compact text form, identical to the JSON encoding used by the CLI.
std::string to_string(const Element& e);

inline Element atom(std::string name) { return Element::atom(std::move(name)); }
inline Element pair(Element a, Element b) { return Element::pair(std::move(a), std::move(b)); }
inline Element tuple(std::vector<Element> items) { return Element::tuple(std::move(items)); }

/**
 * Finite set of elements, kept sorted in the canonical order and without
 * duplicates.
 */
class FiniteSet {
public:
    using const_iterator = std::vector<Element>::const_iterator;

    FiniteSet() = default;
    FiniteSet(std::initializer_list<Element> elems);
    explicit FiniteSet(std::vector<Element> elems);

    bool contains(const Element& e) const;
    std::optional<std::size_t> index_of(const Element& e) const;

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Element& operator[](std::size_t i) const { return elems_[i]; }
    const_iterator begin() const { return elems_.begin(); }
    const_iterator end() const { return elems_.end(); }
    const std::vector<Element>& elements() const { return elems_; }

    friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;
    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<Element> elems_;
};

/// All total functions dom -> cod as Fun elements (|cod|^|dom| of them).
FiniteSet enumerate_functions(const FiniteSet& dom, const FiniteSet& cod);

/// Dependent functions: every Fun mapping keys[i] into codomains[i].
std::vector<Element> dependent_functions(std::span<const Element> keys,
                                         std::span<const FiniteSet* const> codomains);

} // namespace polygame

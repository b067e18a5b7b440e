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

#include "polygame/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace polygame {

struct Element::Node {
    Kind kind = Kind::star;
    std::string name;
    std::vector<Element> items;
    std::vector<Binding> graph;
};

// All stars share one node.
Element::Element()
{
    static const auto star_node = std::make_shared<const Node>();
    node_ = star_node;
}

Element::Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Element Element::atom(std::string name)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::atom;
    n->name = std::move(name);
    return Element(std::move(n));
}

Element Element::pair(Element fst, Element snd)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::pair;
    n->items.reserve(2);
    n->items.push_back(std::move(fst));
    n->items.push_back(std::move(snd));
    return Element(std::move(n));
}

Element Element::tuple(std::vector<Element> items)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::tuple;
    n->items = std::move(items);
    return Element(std::move(n));
}

Element Element::raw_mset(std::vector<Element> items)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::mset;
    n->items = std::move(items);
    return Element(std::move(n));
}

Element Element::mset(std::vector<Element> items)
{
    std::sort(items.begin(), items.end());
    return raw_mset(std::move(items));
}

Element Element::raw_fun(std::vector<Binding> graph)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::fun;
    n->graph = std::move(graph);
    return Element(std::move(n));
}

Element Element::fun(std::vector<Binding> graph)
{
    std::stable_sort(graph.begin(), graph.end(),
                     [](const Binding& a, const Binding& b) { return a.first < b.first; });
    return raw_fun(std::move(graph));
}

Element::Kind Element::kind() const { return node_->kind; }

const std::string& Element::name() const { return node_->name; }

const Element& Element::fst() const
{
    if (node_->kind != Kind::pair)
        throw std::logic_error("fst() on a non-pair element " + to_string(*this));
    return node_->items[0];
}

const Element& Element::snd() const
{
    if (node_->kind != Kind::pair)
        throw std::logic_error("snd() on a non-pair element " + to_string(*this));
    return node_->items[1];
}

std::span<const Element> Element::items() const { return node_->items; }

std::span<const Element::Binding> Element::graph() const { return node_->graph; }

const Element* Element::lookup(const Element& key) const
{
    const auto& g = node_->graph;
    auto it = std::lower_bound(g.begin(), g.end(), key,
                               [](const Binding& b, const Element& k) { return b.first < k; });
    if (it == g.end() || !(it->first == key))
        return nullptr;
    return &it->second;
}

const Element& Element::apply(const Element& key) const
{
    if (const Element* v = lookup(key))
        return *v;
    throw std::out_of_range("function " + to_string(*this) + " undefined at " + to_string(key));
}

std::strong_ordering operator<=>(const Element& a, const Element& b)
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind)
        return x.kind <=> y.kind;
    switch (x.kind) {
    case Element::Kind::atom:
        return x.name <=> y.name;
    case Element::Kind::star:
        return std::strong_ordering::equal;
    case Element::Kind::pair:
    case Element::Kind::tuple:
    case Element::Kind::mset:
        return std::lexicographical_compare_three_way(x.items.begin(), x.items.end(),
                                                      y.items.begin(), y.items.end());
    case Element::Kind::fun:
        return std::lexicographical_compare_three_way(x.graph.begin(), x.graph.end(),
                                                      y.graph.begin(), y.graph.end());
    }
    return std::strong_ordering::equal;
}

bool operator==(const Element& a, const Element& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

Element canonicalize(const Element& e)
{
    switch (e.kind()) {
    case Element::Kind::atom:
    case Element::Kind::star:
        return e;
    case Element::Kind::pair:
        return Element::pair(canonicalize(e.fst()), canonicalize(e.snd()));
    case Element::Kind::tuple:
    case Element::Kind::mset: {
        std::vector<Element> items;
        items.reserve(e.size());
        for (const auto& it : e.items())
            items.push_back(canonicalize(it));
        return e.is(Element::Kind::tuple) ? Element::tuple(std::move(items))
                                          : Element::mset(std::move(items));
    }
    case Element::Kind::fun: {
        std::vector<Element::Binding> graph;
        graph.reserve(e.graph().size());
        for (const auto& [k, v] : e.graph())
            graph.emplace_back(canonicalize(k), canonicalize(v));
        return Element::fun(std::move(graph));
    }
    }
    return e;
}

namespace {

void collect_diagnostics(const Element& e, const std::string& path, std::vector<std::string>& out)
{
    switch (e.kind()) {
    case Element::Kind::atom:
        if (e.name().empty())
            out.push_back(path + ": empty atom name");
        return;
    case Element::Kind::star:
        return;
    case Element::Kind::pair:
    case Element::Kind::tuple:
    case Element::Kind::mset: {
        auto items = e.items();
        for (std::size_t i = 0; i < items.size(); ++i)
            collect_diagnostics(items[i], path + "[" + std::to_string(i) + "]", out);
        if (e.is(Element::Kind::mset) && !std::is_sorted(items.begin(), items.end()))
            out.push_back(path + ": multiset items not in canonical order");
        return;
    }
    case Element::Kind::fun: {
        auto g = e.graph();
        for (std::size_t i = 0; i < g.size(); ++i) {
            collect_diagnostics(g[i].first, path + ".key[" + std::to_string(i) + "]", out);
            collect_diagnostics(g[i].second, path + ".value[" + std::to_string(i) + "]", out);
            if (i > 0) {
                if (g[i - 1].first == g[i].first)
                    out.push_back(path + ": duplicate function key " + to_string(g[i].first));
                else if (g[i].first < g[i - 1].first)
                    out.push_back(path + ": function keys not in canonical order");
            }
        }
        return;
    }
    }
}

void append_json_string(std::string& out, const std::string& s)
{
    static const char* hex = "0123456789abcdef";
    out.push_back('"');
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                out += "\\u00";
                out.push_back(hex[c >> 4]);
                out.push_back(hex[c & 0xf]);
            } else {
                out.push_back(static_cast<char>(c));
            }
        }
    }
    out.push_back('"');
}

void append_text(std::string& out, const Element& e)
{
    auto list = [&out](std::span<const Element> items) {
        out.push_back('[');
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i)
                out.push_back(',');
            append_text(out, items[i]);
        }
        out.push_back(']');
    };
    switch (e.kind()) {
    case Element::Kind::atom:
        if (e.name() == "star") {
            out += "{\"atom\":\"star\"}";
        } else {
            append_json_string(out, e.name());
        }
        return;
    case Element::Kind::star:
        out += "\"star\"";
        return;
    case Element::Kind::pair:
        out += "{\"pair\":";
        list(e.items());
        out.push_back('}');
        return;
    case Element::Kind::tuple:
        out += "{\"tuple\":";
        list(e.items());
        out.push_back('}');
        return;
    case Element::Kind::mset:
        out += "{\"mset\":";
        list(e.items());
        out.push_back('}');
        return;
    case Element::Kind::fun: {
        out += "{\"fun\":[";
        auto g = e.graph();
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i)
                out.push_back(',');
            out.push_back('[');
            append_text(out, g[i].first);
            out.push_back(',');
            append_text(out, g[i].second);
            out.push_back(']');
        }
        out += "]}";
        return;
    }
    }
}

} // namespace

std::vector<std::string> element_diagnostics(const Element& e)
{
    std::vector<std::string> out;
    collect_diagnostics(e, "$", out);
    return out;
}

std::string to_string(const Element& e)
{
    std::string out;
    append_text(out, e);
    return out;
}

FiniteSet::FiniteSet(std::initializer_list<Element> elems) : FiniteSet(std::vector<Element>(elems)) {}

FiniteSet::FiniteSet(std::vector<Element> elems) : elems_(std::move(elems))
{
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSet::contains(const Element& e) const
{
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::optional<std::size_t> FiniteSet::index_of(const Element& e) const
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || !(*it == e))
        return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

std::vector<Element> dependent_functions(std::span<const Element> keys,
                                         std::span<const FiniteSet* const> codomains)
{
    if (keys.size() != codomains.size())
        throw std::invalid_argument("dependent_functions: keys and codomains differ in length");
    std::vector<Element> out;
    for (const FiniteSet* c : codomains)
        if (c->empty())
            return out;
    // Odometer over the codomains, last key varying fastest.
    std::vector<std::size_t> digit(keys.size(), 0);
    while (true) {
        std::vector<Element::Binding> graph;
        graph.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i)
            graph.emplace_back(keys[i], (*codomains[i])[digit[i]]);
        out.push_back(Element::fun(std::move(graph)));
        std::size_t pos = keys.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < codomains[pos]->size())
                break;
            digit[pos] = 0;
            if (pos == 0)
                return out;
        }
        if (keys.empty())
            return out;
    }
}

FiniteSet enumerate_functions(const FiniteSet& dom, const FiniteSet& cod)
{
    std::vector<const FiniteSet*> codomains(dom.size(), &cod);
    return FiniteSet(dependent_functions(dom.elements(), codomains));
}

} // namespace polygame

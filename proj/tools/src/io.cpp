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

#include "polygame/io.hpp"

#include <set>

namespace polygame::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError(path + ": " + what);
}

const Json& field(const Json& obj, const char* name, const std::string& path)
{
    auto it = obj.find(name);
    if (it == obj.end())
        fail(path, std::string("missing field '") + name + "'");
    return *it;
}

void only_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path)
{
    if (!obj.is_object())
        fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || k == a;
        if (!known)
            fail(path, "unknown field '" + k + "'");
    }
}

std::vector<Element> element_list(const Json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    std::vector<Element> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(element_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

FiniteSet element_set(const Json& j, const std::string& path)
{
    auto items = element_list(j, path);
    FiniteSet s(items);
    if (s.size() != items.size())
        fail(path, "duplicate element");
    return s;
}

Json set_json(const FiniteSet& s)
{
    Json out = Json::array();
    for (const auto& e : s)
        out.push_back(element_to_json(e));
    return out;
}

// Table keys are printed elements; a key names a Tuple of the coordinates.
Element key_element(const std::string& key, const std::string& path)
{
    Json j;
    try {
        j = Json::parse(key);
    } catch (const Json::parse_error& e) {
        fail(path, "key '" + key + "' is not an element: " + e.what());
    }
    Element e = element_from_json(j, path + "<key>");
    if (to_string(e) != key)
        fail(path, "key '" + key + "' is not in canonical form (expected '" + to_string(e) + "')");
    return e;
}

std::vector<Element> key_tuple(const std::string& key, std::size_t arity, const std::string& path)
{
    Element e = key_element(key, path);
    if (!e.is(Element::Kind::tuple) || e.size() != arity)
        fail(path, "key '" + key + "' is not a " + std::to_string(arity) + "-tuple");
    return {e.items().begin(), e.items().end()};
}

std::string key_text(const Element& e) { return to_string(e); }
std::string key_text(const Key2& k) { return to_string(tuple({k.first, k.second})); }
std::string key_text(const Key3& k)
{
    return to_string(tuple({std::get<0>(k), std::get<1>(k), std::get<2>(k)}));
}

template <class Map>
Json table_json(const Map& m)
{
    Json out = Json::object();
    for (const auto& [k, v] : m)
        out[key_text(k)] = element_to_json(v);
    return out;
}

void expect_object(const Json& j, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
}

std::map<Element, Element> map1(const Json& j, const std::string& path)
{
    expect_object(j, path);
    std::map<Element, Element> out;
    for (const auto& [k, v] : j.items())
        out.emplace(key_element(k, path), element_from_json(v, path + "." + k));
    return out;
}

std::map<Key2, Element> map2(const Json& j, const std::string& path)
{
    expect_object(j, path);
    std::map<Key2, Element> out;
    for (const auto& [k, v] : j.items()) {
        auto t = key_tuple(k, 2, path);
        out.emplace(Key2{t[0], t[1]}, element_from_json(v, path + "." + k));
    }
    return out;
}

std::map<Key3, Element> map3(const Json& j, const std::string& path)
{
    expect_object(j, path);
    std::map<Key3, Element> out;
    for (const auto& [k, v] : j.items()) {
        auto t = key_tuple(k, 3, path);
        out.emplace(Key3{t[0], t[1], t[2]}, element_from_json(v, path + "." + k));
    }
    return out;
}

} // namespace

const char* kind_name(DocKind k)
{
    switch (k) {
    case DocKind::game: return "game";
    case DocKind::simulation: return "simulation";
    case DocKind::region: return "region";
    case DocKind::report: return "report";
    }
    return "report";
}

Json element_to_json(const Element& e)
{
    auto list = [](std::span<const Element> items) {
        Json a = Json::array();
        for (const auto& x : items)
            a.push_back(element_to_json(x));
        return a;
    };
    switch (e.kind()) {
    case Element::Kind::atom:
        if (e.name() == "star")
            return Json{{"atom", "star"}};
        return e.name();
    case Element::Kind::star:
        return "star";
    case Element::Kind::pair:
        return Json{{"pair", list(e.items())}};
    case Element::Kind::tuple:
        return Json{{"tuple", list(e.items())}};
    case Element::Kind::mset:
        return Json{{"mset", list(e.items())}};
    case Element::Kind::fun: {
        Json g = Json::array();
        for (const auto& [k, v] : e.graph())
            g.push_back(Json::array({element_to_json(k), element_to_json(v)}));
        return Json{{"fun", g}};
    }
    }
    return nullptr;
}

Element element_from_json(const Json& j, const std::string& path)
{
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "star")
            return Element::star();
        if (s.empty())
            fail(path, "empty atom name");
        return atom(s);
    }
    if (!j.is_object() || j.size() != 1)
        fail(path, "expected an element (string or single-field object)");
    const auto& [tag, body] = *j.items().begin();
    if (tag == "atom") {
        if (!body.is_string() || body.get_ref<const std::string&>().empty())
            fail(path, "atom needs a non-empty name");
        return atom(body.get<std::string>());
    }
    if (tag == "pair") {
        auto items = element_list(body, path + ".pair");
        if (items.size() != 2)
            fail(path, "pair needs exactly two elements");
        return pair(items[0], items[1]);
    }
    if (tag == "tuple")
        return tuple(element_list(body, path + ".tuple"));
    if (tag == "mset")
        return Element::mset(element_list(body, path + ".mset"));
    if (tag == "fun") {
        if (!body.is_array())
            fail(path + ".fun", "expected an array of [key, value] pairs");
        std::vector<Element::Binding> graph;
        for (std::size_t i = 0; i < body.size(); ++i) {
            const std::string p = path + ".fun[" + std::to_string(i) + "]";
            if (!body[i].is_array() || body[i].size() != 2)
                fail(p, "expected [key, value]");
            graph.emplace_back(element_from_json(body[i][0], p + "[0]"), element_from_json(body[i][1], p + "[1]"));
        }
        Element f = Element::fun(std::move(graph));
        for (const auto& d : element_diagnostics(f))
            fail(path, d);
        return f;
    }
    fail(path, "unknown element tag '" + tag + "'");
}

Element parse_element(const std::string& text)
{
    try {
        return element_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json game_to_json(const Game& g)
{
    Json moves = Json::object();
    for (const auto& [i, a] : g.moves)
        moves[key_text(i)] = set_json(a);
    Json counters = Json::object();
    for (const auto& [k, d] : g.counters)
        counters[key_text(k)] = set_json(d);
    return Json{{"states", set_json(g.states)}, {"moves", moves}, {"counters", counters}, {"next", table_json(g.next)}};
}

Game game_from_json(const Json& j, const std::string& path)
{
    only_fields(j, {"states", "moves", "counters", "next"}, path);
    Game g;
    g.states = element_set(field(j, "states", path), path + ".states");
    const Json& moves = field(j, "moves", path);
    expect_object(moves, path + ".moves");
    for (const auto& [k, v] : moves.items())
        g.moves.emplace(key_element(k, path + ".moves"), element_set(v, path + ".moves." + k));
    const Json& counters = field(j, "counters", path);
    expect_object(counters, path + ".counters");
    for (const auto& [k, v] : counters.items()) {
        auto t = key_tuple(k, 2, path + ".counters");
        g.counters.emplace(Key2{t[0], t[1]}, element_set(v, path + ".counters." + k));
    }
    g.next = map3(field(j, "next", path), path + ".next");
    auto diags = validate_game(g);
    if (!diags.empty())
        throw ValidationError(path + ": invalid game: " + diags.front().to_string());
    return g;
}

Json simulation_to_json(const Simulation& s)
{
    return Json{{"src", game_to_json(*s.src)},   {"dst", game_to_json(*s.dst)},  {"apex", set_json(s.apex)},
                {"leg1", table_json(s.leg1)},    {"leg2", table_json(s.leg2)},   {"alpha", table_json(s.alpha)},
                {"beta", table_json(s.beta)},    {"gamma", table_json(s.gamma)}};
}

Simulation simulation_from_json(const Json& j, const std::string& path)
{
    only_fields(j, {"src", "dst", "apex", "leg1", "leg2", "alpha", "beta", "gamma"}, path);
    Simulation s;
    s.src = share(game_from_json(field(j, "src", path), path + ".src"));
    s.dst = share(game_from_json(field(j, "dst", path), path + ".dst"));
    s.apex = element_set(field(j, "apex", path), path + ".apex");
    s.leg1 = map1(field(j, "leg1", path), path + ".leg1");
    s.leg2 = map1(field(j, "leg2", path), path + ".leg2");
    s.alpha = map2(field(j, "alpha", path), path + ".alpha");
    s.beta = map3(field(j, "beta", path), path + ".beta");
    s.gamma = map3(field(j, "gamma", path), path + ".gamma");
    return s;
}

Json region_to_json(const Region& r)
{
    return Json{{"side", r.side == Side::alfred ? "alfred" : "dominic"},
                {"states", set_json(r.states)},
                {"rounds", r.rounds}};
}

Region region_from_json(const Json& j, const std::string& path)
{
    only_fields(j, {"side", "states", "rounds"}, path);
    Region r;
    const Json& side = field(j, "side", path);
    if (side == "alfred")
        r.side = Side::alfred;
    else if (side == "dominic")
        r.side = Side::dominic;
    else
        fail(path + ".side", "expected \"alfred\" or \"dominic\"");
    r.states = element_set(field(j, "states", path), path + ".states");
    const Json& rounds = field(j, "rounds", path);
    if (!rounds.is_number_unsigned())
        fail(path + ".rounds", "expected a non-negative integer");
    r.rounds = rounds.get<std::size_t>();
    return r;
}

Json document_to_json(const Document& d)
{
    Json payload;
    switch (d.kind) {
    case DocKind::game: payload = game_to_json(std::get<Game>(d.payload)); break;
    case DocKind::simulation: payload = simulation_to_json(std::get<Simulation>(d.payload)); break;
    case DocKind::region: payload = region_to_json(std::get<Region>(d.payload)); break;
    case DocKind::report: payload = std::get<Json>(d.payload); break;
    }
    return Json{{"format_version", kFormatVersion}, {"kind", kind_name(d.kind)}, {"payload", payload}};
}

Document document_from_json(const Json& j)
{
    only_fields(j, {"format_version", "kind", "payload"}, "$");
    if (field(j, "format_version", "$") != kFormatVersion)
        fail("$.format_version", std::string("unsupported version (expected \"") + kFormatVersion + "\")");
    const Json& kind = field(j, "kind", "$");
    const Json& payload = field(j, "payload", "$");
    if (kind == "game")
        return make_document(game_from_json(payload, "$.payload"));
    if (kind == "simulation")
        return make_document(simulation_from_json(payload, "$.payload"));
    if (kind == "region")
        return make_document(region_from_json(payload, "$.payload"));
    if (kind == "report") {
        expect_object(payload, "$.payload");
        return make_report(payload);
    }
    fail("$.kind", "unknown document kind");
}

Document parse(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return document_from_json(j);
}

std::string print(const Document& d, bool pretty)
{
    return document_to_json(d).dump(pretty ? 2 : -1) + "\n";
}

Document make_document(Game g) { return Document{DocKind::game, std::move(g)}; }
Document make_document(Simulation s) { return Document{DocKind::simulation, std::move(s)}; }
Document make_document(Region r) { return Document{DocKind::region, std::move(r)}; }
Document make_report(Json payload) { return Document{DocKind::report, std::move(payload)}; }

} // namespace polygame::io

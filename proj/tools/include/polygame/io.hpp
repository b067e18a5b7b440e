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

#include <string>
#include <variant>

#include "polygame/synthesis.hpp"

#include "json.hpp"

namespace polygame::io {

using Json = nlohmann::ordered_json;

/// Malformed input text or a document that violates the format.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class DocKind { game, simulation, region, report };

/**
 * Top-level exchange format:
 *   {"format_version": "1", "kind": ..., "payload": ...}
 * Reports carry free-form JSON; the other kinds are typed.
 */
struct Document {
    DocKind kind = DocKind::report;
    std::variant<Game, Simulation, Region, Json> payload;
};

inline constexpr const char* kFormatVersion = "1";

Json element_to_json(const Element& e);
Element element_from_json(const Json& j, const std::string& path = "$");
Element parse_element(const std::string& text);

Json game_to_json(const Game& g);
/// Throws ParseError for structural problems, ValidationError with key
/// paths when the tables are inconsistent.
Game game_from_json(const Json& j, const std::string& path = "$");

Json simulation_to_json(const Simulation& s);
/// Checks table shapes only; validity is left to check_simulation.
Simulation simulation_from_json(const Json& j, const std::string& path = "$");

Json region_to_json(const Region& r);
Region region_from_json(const Json& j, const std::string& path = "$");

Json document_to_json(const Document& d);
Document document_from_json(const Json& j);

Document parse(const std::string& text);
std::string print(const Document& d, bool pretty = false);

Document make_document(Game g);
Document make_document(Simulation s);
Document make_document(Region r);
Document make_report(Json payload);

const char* kind_name(DocKind k);

} // namespace polygame::io

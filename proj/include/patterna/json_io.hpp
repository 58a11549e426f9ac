#pragma once

#include <json.hpp>

#include "patterna/cnf.hpp"
#include "patterna/decide.hpp"
#include "patterna/graph.hpp"
#include "patterna/hypergraph.hpp"
#include "patterna/pattern.hpp"
#include "patterna/semantics.hpp"

namespace patterna {

using Json = nlohmann::json;

// Writers emit canonical documents: keys sorted (nlohmann's default object
// ordering), index lists ascending, conditions and edges in canonical order.
// Readers throw ParseError on structural problems; semantic validation
// errors (IndexOutOfRange, ...) propagate from the domain constructors.

[[nodiscard]] Json to_json(const Condition& c);
[[nodiscard]] Json to_json(const Pattern& p);
[[nodiscard]] Json to_json(const PatternFlags& f);
[[nodiscard]] Json to_json(const SetFamily& fam);
[[nodiscard]] Json to_json(const Decision& d);
[[nodiscard]] Json to_json(const Hypergraph& h);
[[nodiscard]] Json to_json(const WitnessStructure& s);
[[nodiscard]] Json to_json(const Embedding& e);

[[nodiscard]] RawPattern raw_pattern_from_json(const Json& j);
[[nodiscard]] Pattern pattern_from_json(const Json& j, ValidationMode mode = ValidationMode::Strict);
[[nodiscard]] SetFamily set_family_from_json(const Json& j);
[[nodiscard]] Hypergraph hypergraph_from_json(const Json& j);
[[nodiscard]] WitnessStructure witness_structure_from_json(const Json& j);
[[nodiscard]] Embedding embedding_from_json(const Json& j);

/// Compact one-line rendering followed by a newline.
[[nodiscard]] std::string dump_canonical(const Json& j);

}  // namespace patterna

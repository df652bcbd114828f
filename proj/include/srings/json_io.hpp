#pragma once

#include <string>

#include <json.hpp>

#include "srings/aut.hpp"
#include "srings/catalog.hpp"
#include "srings/perm.hpp"
#include "srings/sring.hpp"
#include "srings/structure.hpp"

namespace srings {

using Json = nlohmann::ordered_json;

// Parses text; errors carry the byte offset.
Json parse_json(const std::string& text);

// {"n": int, "basic_sets": [[...], ...]}; n may be omitted and is then
// inferred from the largest element. The result is validated.
SRing ring_from_json(const Json& j);
Json ring_to_json(const SRing& a);

// {"degree": m, "generators": [[images...], ...]}
PermGroup group_from_json(const Json& j);
Json group_to_json(const PermGroup& g);

Json big_to_json(const BigInt& x);  // decimal string
Json section_to_json(const Section& s);  // [u, l]
Json proj_class_to_json(const ProjClass& c);
Json classification_to_json(const Classification& c);
Json schurity_to_json(const SchurityReport& r);
Json nonschurity_to_json(const NonschurityResult& r);
Json sweep_to_json(const SweepReport& r);
Json catalog_entry_to_json(const CatalogEntry& e);

}  // namespace srings

// json_io.hpp — JSON wire formats for every type the CLI emits or accepts.
// Rationals travel as [num, den] pairs of 64-bit integers; morphisms as
// {"dom", "cod", "values"}; see README for the full format reference.
#pragma once

#include <string>

#include "json.hpp"
#include "knaster/amalgam.hpp"
#include "knaster/chain.hpp"
#include "knaster/fraisse.hpp"
#include "knaster/plmap.hpp"
#include "knaster/rational.hpp"

namespace knaster {

// Key order is part of the output stability guarantee, hence ordered_json.
using Json = nlohmann::ordered_json;

// Error JsonParse on malformed text or structure; CountOverflow when a
// rational's reduced numerator or denominator exceeds 64 bits.
Json parse_json_text(const std::string& text);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json morphism_to_json(const Morphism& f);
// Re-validates, so the result is a genuine epimorphism or a DomainError.
Morphism morphism_from_json(const Json& j);

Json plmap_to_json(const PLOpenMap& f);
PLOpenMap plmap_from_json(const Json& j);

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

Json tower_to_json(const ChainTower& t);
ChainTower tower_from_json(const Json& j);

Json plan_to_json(const AmalgamationPlan& p);

Json sequence_to_json(const GenericSequence& s);
GenericSequence sequence_from_json(const Json& j);

}  // namespace knaster

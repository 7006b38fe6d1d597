#pragma once

#include <variant>

#include <nlohmann/json.hpp>

#include "cobalex/cobordism.hpp"

namespace cobalex {

// JSON cobordism descriptions:
//   {"g0": 1, "g1": 1, "gamma": [[...], ...]}   explicit lattice, list of columns
//   {"monodromy": [[1, -1], [1, 0]]}           graph of a symplectic matrix (rows)
//   {"elementary": {"kind": "Z" | "Zprime", "g": 1}}
//   {"compose": [<desc>, <desc>, ...]}          left-to-right gluing
//   {"close_up": {"of": <desc>, "phi": [[...]]}}  closed manifold, phi optional
//
// Integers may be JSON numbers or decimal strings.

using Described = std::variant<Cobordism, ClosedManifold>;

Described parse_descriptor(const nlohmann::json& j);

/// The cobordism a descriptor names; throws InvalidInput for close_up descriptors.
Cobordism cobordism_from_descriptor(const nlohmann::json& j);

/// A closed manifold; plain cobordisms are closed up with φ = identity.
ClosedManifold closed_from_descriptor(const nlohmann::json& j);

IntMatrix matrix_from_json(const nlohmann::json& rows);
nlohmann::ordered_json matrix_to_json(const IntMatrix& m);

/// {"g0":..,"g1":..,"gamma":[columns]}; round-trips through parse_descriptor.
nlohmann::ordered_json to_json(const Cobordism& c);
nlohmann::ordered_json to_json(const ClosedManifold& cm);

}  // namespace cobalex

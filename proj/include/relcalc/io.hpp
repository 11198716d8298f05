#pragma once

#include <string>

#include <json.hpp>

#include "relcalc/relation.hpp"

namespace relcalc {

using Json = nlohmann::ordered_json;

/// Parses a RelationDocument:
///   { "ambient_dim": n,
///     "spanning_pairs": [ {"f": [[re,im],...], "g": [[re,im],...]}, ... ],
///     "tol": {"rank_rel":..., "psd_abs":..., "eq_tol":...}  (optional) }
/// Unknown fields are rejected with SchemaError.
LinearRelation parse_relation(const std::string& text,
                              ToleranceProfile default_tol = {});

/// Emits a relation back into the RelationDocument schema.
Json relation_document(const LinearRelation& T);

/// Serializes a report document with a stable key order.
std::string emit_report(const Json& report);

/// Parses "a+bi" style complex literals ("2", "i", "-1.5+0.5i", "3-2i").
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

}  // namespace relcalc

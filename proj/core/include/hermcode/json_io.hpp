#pragma once

// JSON encodings shared by the runner and by tests.

#include <nlohmann/json.hpp>

#include "hermcode/bounds.hpp"
#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"

namespace hermcode {

/// {"p", "e", "modulus": [lowest coefficient first]}
nlohmann::json field_to_json(const FieldCtx& ctx);
/// Rebuilds the context; throws std::invalid_argument if the recorded modulus differs.
FieldCtx field_from_json(const nlohmann::json& j);

/// {"n", "d", "coeffs": [element codes in graded-lex monomial order]}
nlohmann::json form_to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const nlohmann::json& j);

/// {"value": integer or null, "provenance", "source"}
nlohmann::json bound_to_json(const BoundValue& b);

/// The mergeable fields of an oracle run.
nlohmann::json oracle_to_json(const OracleResult& r);
OracleResult oracle_from_json(const nlohmann::json& j);

}  // namespace hermcode

#pragma once

#include "jasonrs/gateway/http_types.hpp"
#include "jasonrs/logic/term.hpp"

namespace jasonrs::gateway {

/// JSON scalar to Term: number -> Num, identifier-shaped text -> Atom,
/// other text -> Str, boolean -> true/false atoms.
/// Throws HttpError 400 for objects and arrays, 422 for null and numbers
/// that do not fit the exact decimal type.
logic::Term scalar_to_term(const Json& value);

/// Extracts `data` from a body that must be exactly {"data": <scalar>}.
logic::Term percept_value(const Json& body);

} // namespace jasonrs::gateway

#pragma once

#include <cstdint>
#include <string>

#include "verdad/value.hpp"

namespace verdad {

// Shortest decimal text that round-trips to the same double ("0.44", "1",
// "1e+25"). Used everywhere a float becomes text so that equal doubles
// always print identically.
std::string float_repr(double d);

// Deterministic byte encoding of a value: explicit variant tags, map keys in
// sorted order, floats in shortest round-trip form, all strings and
// containers length-prefixed. Equal values produce equal bytes and unequal
// values produce unequal bytes (injective by construction).
std::string canonical_serialize(const Value& v);

// Canonical JSON rendering (sorted map keys, "$type"-tagged domain
// variants). Used for the optional store dump.
std::string canonical_json_text(const Value& v, int indent = 2);

}  // namespace verdad

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace uavsim {

using Json = nlohmann::json;

/// Shortest round-trip decimal form of a 64-bit float, identical to the
/// form the JSON serializer emits. Re-parsing the result reproduces the
/// input bit-exactly.
std::string format_double(double v);

/// Canonical text of a JSON document: sorted keys, normalized numbers,
/// no insignificant whitespace.
std::string canonical_dump(const Json& doc);

/// Stable 64-bit hash of the canonical form, rendered as 16 hex digits.
std::string canonical_hash(const Json& doc);

/// Converts a byte offset in `text` into 1-based (line, column).
std::pair<int, int> line_column_at(const std::string& text, std::size_t byte_offset);

}  // namespace uavsim

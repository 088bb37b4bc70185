#include "uavsim/json_util.hpp"

#include <cinttypes>
#include <cstdio>

#include "uavsim/rng.hpp"

namespace uavsim {

std::string format_double(double v) {
  return Json(v).dump();
}

std::string canonical_dump(const Json& doc) {
  // nlohmann::json keeps object keys in std::map order, so dump() is
  // already sorted-key; numbers are re-serialized shortest round-trip.
  return doc.dump();
}

std::string canonical_hash(const Json& doc) {
  const std::uint64_t h = fnv1a64(canonical_dump(doc));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return std::string(buf);
}

std::pair<int, int> line_column_at(const std::string& text, std::size_t byte_offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte_offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace uavsim

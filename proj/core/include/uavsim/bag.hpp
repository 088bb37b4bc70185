#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "uavsim/bus.hpp"

namespace uavsim {

struct BagHeader {
  int format_version = 1;
  std::string scenario_hash;
  std::uint64_t seed = 0;
  double dt = 0;
};

/// Append-only JSONL bag: line 1 is the header, every further line one
/// record in nondecreasing tick order (within a tick, publish order).
class BagWriter {
 public:
  BagWriter(const std::filesystem::path& path, const BagHeader& header);
  void write(const BagRecord& record);
  void close();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
};

class BagReader {
 public:
  explicit BagReader(const std::filesystem::path& path);
  const BagHeader& header() const { return header_; }
  /// Next record, or nullopt at end of file. Malformed lines throw with
  /// the 1-based line number.
  std::optional<BagRecord> next();

 private:
  std::ifstream in_;
  std::filesystem::path path_;
  BagHeader header_;
  long line_number_ = 1;
};

struct BagContents {
  BagHeader header;
  std::vector<BagRecord> records;
};

BagContents read_bag(const std::filesystem::path& path);

}  // namespace uavsim

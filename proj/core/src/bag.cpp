#include "uavsim/bag.hpp"

#include <stdexcept>

#include "uavsim/json_util.hpp"

namespace uavsim {

BagWriter::BagWriter(const std::filesystem::path& path, const BagHeader& header) : path_(path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  out_.open(path);
  if (!out_) throw std::runtime_error("bag: cannot open '" + path.string() + "' for writing");
  const Json h{{"format_version", header.format_version},
               {"scenario_hash", header.scenario_hash},
               {"seed", header.seed},
               {"dt", header.dt}};
  out_ << h.dump() << '\n';
}

void BagWriter::write(const BagRecord& record) {
  const Json line{{"kind", record_kind_name(record.kind)},
                  {"topic_or_name", record.topic_or_name},
                  {"seq", record.seq},
                  {"tick", record.tick},
                  {"sim_time", record.sim_time},
                  {"payload", payload_to_json(record.payload)}};
  out_ << line.dump() << '\n';
  if (!out_) throw std::runtime_error("bag: write failed on '" + path_.string() + "'");
}

void BagWriter::close() {
  if (out_.is_open()) {
    out_.flush();
    out_.close();
  }
}

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, long line, const std::string& why) {
  throw std::runtime_error("bag: " + path.string() + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

BagReader::BagReader(const std::filesystem::path& path) : path_(path) {
  in_.open(path);
  if (!in_) throw std::runtime_error("bag: cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in_, line)) parse_fail(path_, 1, "missing header line");
  Json h = Json::parse(line, nullptr, false);
  if (h.is_discarded()) parse_fail(path_, 1, "malformed header JSON");
  try {
    header_.format_version = h.at("format_version").get<int>();
    header_.scenario_hash = h.at("scenario_hash").get<std::string>();
    header_.seed = h.at("seed").get<std::uint64_t>();
    header_.dt = h.at("dt").get<double>();
  } catch (const Json::exception& e) {
    parse_fail(path_, 1, std::string("header: ") + e.what());
  }
}

std::optional<BagRecord> BagReader::next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  ++line_number_;
  if (line.empty()) parse_fail(path_, line_number_, "empty line");

  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded()) parse_fail(path_, line_number_, "malformed JSON");
  BagRecord rec;
  try {
    rec.kind = record_kind_from_name(j.at("kind").get<std::string>());
    rec.topic_or_name = j.at("topic_or_name").get<std::string>();
    rec.seq = j.at("seq").get<std::uint64_t>();
    rec.tick = j.at("tick").get<long>();
    rec.sim_time = j.at("sim_time").get<double>();
    rec.payload = payload_from_json(j.at("payload"));
  } catch (const std::exception& e) {
    parse_fail(path_, line_number_, e.what());
  }
  return rec;
}

BagContents read_bag(const std::filesystem::path& path) {
  BagReader reader(path);
  BagContents contents;
  contents.header = reader.header();
  while (auto rec = reader.next()) contents.records.push_back(std::move(*rec));
  return contents;
}

}  // namespace uavsim

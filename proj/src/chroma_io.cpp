#include "tonalspace/chroma_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "json.hpp"
#include "tonalspace/errors.h"
#include "tonalspace/serialize.h"

namespace tonalspace {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view cell) {
  cell = trim(cell);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string row_prefix(const std::string& source, std::size_t row) {
  return source + ": row " + std::to_string(row) + ": ";
}

ChromaVector validated_frame(const std::array<double, kPitchClasses>& bins,
                             const std::string& source, std::size_t row) {
  for (std::size_t n = 0; n < kPitchClasses; ++n) {
    if (!std::isfinite(bins[n])) {
      throw ParseError(row_prefix(source, row) + "column " + std::to_string(n + 1) +
                           " is not finite",
                       row);
    }
    if (bins[n] < 0.0) {
      throw ParseError(row_prefix(source, row) + "column " + std::to_string(n + 1) +
                           " is negative",
                       row);
    }
  }
  return ChromaVector(bins);
}

}  // namespace

ChromaSequence parse_chroma_csv(std::istream& in, const std::string& source) {
  ChromaSequence seq;
  seq.source = source;
  std::string line;
  std::size_t row = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row;
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto cells = split_cells(content);
    if (first_content) {
      first_content = false;
      if (!parse_number(cells.front())) continue;  // header row
    }
    if (cells.size() != kPitchClasses) {
      throw ParseError(row_prefix(source, row) + "expected 12 columns, got " +
                           std::to_string(cells.size()),
                       row);
    }
    std::array<double, kPitchClasses> bins;
    for (std::size_t n = 0; n < kPitchClasses; ++n) {
      const auto value = parse_number(cells[n]);
      if (!value) {
        throw ParseError(row_prefix(source, row) + "column " + std::to_string(n + 1) +
                             " is not a number: '" + std::string(trim(cells[n])) + "'",
                         row);
      }
      bins[n] = *value;
    }
    seq.frames.push_back(validated_frame(bins, source, row));
  }
  if (seq.frames.empty()) throw ParseError(source + ": no chroma frames");
  return seq;
}

ChromaSequence load_chroma_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_chroma_csv(in, path.string());
}

ChromaSequence parse_chroma_json(std::istream& in, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("frames") || !j["frames"].is_array()) {
    throw ParseError(source + ": expected an object with a 'frames' array");
  }
  ChromaSequence seq;
  seq.source = source;
  if (j.contains("frame_rate") && !j["frame_rate"].is_null()) {
    const auto& rate = j["frame_rate"];
    if (!rate.is_number() || !(rate.get<double>() > 0.0) ||
        !std::isfinite(rate.get<double>())) {
      throw ParseError(source + ": 'frame_rate' must be a positive number");
    }
    seq.frame_rate = rate.get<double>();
  }
  std::size_t row = 0;
  for (const auto& frame : j["frames"]) {
    ++row;
    if (!frame.is_array() || frame.size() != kPitchClasses) {
      throw ParseError(source + ": frame " + std::to_string(row) +
                           ": expected an array of 12 numbers",
                       row);
    }
    std::array<double, kPitchClasses> bins;
    for (std::size_t n = 0; n < kPitchClasses; ++n) {
      if (!frame[n].is_number()) {
        throw ParseError(source + ": frame " + std::to_string(row) + ": entry " +
                             std::to_string(n + 1) + " is not a number",
                         row);
      }
      bins[n] = frame[n].get<double>();
    }
    seq.frames.push_back(validated_frame(bins, source, row));
  }
  if (seq.frames.empty()) throw ParseError(source + ": no chroma frames");
  return seq;
}

ChromaSequence load_chroma_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_chroma_json(in, path.string());
}

void write_chroma_csv(const ChromaSequence& seq, std::ostream& out) {
  out << "c0,c1,c2,c3,c4,c5,c6,c7,c8,c9,c10,c11\n";
  for (const auto& frame : seq.frames) {
    for (std::size_t n = 0; n < kPitchClasses; ++n) {
      if (n) out << ',';
      out << format_double(frame[n]);
    }
    out << '\n';
  }
}

void write_chroma_json(const ChromaSequence& seq, std::ostream& out) {
  Json j = Json::object();
  if (seq.frame_rate) j["frame_rate"] = *seq.frame_rate;
  j["frames"] = Json::array();
  for (const auto& frame : seq.frames) j["frames"].push_back(frame.bins());
  out << j.dump() << '\n';
}

ChromaVector global_chroma(const ChromaSequence& seq,
                           std::optional<FrameRange> range) {
  const FrameRange r = range.value_or(FrameRange{0, seq.frames.size()});
  if (r.begin >= r.end || r.end > seq.frames.size()) {
    throw InvalidInput("global chroma needs a non-empty frame range within the sequence");
  }
  std::array<double, kPitchClasses> sum{};
  for (std::size_t i = r.begin; i < r.end; ++i) {
    for (std::size_t n = 0; n < kPitchClasses; ++n) sum[n] += seq.frames[i][n];
  }
  const double count = static_cast<double>(r.end - r.begin);
  for (auto& v : sum) v /= count;
  return ChromaVector(sum);
}

ChromaSequence average_blocks(const ChromaSequence& seq, std::size_t block) {
  if (block == 0) throw InvalidInput("averaging block must be at least one frame");
  if (block == 1) return seq;
  ChromaSequence out;
  out.source = seq.source;
  if (seq.frame_rate) out.frame_rate = *seq.frame_rate / static_cast<double>(block);
  for (std::size_t begin = 0; begin < seq.frames.size(); begin += block) {
    const std::size_t end = std::min(begin + block, seq.frames.size());
    out.frames.push_back(global_chroma(seq, FrameRange{begin, end}));
  }
  return out;
}

}  // namespace tonalspace

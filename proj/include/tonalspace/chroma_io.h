// Framewise chroma sequences: file loading, saving and temporal aggregation.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tonalspace/chroma.h"

namespace tonalspace {

struct ChromaSequence {
  std::vector<ChromaVector> frames;
  std::optional<double> frame_rate;  // frames per second
  std::string source;
};

/// One frame per row of 12 comma-separated numbers. A first row whose first
/// cell is not numeric is taken as a header. Blank lines are skipped. Errors
/// are ParseError carrying the 1-based line number.
ChromaSequence load_chroma_csv(const std::filesystem::path& path);
ChromaSequence parse_chroma_csv(std::istream& in, const std::string& source);

/// {"frame_rate"?: number, "frames": [[12 numbers], ...]}. ParseError rows
/// are 1-based frame positions.
ChromaSequence load_chroma_json(const std::filesystem::path& path);
ChromaSequence parse_chroma_json(std::istream& in, const std::string& source);

/// Header row "c0,...,c11" followed by full-precision values.
void write_chroma_csv(const ChromaSequence& seq, std::ostream& out);
void write_chroma_json(const ChromaSequence& seq, std::ostream& out);

/// Half-open frame range [begin, end).
struct FrameRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Element-wise mean over `range` (the whole sequence by default). Throws
/// InvalidInput for an empty or out-of-bounds range.
ChromaVector global_chroma(const ChromaSequence& seq,
                           std::optional<FrameRange> range = {});

/// Replaces each block of `block` consecutive frames with its mean (the last
/// block may be shorter) and divides the frame rate accordingly.
ChromaSequence average_blocks(const ChromaSequence& seq, std::size_t block);

}  // namespace tonalspace

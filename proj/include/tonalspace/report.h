// Framewise and global analysis of a chroma sequence, as emitted by
// `tonalspace analyze`.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tonalspace/chroma_io.h"
#include "tonalspace/descriptors.h"
#include "tonalspace/key.h"
#include "tonalspace/tiv.h"

namespace tonalspace {

struct AnalysisOptions {
  WeightVector weights;
  std::size_t window_avg = 1;
  HarmonicChangeOptions hchange;
};

struct FrameRow {
  std::size_t frame = 0;
  std::optional<double> time;  // seconds, when the frame rate is known
  double chromaticity = 0.0;
  double diatonicity = 0.0;
  double wholetoneness = 0.0;
  double dissonance = 0.0;
  double lambda = 0.0;
  bool peak = false;
};

struct GlobalBlock {
  Tiv tiv;
  double chromaticity = 0.0;
  double diatonicity = 0.0;
  double wholetoneness = 0.0;
  double dissonance = 0.0;
  std::optional<KeyResult> key;  // absent for silent input
};

struct AnalysisReport {
  std::string source;
  std::optional<double> frame_rate;
  AnalysisOptions options;
  std::string profile;
  double alpha = 0.0;
  std::vector<FrameRow> rows;
  HarmonicChangeSeries hchange;
  GlobalBlock global;
};

/// Column order of the per-frame table in both CSV and JSON output.
const std::vector<std::string>& report_columns();

/// Sequences shorter than three frames get lambda = 0 everywhere and no
/// peaks. Throws InvalidInput for an empty sequence and Incompatible when
/// `options.weights` differs from the profile set's weights.
AnalysisReport analyze(const ChromaSequence& seq,
                       const KeyProfileSet& profiles,
                       const AnalysisOptions& options = {});

/// Metadata and global block as leading '#' lines, then the frame table.
void write_report_csv(const AnalysisReport& report, std::ostream& out);
void write_report_json(const AnalysisReport& report, std::ostream& out);

}  // namespace tonalspace

// Plain STFT chroma: each spectral bin's power is folded onto the nearest
// equal-tempered pitch class. No harmonic weighting or tuning estimation;
// prefer an external HPCP/NNLS chroma for real analysis.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>

#include "tonalspace/chroma_io.h"

namespace tonalspace {

struct ExtractOptions {
  std::size_t window_size = 4096;  // power of two
  std::size_t hop_size = 1024;
  double min_frequency = 55.0;
  double max_frequency = 5000.0;
  double reference_a4 = 440.0;
};

/// Throws InvalidInput for bad window/hop/frequency settings.
void validate(const ExtractOptions& options);

/// Pitch class of `frequency` relative to the A4 reference.
int pitch_class_of(double frequency, double reference_a4 = 440.0);

/// Signals shorter than one window yield a single zero-padded frame.
ChromaSequence extract_chroma(std::span<const double> signal,
                              double sample_rate,
                              const ExtractOptions& options = {});

/// Stereo input is averaged to mono before analysis.
ChromaSequence extract_chroma_wav(const std::filesystem::path& path,
                                  const ExtractOptions& options = {});

}  // namespace tonalspace

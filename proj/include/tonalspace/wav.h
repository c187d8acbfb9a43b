// Minimal RIFF/WAVE reader and writer.

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace tonalspace {

struct WavData {
  std::uint32_t sample_rate = 0;
  std::uint16_t channels = 0;
  std::vector<float> samples;  // interleaved, full scale = 1.0

  std::size_t frame_count() const {
    return channels == 0 ? 0 : samples.size() / channels;
  }
  /// Channel average.
  std::vector<double> mono() const;
};

/// Reads PCM 8/16/24/32-bit integer and 32/64-bit float files, including the
/// WAVE_FORMAT_EXTENSIBLE wrapper. Throws ParseError on anything else.
WavData read_wav(const std::filesystem::path& path);

enum class WavEncoding { kPcm16, kFloat32 };

void write_wav(const std::filesystem::path& path, const WavData& wav,
               WavEncoding encoding = WavEncoding::kPcm16);

}  // namespace tonalspace

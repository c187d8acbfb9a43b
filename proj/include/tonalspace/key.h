// Key estimation by nearest key-profile TIV.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "tonalspace/chroma.h"
#include "tonalspace/tiv.h"

namespace tonalspace {

inline constexpr std::size_t kKeyCount = 24;

enum class Mode { kMajor, kMinor };

/// 24 reference TIVs: index r < 12 is the major profile rotated to tonic r,
/// r >= 12 the minor profile rotated to tonic r - 12.
class KeyProfileSet {
 public:
  /// Throws InvalidInput if alpha is not finite and > 0 or either profile is
  /// silent.
  KeyProfileSet(std::string name, const ChromaVector& major,
                const ChromaVector& minor, double alpha,
                const WeightVector& weights = WeightVector());

  const std::string& name() const { return name_; }
  const ChromaVector& major_profile() const { return major_; }
  const ChromaVector& minor_profile() const { return minor_; }
  double alpha() const { return alpha_; }
  const WeightVector& weights() const { return weights_; }
  const std::array<Tiv, kKeyCount>& profile_tivs() const { return tivs_; }

 private:
  std::string name_;
  ChromaVector major_;
  ChromaVector minor_;
  double alpha_;
  WeightVector weights_;
  std::array<Tiv, kKeyCount> tivs_;
};

struct KeyResult {
  std::size_t index = 0;  // 0 = C major ... 11 = B major, 12 = C minor ... 23 = B minor
  int tonic = 0;
  Mode mode = Mode::kMajor;
  std::array<double, kKeyCount> distances{};
};

/// Directory holding `<name>.json` profile files: $TONALSPACE_PROFILE_DIR if
/// set, otherwise the location configured at build time.
std::filesystem::path profile_directory();

/// Loads one of the shipped profile sets ("temperley", "shaath") from
/// `profile_directory()`. Throws InvalidInput for unknown names.
KeyProfileSet build_profile_set(std::string_view name,
                                std::optional<double> alpha_override = {},
                                const WeightVector& weights = WeightVector());

/// Reads a profile file {"name", "major": [12], "minor": [12], "alpha"}.
KeyProfileSet load_profile_set(const std::filesystem::path& path,
                               std::optional<double> alpha_override = {},
                               const WeightVector& weights = WeightVector());

/// Scale applied to the query TIV before measuring its distance to candidate
/// `index`: alpha for minor candidates, 1 for major ones.
double key_query_scale(std::size_t index, double alpha);

/// Throws DegenerateInput for silent input, Incompatible on weight mismatch.
KeyResult estimate_key(const Tiv& t, const KeyProfileSet& profiles);

/// "C major", "C# major", ..., "B minor".
std::string key_label(std::size_t index);

const char* to_string(Mode mode);

/// Spelling used in key labels: C, C#, D, ..., B.
std::string_view pitch_class_name(int pitch_class);

}  // namespace tonalspace

#include "tonalspace/key.h"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <vector>

#include "json.hpp"
#include "tonalspace/descriptors.h"
#include "tonalspace/errors.h"

namespace tonalspace {
namespace {

constexpr std::array<std::string_view, kPitchClasses> kPitchNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};

ChromaVector profile_from_json(const nlohmann::json& j, const char* field,
                               const std::string& path) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw ParseError(path + ": missing '" + field + "' array");
  }
  const auto& arr = j[field];
  if (arr.size() != kPitchClasses) {
    throw ParseError(path + ": '" + field + "' needs 12 values, got " +
                     std::to_string(arr.size()));
  }
  std::array<double, kPitchClasses> bins;
  for (std::size_t n = 0; n < kPitchClasses; ++n) {
    if (!arr[n].is_number()) {
      throw ParseError(path + ": '" + field + "' entry " + std::to_string(n) +
                       " is not a number");
    }
    bins[n] = arr[n].get<double>();
  }
  try {
    return ChromaVector(bins);
  } catch (const InvalidInput& e) {
    throw ParseError(path + ": '" + field + "': " + e.what());
  }
}

}  // namespace

KeyProfileSet::KeyProfileSet(std::string name, const ChromaVector& major,
                             const ChromaVector& minor, double alpha,
                             const WeightVector& weights)
    : name_(std::move(name)),
      major_(major),
      minor_(minor),
      alpha_(alpha),
      weights_(weights) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw InvalidInput("key profile alpha must be finite and positive");
  }
  if (major.silent() || minor.silent()) {
    throw InvalidInput("key profiles must have nonzero energy");
  }
  for (int r = 0; r < static_cast<int>(kPitchClasses); ++r) {
    tivs_[r] = tiv_from_chroma(major.rotated(r), weights);
    tivs_[kPitchClasses + r] = tiv_from_chroma(minor.rotated(r), weights);
  }
}

std::filesystem::path profile_directory() {
  if (const char* env = std::getenv("TONALSPACE_PROFILE_DIR"); env && *env) {
    return env;
  }
  return TONALSPACE_DEFAULT_PROFILE_DIR;
}

KeyProfileSet load_profile_set(const std::filesystem::path& path,
                               std::optional<double> alpha_override,
                               const WeightVector& weights) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  const std::string where = path.string();
  auto major = profile_from_json(j, "major", where);
  auto minor = profile_from_json(j, "minor", where);
  double alpha = 0.0;
  if (alpha_override) {
    alpha = *alpha_override;
  } else if (j.contains("alpha") && j["alpha"].is_number()) {
    alpha = j["alpha"].get<double>();
  } else {
    throw ParseError(where + ": missing numeric 'alpha'");
  }
  std::string name = path.stem().string();
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return KeyProfileSet(std::move(name), major, minor, alpha, weights);
}

KeyProfileSet build_profile_set(std::string_view name,
                                std::optional<double> alpha_override,
                                const WeightVector& weights) {
  if (name != "temperley" && name != "shaath") {
    throw InvalidInput("unknown key profile set '" + std::string(name) +
                       "' (expected temperley or shaath)");
  }
  return load_profile_set(profile_directory() / (std::string(name) + ".json"),
                          alpha_override, weights);
}

// The alpha bias balances major against minor candidates, so it only applies
// when the candidate is a minor key.
double key_query_scale(std::size_t index, double alpha) {
  return index < kPitchClasses ? 1.0 : alpha;
}

KeyResult estimate_key(const Tiv& t, const KeyProfileSet& profiles) {
  if (t.silent()) throw DegenerateInput("cannot estimate the key of silence");
  if (!(t.weights() == profiles.weights())) {
    throw Incompatible("TIV and key profiles use different weights");
  }
  KeyResult result;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < kKeyCount; ++r) {
    const double s = key_query_scale(r, profiles.alpha());
    const double d = euclid(s == 1.0 ? t : scale_coefficients(t, s),
                            profiles.profile_tivs()[r]);
    result.distances[r] = d;
    if (d < best) {
      best = d;
      result.index = r;
    }
  }
  result.tonic = static_cast<int>(result.index % kPitchClasses);
  result.mode = result.index < kPitchClasses ? Mode::kMajor : Mode::kMinor;
  return result;
}

std::string_view pitch_class_name(int pitch_class) {
  return kPitchNames[wrap_pitch_class(pitch_class)];
}

const char* to_string(Mode mode) {
  return mode == Mode::kMajor ? "major" : "minor";
}

std::string key_label(std::size_t index) {
  const auto tonic = static_cast<int>(index % kPitchClasses);
  const Mode mode = index < kPitchClasses ? Mode::kMajor : Mode::kMinor;
  return std::string(pitch_class_name(tonic)) + " " + to_string(mode);
}

}  // namespace tonalspace

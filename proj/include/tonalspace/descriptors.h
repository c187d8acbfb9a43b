// Harmonic-quality descriptors and metrics over TIVs.

#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "tonalspace/tiv.h"

namespace tonalspace {

enum class QualityKind { kChromaticity, kDiatonicity, kWholetoneness, kDissonance };

const char* to_string(QualityKind kind);

/// A descriptor value in [0, 1].
struct QualityScore {
  double value = 0.0;
  QualityKind kind = QualityKind::kChromaticity;
};

/// |T(1)| / w(1). Silent input yields 0.
QualityScore chromaticity(const Tiv& t);
/// |T(5)| / w(5).
QualityScore diatonicity(const Tiv& t);
/// |T(6)| / w(6).
QualityScore wholetoneness(const Tiv& t);
/// 1 - ||T|| / ||w|| with both norms taken over all six coefficients.
/// Silent input yields 1.
QualityScore dissonance(const Tiv& t);

/// Euclidean distance over the six complex coefficients.
double euclid(const Tiv& a, const Tiv& b);

/// Re<a, b> / (||a|| ||b||), the cosine of the 12-dimensional real embedding.
/// Throws DegenerateInput when either norm is below kPhaseEpsilon.
double cosine_similarity(const Tiv& a, const Tiv& b);
/// 1 - cosine_similarity(a, b), in [0, 2].
double cosine_distance(const Tiv& a, const Tiv& b);

// ---------------------------------------------------------------------------
// Harmonic change detection
// ---------------------------------------------------------------------------

/// Threshold = mean(lambda) + stddevs * std(lambda) (population std).
struct AdaptiveThreshold {
  double stddevs = 1.0;
};
struct FixedThreshold {
  double value = 0.0;
};
using ThresholdPolicy = std::variant<AdaptiveThreshold, FixedThreshold>;

enum class ChangeCoefficients {
  kAll,    // k = 1..6
  kHarte,  // k = 3, 4, 5: major thirds, minor thirds, fifths
};

struct HarmonicChangeOptions {
  ThresholdPolicy threshold = AdaptiveThreshold{};
  ChangeCoefficients coefficients = ChangeCoefficients::kAll;
};

struct HarmonicChangeSeries {
  std::vector<double> values;        // lambda per frame
  std::vector<std::size_t> peaks;    // ascending frame indices
  double threshold = 0.0;            // resolved threshold used for peaks
};

/// lambda_m = ||T_{m-1} - T_{m+1}|| for interior frames, 0 at both ends.
/// Peaks are interior frames with lambda_{p-1} < lambda_p >= lambda_{p+1}
/// and lambda_p >= threshold. Throws InsufficientInput below three frames.
HarmonicChangeSeries harmonic_change(std::span<const Tiv> frames,
                                     const HarmonicChangeOptions& options = {});

/// Strict-rise local maxima of `values` at or above `threshold`.
std::vector<std::size_t> pick_peaks(std::span<const double> values,
                                    double threshold);

}  // namespace tonalspace

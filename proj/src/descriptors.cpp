#include "tonalspace/descriptors.h"

#include <cmath>
#include <numeric>

#include "tonalspace/errors.h"

namespace tonalspace {
namespace {

QualityScore normalized_magnitude(const Tiv& t, std::size_t index,
                                  QualityKind kind) {
  return {std::abs(t.coeff(index)) / t.weights()[index], kind};
}

void require_same_weights(const Tiv& a, const Tiv& b) {
  if (!(a.weights() == b.weights())) {
    throw Incompatible("TIVs were built with different weights");
  }
}

double resolve_threshold(const ThresholdPolicy& policy,
                         std::span<const double> values) {
  if (const auto* fixed = std::get_if<FixedThreshold>(&policy)) {
    return fixed->value;
  }
  const auto& adaptive = std::get<AdaptiveThreshold>(policy);
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return mean + adaptive.stddevs * std::sqrt(var / n);
}

}  // namespace

const char* to_string(QualityKind kind) {
  switch (kind) {
    case QualityKind::kChromaticity:
      return "chromaticity";
    case QualityKind::kDiatonicity:
      return "diatonicity";
    case QualityKind::kWholetoneness:
      return "wholetoneness";
    case QualityKind::kDissonance:
      return "dissonance";
  }
  return "unknown";
}

QualityScore chromaticity(const Tiv& t) {
  return normalized_magnitude(t, 0, QualityKind::kChromaticity);
}

QualityScore diatonicity(const Tiv& t) {
  return normalized_magnitude(t, 4, QualityKind::kDiatonicity);
}

QualityScore wholetoneness(const Tiv& t) {
  return normalized_magnitude(t, 5, QualityKind::kWholetoneness);
}

QualityScore dissonance(const Tiv& t) {
  return {1.0 - t.norm() / t.weights().norm(), QualityKind::kDissonance};
}

double euclid(const Tiv& a, const Tiv& b) {
  require_same_weights(a, b);
  double acc = 0.0;
  for (std::size_t k = 0; k < kCoefficients; ++k) {
    acc += std::norm(a.coeff(k) - b.coeff(k));
  }
  return std::sqrt(acc);
}

double cosine_similarity(const Tiv& a, const Tiv& b) {
  require_same_weights(a, b);
  const double na = a.norm();
  const double nb = b.norm();
  // Below the phase threshold the vector has no meaningful direction.
  if (na < kPhaseEpsilon || nb < kPhaseEpsilon) {
    throw DegenerateInput("cosine similarity is undefined for a zero TIV");
  }
  // Re(sum a * conj(b)) is the dot product of the 12-d real embeddings.
  double dot = 0.0;
  for (std::size_t k = 0; k < kCoefficients; ++k) {
    dot += a.coeff(k).real() * b.coeff(k).real() +
           a.coeff(k).imag() * b.coeff(k).imag();
  }
  return dot / (na * nb);
}

double cosine_distance(const Tiv& a, const Tiv& b) {
  return 1.0 - cosine_similarity(a, b);
}

std::vector<std::size_t> pick_peaks(std::span<const double> values,
                                    double threshold) {
  std::vector<std::size_t> peaks;
  for (std::size_t p = 1; p + 1 < values.size(); ++p) {
    if (values[p - 1] < values[p] && values[p] >= values[p + 1] &&
        values[p] >= threshold) {
      peaks.push_back(p);
    }
  }
  return peaks;
}

HarmonicChangeSeries harmonic_change(std::span<const Tiv> frames,
                                     const HarmonicChangeOptions& options) {
  if (frames.size() < 3) {
    throw InsufficientInput("harmonic change needs at least three frames");
  }
  HarmonicChangeSeries out;
  out.values.assign(frames.size(), 0.0);
  for (std::size_t m = 1; m + 1 < frames.size(); ++m) {
    const Tiv& before = frames[m - 1];
    const Tiv& after = frames[m + 1];
    if (options.coefficients == ChangeCoefficients::kAll) {
      out.values[m] = euclid(before, after);
      continue;
    }
    require_same_weights(before, after);
    double acc = 0.0;
    for (std::size_t k : {2u, 3u, 4u}) {
      acc += std::norm(before.coeff(k) - after.coeff(k));
    }
    out.values[m] = std::sqrt(acc);
  }
  out.threshold = resolve_threshold(options.threshold, out.values);
  out.peaks = pick_peaks(out.values, out.threshold);
  return out;
}

}  // namespace tonalspace

#include "tonalspace/chroma.h"

#include <cmath>
#include <numeric>
#include <string>

#include "tonalspace/errors.h"

namespace tonalspace {
namespace {

void check_bin(double v, std::size_t n) {
  if (!std::isfinite(v)) {
    throw InvalidInput("chroma bin " + std::to_string(n) + " is not finite");
  }
  if (v < 0.0) {
    throw InvalidInput("chroma bin " + std::to_string(n) + " is negative");
  }
}

}  // namespace

ChromaVector::ChromaVector(const std::array<double, kPitchClasses>& bins)
    : bins_(bins) {
  for (std::size_t n = 0; n < kPitchClasses; ++n) check_bin(bins_[n], n);
}

ChromaVector::ChromaVector(std::span<const double> bins) {
  if (bins.size() != kPitchClasses) {
    throw InvalidInput("chroma vector needs 12 bins, got " +
                       std::to_string(bins.size()));
  }
  for (std::size_t n = 0; n < kPitchClasses; ++n) {
    check_bin(bins[n], n);
    bins_[n] = bins[n];
  }
}

ChromaVector ChromaVector::from_pitch_classes(std::initializer_list<int> pcs) {
  return from_pitch_classes(std::span<const int>(pcs.begin(), pcs.size()));
}

ChromaVector ChromaVector::from_pitch_classes(std::span<const int> pcs) {
  ChromaVector c;
  for (int p : pcs) c.bins_[wrap_pitch_class(p)] = 1.0;
  return c;
}

ChromaVector ChromaVector::one_hot(int pitch_class) {
  return from_pitch_classes({pitch_class});
}

ChromaVector ChromaVector::uniform(double value) {
  std::array<double, kPitchClasses> bins;
  bins.fill(value);
  return ChromaVector(bins);
}

double ChromaVector::energy() const {
  return std::accumulate(bins_.begin(), bins_.end(), 0.0);
}

ChromaVector ChromaVector::rotated(int semitones) const {
  ChromaVector out;
  for (std::size_t n = 0; n < kPitchClasses; ++n) {
    out.bins_[wrap_pitch_class(static_cast<int>(n) + semitones)] = bins_[n];
  }
  return out;
}

ChromaVector ChromaVector::scaled(double factor) const {
  std::array<double, kPitchClasses> bins;
  for (std::size_t n = 0; n < kPitchClasses; ++n) bins[n] = bins_[n] * factor;
  return ChromaVector(bins);
}

ChromaVector operator+(const ChromaVector& a, const ChromaVector& b) {
  std::array<double, kPitchClasses> bins;
  for (std::size_t n = 0; n < kPitchClasses; ++n) bins[n] = a.bins_[n] + b.bins_[n];
  return ChromaVector(bins);
}

}  // namespace tonalspace

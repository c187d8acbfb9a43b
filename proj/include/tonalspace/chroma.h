// Twelve-bin pitch-class energy vectors.

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace tonalspace {

inline constexpr std::size_t kPitchClasses = 12;

/// Energy per pitch class, index 0 = C ascending in semitones. Every bin is
/// finite and nonnegative; construction validates and throws InvalidInput.
class ChromaVector {
 public:
  ChromaVector() = default;  // all-zero (silent)
  explicit ChromaVector(const std::array<double, kPitchClasses>& bins);
  // Accepts any length so that the error path can report the mismatch.
  explicit ChromaVector(std::span<const double> bins);

  /// Binary chroma with unit energy on each listed pitch class (mod 12).
  static ChromaVector from_pitch_classes(std::initializer_list<int> pcs);
  static ChromaVector from_pitch_classes(std::span<const int> pcs);
  static ChromaVector one_hot(int pitch_class);
  static ChromaVector uniform(double value = 1.0);

  double operator[](std::size_t n) const { return bins_[n]; }
  const std::array<double, kPitchClasses>& bins() const { return bins_; }

  /// Sum of all bins.
  double energy() const;
  bool silent() const { return energy() == 0.0; }

  /// Circular rotation up by `semitones`: result[(n + p) mod 12] = this[n].
  ChromaVector rotated(int semitones) const;
  ChromaVector scaled(double factor) const;

  friend ChromaVector operator+(const ChromaVector& a, const ChromaVector& b);
  friend bool operator==(const ChromaVector&, const ChromaVector&) = default;

 private:
  std::array<double, kPitchClasses> bins_{};
};

/// Reduces any integer to 0..11.
constexpr int wrap_pitch_class(int p) {
  int r = p % static_cast<int>(kPitchClasses);
  return r < 0 ? r + static_cast<int>(kPitchClasses) : r;
}

}  // namespace tonalspace

// Tonal Interval Vectors: the weighted, L1-normalised DFT of a chroma vector.
//
// A Tiv keeps coefficients k = 1..6 only; k = 7..11 are conjugates of
// k = 5..1 and k = 0 is the (normalised) unit DC term. The chroma energy that
// the normalisation discards is retained in `energy()` and is what `combine`
// weighs operands by.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

#include "tonalspace/chroma.h"

namespace tonalspace {

inline constexpr std::size_t kCoefficients = 6;

using Complex = std::complex<double>;
using CoefficientArray = std::array<Complex, kCoefficients>;

/// Per-coefficient perceptual weights, index 0 holds the weight of k = 1.
class WeightVector {
 public:
  /// Dyad-consonance weights {3, 8, 11.5, 15, 14.5, 7.5}.
  WeightVector();
  /// Throws InvalidInput unless every entry is finite and > 0.
  explicit WeightVector(const std::array<double, kCoefficients>& w);

  double operator[](std::size_t i) const { return w_[i]; }
  const std::array<double, kCoefficients>& values() const { return w_; }
  /// Euclidean norm of the six weights.
  double norm() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::array<double, kCoefficients> w_;
};

class Tiv {
 public:
  /// The silent TIV: zero coefficients, zero energy, default weights.
  Tiv() = default;
  /// Throws InvalidInput on negative or non-finite energy.
  Tiv(const CoefficientArray& coeffs, double energy,
      const WeightVector& weights = WeightVector());

  /// T(k) for k = 1..6 is `coeff(k - 1)`.
  const Complex& coeff(std::size_t i) const { return coeffs_[i]; }
  const CoefficientArray& coeffs() const { return coeffs_; }
  double energy() const { return energy_; }
  const WeightVector& weights() const { return weights_; }
  bool silent() const { return energy_ == 0.0; }

  /// Euclidean norm over the 12 real components.
  double norm() const;

  friend bool operator==(const Tiv&, const Tiv&) = default;

 private:
  CoefficientArray coeffs_{};
  double energy_ = 0.0;
  WeightVector weights_;
};

/// Phase angle per coefficient in (-pi, pi]. Entries whose coefficient
/// magnitude is below kPhaseEpsilon carry no direction: valid = false, 0 rad.
struct PhaseVector {
  std::array<double, kCoefficients> radians{};
  std::array<bool, kCoefficients> valid{};
};

inline constexpr double kPhaseEpsilon = 1e-10;

Tiv tiv_from_chroma(const ChromaVector& chroma,
                    const WeightVector& weights = WeightVector());

std::array<double, kCoefficients> mag(const Tiv& t);

PhaseVector phases(const Tiv& t);

/// Energy-weighted mean of the operands' coefficients; energies add.
/// Requires at least two operands sharing one weight vector and a positive
/// total energy.
Tiv combine(std::span<const Tiv> tivs);

/// Equivalent to building the TIV from the chroma rotated up by `semitones`.
Tiv transpose(const Tiv& t, int semitones);

/// Multiplies every coefficient by `factor`; energy and weights unchanged.
Tiv scale_coefficients(const Tiv& t, double factor);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double radians);

}  // namespace tonalspace

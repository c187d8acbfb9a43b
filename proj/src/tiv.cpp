#include "tonalspace/tiv.h"

#include <cmath>
#include <numbers>

#include "tonalspace/errors.h"

namespace tonalspace {
namespace {

constexpr double kPi = std::numbers::pi;

// e^{-j 2 pi m / 12} for m = 0..11, with the axis-aligned and 30/60 degree
// entries written exactly so that impulses produce clean coefficients.
const std::array<Complex, kPitchClasses>& twiddles() {
  static const std::array<Complex, kPitchClasses> table = [] {
    constexpr double h = 0.5;
    const double r = std::sqrt(3.0) / 2.0;
    return std::array<Complex, kPitchClasses>{
        Complex{1, 0},  Complex{r, -h},  Complex{h, -r},  Complex{0, -1},
        Complex{-h, -r}, Complex{-r, -h}, Complex{-1, 0}, Complex{-r, h},
        Complex{-h, r},  Complex{0, 1},   Complex{h, r},   Complex{r, h}};
  }();
  return table;
}

const Complex& twiddle(std::size_t k, int n) {
  return twiddles()[wrap_pitch_class(static_cast<int>(k) * n)];
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightVector
// ---------------------------------------------------------------------------

WeightVector::WeightVector() : w_{3.0, 8.0, 11.5, 15.0, 14.5, 7.5} {}

WeightVector::WeightVector(const std::array<double, kCoefficients>& w) : w_(w) {
  for (double v : w_) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw InvalidInput("weights must be finite and positive");
    }
  }
}

double WeightVector::norm() const {
  double acc = 0.0;
  for (double v : w_) acc += v * v;
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Tiv
// ---------------------------------------------------------------------------

Tiv::Tiv(const CoefficientArray& coeffs, double energy,
         const WeightVector& weights)
    : coeffs_(coeffs), energy_(energy), weights_(weights) {
  if (!std::isfinite(energy) || energy < 0.0) {
    throw InvalidInput("TIV energy must be finite and nonnegative");
  }
}

double Tiv::norm() const {
  double acc = 0.0;
  for (const auto& z : coeffs_) acc += std::norm(z);
  return std::sqrt(acc);
}

Tiv tiv_from_chroma(const ChromaVector& chroma, const WeightVector& weights) {
  const double total = chroma.energy();
  if (total == 0.0) return Tiv(CoefficientArray{}, 0.0, weights);

  CoefficientArray coeffs{};
  for (std::size_t i = 0; i < kCoefficients; ++i) {
    const std::size_t k = i + 1;
    Complex acc{0.0, 0.0};
    for (int n = 0; n < static_cast<int>(kPitchClasses); ++n) {
      if (chroma[n] != 0.0) acc += (chroma[n] / total) * twiddle(k, n);
    }
    coeffs[i] = weights[i] * acc;
  }
  return Tiv(coeffs, total, weights);
}

std::array<double, kCoefficients> mag(const Tiv& t) {
  std::array<double, kCoefficients> out;
  for (std::size_t k = 0; k < kCoefficients; ++k) out[k] = std::abs(t.coeff(k));
  return out;
}

double wrap_phase(double radians) {
  double r = std::remainder(radians, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

PhaseVector phases(const Tiv& t) {
  PhaseVector out;
  for (std::size_t k = 0; k < kCoefficients; ++k) {
    const Complex& z = t.coeff(k);
    if (std::abs(z) < kPhaseEpsilon) continue;
    out.valid[k] = true;
    out.radians[k] = wrap_phase(std::atan2(z.imag(), z.real()));
  }
  return out;
}

Tiv combine(std::span<const Tiv> tivs) {
  if (tivs.size() < 2) {
    throw InsufficientInput("combine needs at least two TIVs");
  }
  const WeightVector& weights = tivs.front().weights();
  double total = 0.0;
  for (const auto& t : tivs) {
    if (!(t.weights() == weights)) {
      throw Incompatible("cannot combine TIVs built with different weights");
    }
    total += t.energy();
  }
  if (total == 0.0) {
    throw DegenerateInput("cannot combine TIVs whose energies are all zero");
  }
  CoefficientArray acc{};
  for (const auto& t : tivs) {
    const double share = t.energy() / total;
    for (std::size_t k = 0; k < kCoefficients; ++k) acc[k] += t.coeff(k) * share;
  }
  return Tiv(acc, total, weights);
}

Tiv transpose(const Tiv& t, int semitones) {
  const int p = wrap_pitch_class(semitones);
  if (p == 0) return t;
  CoefficientArray coeffs;
  for (std::size_t k = 0; k < kCoefficients; ++k) {
    coeffs[k] = t.coeff(k) * twiddle(k + 1, p);
  }
  return Tiv(coeffs, t.energy(), t.weights());
}

Tiv scale_coefficients(const Tiv& t, double factor) {
  CoefficientArray coeffs;
  for (std::size_t k = 0; k < kCoefficients; ++k) coeffs[k] = t.coeff(k) * factor;
  return Tiv(coeffs, t.energy(), t.weights());
}

}  // namespace tonalspace

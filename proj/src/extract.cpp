#include "tonalspace/extract.h"

#include <bit>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include <fftw3.h>

#include "tonalspace/errors.h"
#include "tonalspace/wav.h"

namespace tonalspace {
namespace {

struct FftwDeleter {
  void operator()(double* p) const { fftw_free(p); }
  void operator()(fftw_complex* p) const { fftw_free(p); }
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

// Real-to-complex transform of one fixed size.
class RealFft {
 public:
  explicit RealFft(std::size_t size)
      : size_(size),
        in_(fftw_alloc_real(size)),
        out_(fftw_alloc_complex(size / 2 + 1)),
        plan_(fftw_plan_dft_r2c_1d(static_cast<int>(size), in_.get(), out_.get(),
                                   FFTW_ESTIMATE)) {
    if (!plan_) throw Error("FFT planning failed");
  }

  double* input() { return in_.get(); }

  /// |X[b]|^2 for b = 0..size/2.
  void power(std::vector<double>& out) {
    fftw_execute(plan_.get());
    out.resize(size_ / 2 + 1);
    const fftw_complex* spectrum = out_.get();
    for (std::size_t b = 0; b < out.size(); ++b) {
      out[b] = spectrum[b][0] * spectrum[b][0] + spectrum[b][1] * spectrum[b][1];
    }
  }

 private:
  std::size_t size_;
  std::unique_ptr<double, FftwDeleter> in_;
  std::unique_ptr<fftw_complex, FftwDeleter> out_;
  std::unique_ptr<fftw_plan_s, FftwDeleter> plan_;
};

std::vector<double> hann(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / static_cast<double>(n));
  }
  return w;
}

}  // namespace

void validate(const ExtractOptions& o) {
  if (o.window_size < 16 || !std::has_single_bit(o.window_size)) {
    throw InvalidInput("window size must be a power of two >= 16");
  }
  if (o.hop_size == 0) throw InvalidInput("hop size must be positive");
  if (!(o.min_frequency > 0.0) || !(o.max_frequency > o.min_frequency) ||
      !std::isfinite(o.max_frequency)) {
    throw InvalidInput("frequency range must satisfy 0 < min < max");
  }
  if (!(o.reference_a4 > 0.0) || !std::isfinite(o.reference_a4)) {
    throw InvalidInput("reference A4 must be a positive frequency");
  }
}

int pitch_class_of(double frequency, double reference_a4) {
  const auto midi = std::lround(12.0 * std::log2(frequency / reference_a4)) + 69;
  return wrap_pitch_class(static_cast<int>(midi));
}

ChromaSequence extract_chroma(std::span<const double> signal, double sample_rate,
                              const ExtractOptions& options) {
  validate(options);
  if (!(sample_rate > 0.0)) throw InvalidInput("sample rate must be positive");

  const std::size_t n = options.window_size;
  const double bin_hz = sample_rate / static_cast<double>(n);

  // Pitch class per FFT bin, -1 outside the analysed band.
  std::vector<int> bin_class(n / 2 + 1, -1);
  for (std::size_t b = 1; b < bin_class.size(); ++b) {
    const double f = b * bin_hz;
    if (f >= options.min_frequency && f <= options.max_frequency) {
      bin_class[b] = pitch_class_of(f, options.reference_a4);
    }
  }

  const auto window = hann(n);
  RealFft fft(n);
  std::vector<double> power;

  ChromaSequence seq;
  seq.frame_rate = sample_rate / static_cast<double>(options.hop_size);
  const std::size_t frames =
      signal.size() <= n ? 1 : (signal.size() - n) / options.hop_size + 1;
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t start = f * options.hop_size;
    double* in = fft.input();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t s = start + i;
      in[i] = s < signal.size() ? signal[s] * window[i] : 0.0;
    }
    fft.power(power);
    std::array<double, kPitchClasses> bins{};
    for (std::size_t b = 0; b < power.size(); ++b) {
      if (bin_class[b] >= 0) bins[bin_class[b]] += power[b];
    }
    seq.frames.emplace_back(bins);
  }
  return seq;
}

ChromaSequence extract_chroma_wav(const std::filesystem::path& path,
                                  const ExtractOptions& options) {
  validate(options);
  const WavData wav = read_wav(path);
  const auto mono = wav.mono();
  auto seq = extract_chroma(mono, wav.sample_rate, options);
  seq.source = path.string();
  return seq;
}

}  // namespace tonalspace

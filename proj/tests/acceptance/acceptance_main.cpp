// Acceptance suite: one pass/fail line per criterion.
//
//   tonalspace_acceptance        run every criterion
//   tonalspace_acceptance N      run criterion N only
//
// Exit status is nonzero when any selected criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/naive_dft.h"
#include "tonalspace/chroma_io.h"
#include "tonalspace/descriptors.h"
#include "tonalspace/key.h"
#include "tonalspace/tiv.h"
#include "tonalspace/wav.h"

namespace ts = tonalspace;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& n) { notes_.push_back(n); }

  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream ss;
    ss << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) ss << "; " << n;
    for (const auto& f : failures_) ss << "\n      FAILED: " << f;
    return ss.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ts::Tiv tiv_of(std::initializer_list<int> pcs) {
  return ts::tiv_from_chroma(ts::ChromaVector::from_pitch_classes(pcs));
}

double coeff_error(const ts::Tiv& t, const oracle::Spectrum& ref) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 6; ++k) worst = std::max(worst, std::abs(t.coeff(k) - ref[k]));
  return worst;
}

double angular_gap(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * kPi);
  return std::abs(d);
}

// ---------------------------------------------------------------------------

void dft_oracle_equivalence(Checker& c) {
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    auto bins = oracle::random_chroma(rng);
    const double err = coeff_error(ts::tiv_from_chroma(ts::ChromaVector(bins)),
                                   oracle::weighted_dft(bins));
    worst = std::max(worst, err);
    c.expect(err <= 1e-9, "vector " + std::to_string(i) + " error " + num(err));
  }
  c.note("max |dT| = " + num(worst));
}

void weight_fidelity(Checker& c) {
  const std::array<double, 6> expected = {3, 8, 11.5, 15, 14.5, 7.5};
  auto t = ts::tiv_from_chroma(ts::ChromaVector::one_hot(0));
  c.expect(ts::mag(t) == expected, "mag(one-hot C) != (3, 8, 11.5, 15, 14.5, 7.5)");
  for (int p = 0; p < 12; ++p) {
    auto tp = ts::tiv_from_chroma(ts::ChromaVector::one_hot(p));
    const std::string at = " at pc " + std::to_string(p);
    c.expect(std::abs(ts::chromaticity(tp).value - 1.0) <= 1e-12, "chromaticity" + at);
    c.expect(std::abs(ts::diatonicity(tp).value - 1.0) <= 1e-12, "diatonicity" + at);
    c.expect(std::abs(ts::wholetoneness(tp).value - 1.0) <= 1e-12, "wholetoneness" + at);
    c.expect(std::abs(ts::dissonance(tp).value) <= 1e-12, "dissonance" + at);
  }
}

void transposition_suite(Checker& c) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    ts::ChromaVector chroma(oracle::random_chroma(rng));
    auto base = ts::tiv_from_chroma(chroma);
    auto base_mag = ts::mag(base);
    auto base_phase = ts::phases(base);
    const double q0[4] = {ts::chromaticity(base).value, ts::diatonicity(base).value,
                          ts::wholetoneness(base).value, ts::dissonance(base).value};
    for (int p = 0; p < 12; ++p) {
      auto t = ts::tiv_from_chroma(chroma.rotated(p));
      auto m = ts::mag(t);
      auto ph = ts::phases(t);
      const std::string at = "vector " + std::to_string(i) + " shift " + std::to_string(p);
      for (std::size_t k = 0; k < 6; ++k) {
        c.expect(std::abs(m[k] - base_mag[k]) <= 1e-9, "mag " + at);
        if (base_phase.valid[k] && ph.valid[k]) {
          const double expected = base_phase.radians[k] - 2.0 * kPi * (k + 1) * p / 12.0;
          c.expect(angular_gap(ph.radians[k], expected) <= 1e-9, "phase " + at);
        }
      }
      const double q[4] = {ts::chromaticity(t).value, ts::diatonicity(t).value,
                           ts::wholetoneness(t).value, ts::dissonance(t).value};
      for (int j = 0; j < 4; ++j) c.expect(std::abs(q[j] - q0[j]) <= 1e-9, "quality " + at);
    }
  }
}

void figure_two_ordering(Checker& c) {
  const auto triad = tiv_of({0, 4, 7});
  const auto cluster = tiv_of({0, 1, 2});
  const auto scale = tiv_of({0, 2, 4, 5, 7, 9, 11});
  const double d_scale = ts::diatonicity(scale).value;
  const double d_triad = ts::diatonicity(triad).value;
  const double d_cluster = ts::diatonicity(cluster).value;
  const double c_scale = ts::chromaticity(scale).value;
  const double c_triad = ts::chromaticity(triad).value;
  const double c_cluster = ts::chromaticity(cluster).value;
  constexpr double kMargin = 0.05;

  // Oracle values frozen before the build.
  c.expect(std::abs(d_triad - 0.6439505508593788) <= 1e-12, "diatonicity(triad) regression");
  c.expect(std::abs(d_cluster - 0.24401693585629247) <= 1e-12, "diatonicity(cluster) regression");
  c.expect(std::abs(d_scale - 0.53315011536698276) <= 1e-12, "diatonicity(scale) regression");
  c.expect(std::abs(c_triad - 0.17254603006834721) <= 1e-12, "chromaticity(triad) regression");
  c.expect(std::abs(c_cluster - 0.91068360252295888) <= 1e-12, "chromaticity(cluster) regression");
  c.expect(std::abs(c_scale - 0.038278456061588868) <= 1e-12, "chromaticity(scale) regression");

  c.expect(d_scale - d_triad >= kMargin,
           "diatonicity(C major scale) = " + num(d_scale) +
               " is not > diatonicity(C major triad) = " + num(d_triad) + " by 0.05");
  c.expect(d_triad - d_cluster >= kMargin, "diatonicity(triad) > diatonicity(cluster)");
  c.expect(d_scale - d_cluster >= kMargin, "diatonicity(scale) > diatonicity(cluster)");
  c.expect(c_cluster - c_triad >= kMargin, "chromaticity(cluster) > chromaticity(triad)");
  c.expect(c_cluster - c_scale >= kMargin, "chromaticity(cluster) > chromaticity(scale)");
  c.note("diatonicity scale/triad/cluster = " + num(d_scale) + "/" + num(d_triad) + "/" +
         num(d_cluster));
}

void combine_linearity(Checker& c) {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    ts::ChromaVector c1(oracle::random_chroma(rng));
    ts::ChromaVector c2(oracle::random_chroma(rng));
    ts::ChromaVector c3(oracle::random_chroma(rng));
    std::vector<ts::Tiv> pair = {ts::tiv_from_chroma(c1), ts::tiv_from_chroma(c2)};
    std::vector<ts::Tiv> triple = {pair[0], pair[1], ts::tiv_from_chroma(c3)};
    const auto ref2 = ts::tiv_from_chroma(c1 + c2);
    const auto ref3 = ts::tiv_from_chroma(c1 + c2 + c3);
    const auto mix2 = ts::combine(pair);
    const auto mix3 = ts::combine(triple);
    for (std::size_t k = 0; k < 6; ++k) {
      const double e2 = std::abs(mix2.coeff(k) - ref2.coeff(k));
      const double e3 = std::abs(mix3.coeff(k) - ref3.coeff(k));
      worst = std::max({worst, e2, e3});
      c.expect(e2 <= 1e-12, "pair " + std::to_string(i) + " error " + num(e2));
      c.expect(e3 <= 1e-12, "triple " + std::to_string(i) + " error " + num(e3));
    }
  }
  c.note("max error " + num(worst));
}

void whole_tone_forcing(Checker& c) {
  for (int offset : {0, 1}) {
    auto t = tiv_of({offset, offset + 2, offset + 4, offset + 6, offset + 8, offset + 10});
    c.expect(std::abs(ts::wholetoneness(t).value - 1.0) <= 1e-12,
             "wholetoneness of collection " + std::to_string(offset));
    for (std::size_t k = 0; k < 5; ++k) {
      c.expect(std::abs(t.coeff(k)) <= 1e-12, "|T(" + std::to_string(k + 1) + ")| > 1e-12");
    }
  }
}

void harmonic_change_criterion(Checker& c) {
  std::mt19937_64 rng(7);
  for (int len : {3, 5, 17}) {
    std::vector<ts::Tiv> frames(len, ts::tiv_from_chroma(ts::ChromaVector(oracle::random_chroma(rng))));
    auto hc = ts::harmonic_change(frames);
    c.expect(std::all_of(hc.values.begin(), hc.values.end(), [](double v) { return v == 0.0; }),
             "constant sequence lambda != 0");
    c.expect(hc.peaks.empty(), "constant sequence has peaks");
  }

  const auto a = oracle::binary({0, 4, 7});
  const auto b = oracle::binary({2, 5, 9});
  std::vector<oracle::Bins> bins = {a, a, a, b, b, b};
  std::vector<ts::Tiv> frames;
  for (const auto& x : bins) frames.push_back(ts::tiv_from_chroma(ts::ChromaVector(x)));
  auto hc = ts::harmonic_change(frames);
  c.expect(!hc.peaks.empty(), "no peak at the A/B boundary");
  for (auto p : hc.peaks) c.expect(p == 2 || p == 3, "peak away from the boundary at " + std::to_string(p));
  for (std::size_t m = 1; m + 1 < bins.size(); ++m) {
    const double ref = oracle::distance(oracle::weighted_dft(bins[m - 1]),
                                        oracle::weighted_dft(bins[m + 1]));
    c.expect(std::abs(hc.values[m] - ref) <= 1e-12, "lambda at frame " + std::to_string(m));
  }
  c.note("peaks at {" + [&] {
    std::string s;
    for (auto p : hc.peaks) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
  }() + "}");
}

void key_sanity(Checker& c) {
  const auto set = ts::build_profile_set("temperley");
  for (std::size_t r = 0; r < 24; ++r) {
    const auto& base = r < 12 ? set.major_profile() : set.minor_profile();
    auto result = ts::estimate_key(ts::tiv_from_chroma(base.rotated(static_cast<int>(r % 12))), set);
    c.expect(result.index == r, "profile " + ts::key_label(r) + " classified as " +
                                    ts::key_label(result.index));
    if (r < 12) c.expect(result.distances[r] == 0.0, "major self-distance not exactly 0");
  }

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> noise(0.0, 1.5);
  std::uniform_int_distribution<int> shift(0, 11);
  for (int i = 0; i < 20; ++i) {
    auto bins = (i % 2 ? set.minor_profile() : set.major_profile()).rotated(shift(rng)).bins();
    for (auto& v : bins) v += noise(rng);
    const auto t = ts::tiv_from_chroma(ts::ChromaVector(bins));
    const auto base = ts::estimate_key(t, set);
    for (int p = 0; p < 12; ++p) {
      const auto moved = ts::estimate_key(ts::transpose(t, p), set);
      c.expect(moved.tonic == (base.tonic + p) % 12 && moved.mode == base.mode,
               "covariance: chroma " + std::to_string(i) + " shift " + std::to_string(p));
    }
  }
}

void metric_axioms(Checker& c) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    auto a = ts::tiv_from_chroma(ts::ChromaVector(oracle::random_chroma(rng)));
    auto b = ts::tiv_from_chroma(ts::ChromaVector(oracle::random_chroma(rng)));
    auto d = ts::tiv_from_chroma(ts::ChromaVector(oracle::random_chroma(rng)));
    c.expect(ts::euclid(a, a) <= 1e-9, "identity");
    c.expect(std::abs(ts::euclid(a, b) - ts::euclid(b, a)) <= 1e-9, "symmetry");
    c.expect(ts::euclid(a, d) <= ts::euclid(a, b) + ts::euclid(b, d) + 1e-9, "triangle");
    c.expect(std::abs(ts::cosine_similarity(a, a) - 1.0) <= 1e-12, "cos(t, t) = 1");
  }

  const auto c0 = ts::tiv_from_chroma(ts::ChromaVector::one_hot(0));
  const auto c6 = ts::tiv_from_chroma(ts::ChromaVector::one_hot(6));
  const double sim = ts::cosine_similarity(c0, c6);
  double num_w = 0.0;
  double den_w = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double w = oracle::kWeights[k - 1];
    num_w += w * w * std::cos(kPi * k);
    den_w += w * w;
  }
  c.note("tritone similarity " + num(sim) + ", sum w^2 cos(pi k) / sum w^2 = " +
         num(num_w) + "/" + num(den_w) + " = " + num(num_w / den_w));
  c.expect(std::abs(sim - num_w / den_w) <= 1e-9,
           "tritone similarity differs from the weight closed form");
  constexpr double kStated = 49.5 / 755.0;
  c.expect(std::abs(sim - kStated) <= 1e-9,
           "tritone similarity " + num(sim) + " != 49.5/755.0 = " + num(kStated));
}

// ---------------------------------------------------------------------------
// CLI-level criteria
// ---------------------------------------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const auto dir = fs::temp_directory_path();
  const auto out = dir / "tonalspace_acceptance_out.txt";
  const auto err = dir / "tonalspace_acceptance_err.txt";
  const std::string cmd = std::string(TONALSPACE_CLI_PATH) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string fixture(const std::string& name) {
  return std::string(TONALSPACE_FIXTURE_DIR) + "/" + name;
}

void cli_determinism_and_schema(Checker& c) {
  for (const char* format : {"json", "csv"}) {
    const std::string args =
        std::string("analyze --out-format ") + format + " " + fixture("wholetone_to_minor.csv");
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    c.expect(first.exit_code == 0, std::string(format) + " analyze failed: " + first.err);
    c.expect(!first.out.empty() && first.out == second.out,
             std::string(format) + " output differs between runs");
  }
  const auto bad = run_cli("analyze " + fixture("malformed.csv"));
  c.expect(bad.exit_code == 1, "malformed CSV exit code " + std::to_string(bad.exit_code));
  c.expect(bad.err.find("row 3") != std::string::npos, "missing row number: " + bad.err);
  const auto neg = run_cli("analyze " + fixture("negative.csv"));
  c.expect(neg.exit_code == 1, "negative CSV exit code " + std::to_string(neg.exit_code));
  c.expect(neg.err.find("row 3") != std::string::npos, "missing row number: " + neg.err);
}

void end_to_end_smoke(Checker& c) {
  const auto dir = fs::temp_directory_path();
  const auto wav_path = dir / "tonalspace_acceptance_a440.wav";
  const auto chroma_path = dir / "tonalspace_acceptance_a440.csv";
  ts::WavData wav;
  wav.sample_rate = 44100;
  wav.channels = 1;
  for (int i = 0; i < 2 * 44100; ++i) {
    wav.samples.push_back(static_cast<float>(0.5 * std::sin(2.0 * kPi * 440.0 * i / 44100.0)));
  }
  ts::write_wav(wav_path, wav);

  const auto extract = run_cli("extract-chroma --out " + chroma_path.string() + " " + wav_path.string());
  c.expect(extract.exit_code == 0, "extract-chroma failed: " + extract.err);
  const auto analyze = run_cli("analyze " + chroma_path.string());
  c.expect(analyze.exit_code == 0, "analyze failed: " + analyze.err);

  const auto seq = ts::load_chroma_csv(chroma_path);
  double worst = 1.0;
  for (const auto& f : seq.frames) {
    const double share = f[9] / f.energy();
    worst = std::min(worst, share);
    c.expect(share >= 0.8, "pitch class 9 share " + num(share));
  }
  c.note(std::to_string(seq.frames.size()) + " frames, min A share " + num(worst));
  fs::remove(wav_path);
  fs::remove(chroma_path);
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Checker&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "DFT oracle equivalence", dft_oracle_equivalence},
      {2, "Weight fidelity", weight_fidelity},
      {3, "Transposition suite", transposition_suite},
      {4, "Cluster/triad/scale ordering", figure_two_ordering},
      {5, "Combine linearity", combine_linearity},
      {6, "Whole-tone forcing", whole_tone_forcing},
      {7, "Harmonic change", harmonic_change_criterion},
      {8, "Key sanity", key_sanity},
      {9, "Metric axioms", metric_axioms},
      {10, "CLI determinism and schema", cli_determinism_and_schema},
      {11, "End-to-end smoke", end_to_end_smoke},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only && criterion.id != only) continue;
    Checker checker;
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = checker.passed();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << ". " << criterion.name
              << " -- " << checker.summary() << '\n';
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

// tonalspace: batch tonal analysis of chroma sequences.
//
//   tonalspace analyze INPUT [--out-format json|csv] [--out FILE] ...
//   tonalspace key INPUT [--profile temperley|shaath] [--alpha A]
//   tonalspace combine A B [C ...] [--out FILE]
//   tonalspace distance A B [--metric euclid|cosine|cosine-similarity]
//   tonalspace extract-chroma WAV [--out FILE] [--out-format csv|json]
//
// Exit codes: 0 success, 1 runtime or validation failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tonalspace/chroma_io.h"
#include "tonalspace/descriptors.h"
#include "tonalspace/errors.h"
#include "tonalspace/extract.h"
#include "tonalspace/key.h"
#include "tonalspace/report.h"
#include "tonalspace/serialize.h"

namespace ts = tonalspace;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string format = "auto";
  ts::ExtractOptions extract;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("--format", flags.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "json", "wav"}))
      ->capture_default_str();
  cmd->add_option("--window-size", flags.extract.window_size,
                  "STFT window for WAV input (power of two)")
      ->capture_default_str();
  cmd->add_option("--hop-size", flags.extract.hop_size, "STFT hop for WAV input")
      ->capture_default_str();
  cmd->add_option("--fmin", flags.extract.min_frequency, "Lowest analysed frequency (Hz)")
      ->capture_default_str();
  cmd->add_option("--fmax", flags.extract.max_frequency, "Highest analysed frequency (Hz)")
      ->capture_default_str();
  cmd->add_option("--a4", flags.extract.reference_a4, "Tuning reference (Hz)")
      ->capture_default_str();
}

std::string lower_extension(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return ext;
}

ts::ChromaSequence load_input(const std::string& path, const InputFlags& flags) {
  std::string format = flags.format;
  if (format == "auto") {
    const auto ext = lower_extension(path);
    if (ext == ".json") {
      format = "json";
    } else if (ext == ".wav" || ext == ".wave") {
      format = "wav";
    } else {
      format = "csv";
    }
  }
  if (format == "json") return ts::load_chroma_json(path);
  if (format == "wav") return ts::extract_chroma_wav(path, flags.extract);
  return ts::load_chroma_csv(path);
}

ts::WeightVector parse_weights(const std::string& text) {
  std::array<double, ts::kCoefficients> w{};
  std::stringstream ss(text);
  std::string cell;
  std::size_t n = 0;
  while (std::getline(ss, cell, ',')) {
    if (n == w.size()) throw UsageError("--weights takes exactly six values");
    try {
      std::size_t used = 0;
      w[n] = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw UsageError("--weights: '" + cell + "' is not a number");
    }
    ++n;
  }
  if (n != w.size()) throw UsageError("--weights takes exactly six values");
  return ts::WeightVector(w);
}

// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const std::string& out_path, Fn&& write) {
  if (out_path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ts::Error("cannot write " + out_path);
  write(out);
  if (!out) throw ts::Error("failed writing " + out_path);
}

ts::Tiv global_tiv(const std::string& path, const InputFlags& flags,
                   const ts::WeightVector& weights) {
  return ts::tiv_from_chroma(ts::global_chroma(load_input(path, flags)), weights);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tonal Interval Vector analysis of chroma features"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Framewise and global tonal descriptors");
  std::string analyze_input;
  InputFlags analyze_flags;
  std::size_t window_avg = 1;
  std::string weights_text;
  std::string profile = "temperley";
  std::optional<double> alpha;
  std::string threshold = "adaptive";
  bool harte = false;
  std::string out_path;
  std::string out_format = "json";
  analyze->add_option("input", analyze_input, "Chroma CSV/JSON or WAV file")->required();
  add_input_flags(analyze, analyze_flags);
  analyze->add_option("--window-avg", window_avg, "Average N consecutive frames")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--weights", weights_text, "Six comma-separated TIV weights");
  analyze->add_option("--profile", profile, "Key profile set")
      ->check(CLI::IsMember({"temperley", "shaath"}))
      ->capture_default_str();
  analyze->add_option("--alpha", alpha, "Override the profile's minor-key bias");
  analyze->add_option("--threshold", threshold,
                      "Peak threshold: 'adaptive' or a fixed number")
      ->capture_default_str();
  analyze->add_flag("--harte", harte,
                    "Harmonic change over thirds and fifths (k = 3, 4, 5) only");
  analyze->add_option("--out", out_path, "Output file (default stdout)");
  analyze->add_option("--out-format", out_format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // key
  auto* key = app.add_subcommand("key", "Estimate the key of the averaged input");
  std::string key_input;
  InputFlags key_flags;
  std::string key_profile = "temperley";
  std::optional<double> key_alpha;
  key->add_option("input", key_input, "Chroma CSV/JSON or WAV file")->required();
  add_input_flags(key, key_flags);
  key->add_option("--profile", key_profile, "Key profile set")
      ->check(CLI::IsMember({"temperley", "shaath"}))
      ->capture_default_str();
  key->add_option("--alpha", key_alpha, "Override the profile's minor-key bias");

  // combine
  auto* combine = app.add_subcommand("combine", "Energy-weighted mix of input TIVs");
  std::vector<std::string> combine_inputs;
  InputFlags combine_flags;
  std::string combine_out;
  combine->add_option("inputs", combine_inputs, "Two or more chroma inputs")
      ->required()
      ->expected(2, -1);
  add_input_flags(combine, combine_flags);
  combine->add_option("--out", combine_out, "Output file (default stdout)");

  // distance
  auto* distance = app.add_subcommand("distance", "Distance between two input TIVs");
  std::string dist_a;
  std::string dist_b;
  InputFlags dist_flags;
  std::string metric = "euclid";
  distance->add_option("a", dist_a, "First input")->required();
  distance->add_option("b", dist_b, "Second input")->required();
  add_input_flags(distance, dist_flags);
  distance->add_option("--metric", metric, "Metric")
      ->check(CLI::IsMember({"euclid", "cosine", "cosine-similarity"}))
      ->capture_default_str();

  // extract-chroma
  auto* extract = app.add_subcommand("extract-chroma", "STFT chroma from a WAV file");
  std::string wav_input;
  InputFlags extract_flags;
  std::string extract_out;
  std::string extract_format = "csv";
  extract->add_option("input", wav_input, "WAV file")->required();
  add_input_flags(extract, extract_flags);
  extract->add_option("--out", extract_out, "Output file (default stdout)");
  extract->add_option("--out-format", extract_format, "Chroma format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      ts::AnalysisOptions options;
      if (!weights_text.empty()) options.weights = parse_weights(weights_text);
      options.window_avg = window_avg;
      if (harte) options.hchange.coefficients = ts::ChangeCoefficients::kHarte;
      if (threshold != "adaptive") {
        try {
          std::size_t used = 0;
          options.hchange.threshold = ts::FixedThreshold{std::stod(threshold, &used)};
          if (used != threshold.size()) throw std::invalid_argument(threshold);
        } catch (const std::exception&) {
          throw UsageError("--threshold must be 'adaptive' or a number");
        }
      }
      const auto profiles = ts::build_profile_set(profile, alpha, options.weights);
      const auto report = ts::analyze(load_input(analyze_input, analyze_flags),
                                      profiles, options);
      emit(out_path, [&](std::ostream& out) {
        if (out_format == "csv") {
          ts::write_report_csv(report, out);
        } else {
          ts::write_report_json(report, out);
        }
      });
    } else if (*key) {
      const auto profiles = ts::build_profile_set(key_profile, key_alpha);
      const auto t = global_tiv(key_input, key_flags, profiles.weights());
      const auto result = ts::estimate_key(t, profiles);
      std::cout << result.index << ' ' << ts::key_label(result.index) << '\n';
    } else if (*combine) {
      std::vector<ts::Tiv> tivs;
      for (const auto& path : combine_inputs) {
        tivs.push_back(global_tiv(path, combine_flags, ts::WeightVector()));
      }
      const auto mixed = ts::combine(tivs);
      emit(combine_out, [&](std::ostream& out) { out << ts::to_json(mixed).dump() << '\n'; });
    } else if (*distance) {
      const auto a = global_tiv(dist_a, dist_flags, ts::WeightVector());
      const auto b = global_tiv(dist_b, dist_flags, ts::WeightVector());
      double value = 0.0;
      if (metric == "euclid") {
        value = ts::euclid(a, b);
      } else if (metric == "cosine") {
        value = ts::cosine_distance(a, b);
      } else {
        value = ts::cosine_similarity(a, b);
      }
      std::cout << ts::format_double(value) << '\n';
    } else if (*extract) {
      const auto seq = ts::extract_chroma_wav(wav_input, extract_flags.extract);
      emit(extract_out, [&](std::ostream& out) {
        if (extract_format == "json") {
          ts::write_chroma_json(seq, out);
        } else {
          ts::write_chroma_csv(seq, out);
        }
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return EXIT_SUCCESS;
}

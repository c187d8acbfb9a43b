#include "tonalspace/report.h"

#include <ostream>

#include "tonalspace/errors.h"
#include "tonalspace/serialize.h"

namespace tonalspace {
namespace {

std::string threshold_description(const ThresholdPolicy& policy) {
  if (const auto* fixed = std::get_if<FixedThreshold>(&policy)) {
    return "fixed(" + format_double(fixed->value) + ")";
  }
  return "adaptive(mean+" + format_double(std::get<AdaptiveThreshold>(policy).stddevs) +
         "*std)";
}

const char* coefficient_description(ChangeCoefficients c) {
  return c == ChangeCoefficients::kAll ? "all" : "harte";
}

Json metadata_json(const AnalysisReport& r) {
  Json meta;
  meta["source"] = r.source;
  meta["frame_rate"] = r.frame_rate ? Json(*r.frame_rate) : Json(nullptr);
  meta["frame_count"] = r.rows.size();
  meta["weights"] = r.options.weights.values();
  meta["window_avg"] = r.options.window_avg;
  meta["profile"] = r.profile;
  meta["alpha"] = r.alpha;
  meta["hchange_threshold"] = threshold_description(r.options.hchange.threshold);
  meta["hchange_coefficients"] = coefficient_description(r.options.hchange.coefficients);
  return meta;
}

Json global_json(const GlobalBlock& g) {
  Json out;
  out["tiv"] = to_json(g.tiv);
  out["chromaticity"] = g.chromaticity;
  out["diatonicity"] = g.diatonicity;
  out["wholetoneness"] = g.wholetoneness;
  out["dissonance"] = g.dissonance;
  out["key"] = g.key ? to_json(*g.key) : Json(nullptr);
  return out;
}

}  // namespace

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns = {
      "frame",       "time",       "chromaticity", "diatonicity",
      "wholetoneness", "dissonance", "lambda",       "peak"};
  return columns;
}

AnalysisReport analyze(const ChromaSequence& seq, const KeyProfileSet& profiles,
                       const AnalysisOptions& options) {
  if (seq.frames.empty()) throw InvalidInput("cannot analyze an empty sequence");
  if (!(options.weights == profiles.weights())) {
    throw Incompatible("analysis weights differ from the key profile weights");
  }
  const ChromaSequence frames = average_blocks(seq, options.window_avg);

  AnalysisReport report;
  report.source = seq.source;
  report.frame_rate = frames.frame_rate;
  report.options = options;
  report.profile = profiles.name();
  report.alpha = profiles.alpha();

  std::vector<Tiv> tivs;
  tivs.reserve(frames.frames.size());
  for (const auto& c : frames.frames) tivs.push_back(tiv_from_chroma(c, options.weights));

  if (tivs.size() >= 3) {
    report.hchange = harmonic_change(tivs, options.hchange);
  } else {
    report.hchange.values.assign(tivs.size(), 0.0);
  }

  report.rows.reserve(tivs.size());
  for (std::size_t i = 0; i < tivs.size(); ++i) {
    FrameRow row;
    row.frame = i;
    if (frames.frame_rate) row.time = static_cast<double>(i) / *frames.frame_rate;
    row.chromaticity = chromaticity(tivs[i]).value;
    row.diatonicity = diatonicity(tivs[i]).value;
    row.wholetoneness = wholetoneness(tivs[i]).value;
    row.dissonance = dissonance(tivs[i]).value;
    row.lambda = report.hchange.values[i];
    report.rows.push_back(row);
  }
  for (auto p : report.hchange.peaks) report.rows[p].peak = true;

  GlobalBlock& g = report.global;
  g.tiv = tiv_from_chroma(global_chroma(frames), options.weights);
  g.chromaticity = chromaticity(g.tiv).value;
  g.diatonicity = diatonicity(g.tiv).value;
  g.wholetoneness = wholetoneness(g.tiv).value;
  g.dissonance = dissonance(g.tiv).value;
  if (!g.tiv.silent()) g.key = estimate_key(g.tiv, profiles);
  return report;
}

void write_report_csv(const AnalysisReport& report, std::ostream& out) {
  out << "# metadata " << metadata_json(report).dump() << '\n';
  out << "# global " << global_json(report.global).dump() << '\n';
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : report.rows) {
    out << row.frame << ',' << (row.time ? format_double(*row.time) : "") << ','
        << format_double(row.chromaticity) << ',' << format_double(row.diatonicity)
        << ',' << format_double(row.wholetoneness) << ','
        << format_double(row.dissonance) << ',' << format_double(row.lambda) << ','
        << (row.peak ? 1 : 0) << '\n';
  }
}

void write_report_json(const AnalysisReport& report, std::ostream& out) {
  Json j;
  j["metadata"] = metadata_json(report);
  Json frames = Json::array();
  for (const auto& row : report.rows) {
    Json f;
    f["frame"] = row.frame;
    f["time"] = row.time ? Json(*row.time) : Json(nullptr);
    f["chromaticity"] = row.chromaticity;
    f["diatonicity"] = row.diatonicity;
    f["wholetoneness"] = row.wholetoneness;
    f["dissonance"] = row.dissonance;
    f["lambda"] = row.lambda;
    f["peak"] = row.peak;
    frames.push_back(std::move(f));
  }
  j["frames"] = std::move(frames);
  Json hc = to_json(report.hchange);
  hc["threshold"] = report.hchange.threshold;
  j["hchange"] = std::move(hc);
  j["global"] = global_json(report.global);
  out << j.dump(2) << '\n';
}

}  // namespace tonalspace

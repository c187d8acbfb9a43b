#include "tonalspace/serialize.h"

#include <charconv>
#include <cmath>

#include "tonalspace/errors.h"

namespace tonalspace {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf, ptr);
}

Json to_json(const Tiv& t) {
  Json coeffs = Json::array();
  for (const auto& z : t.coeffs()) coeffs.push_back({z.real(), z.imag()});
  return Json{{"coeffs", std::move(coeffs)}, {"energy", t.energy()}};
}

Tiv tiv_from_json(const Json& j, const WeightVector& weights) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() ||
      j["coeffs"].size() != kCoefficients) {
    throw ParseError("TIV JSON needs a 'coeffs' array of 6 [re, im] pairs");
  }
  CoefficientArray coeffs;
  for (std::size_t k = 0; k < kCoefficients; ++k) {
    const auto& pair = j["coeffs"][k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw ParseError("TIV coefficient " + std::to_string(k + 1) +
                       " must be a [re, im] pair of numbers");
    }
    coeffs[k] = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  if (!j.contains("energy") || !j["energy"].is_number()) {
    throw ParseError("TIV JSON needs a numeric 'energy'");
  }
  try {
    return Tiv(coeffs, j["energy"].get<double>(), weights);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const HarmonicChangeSeries& series) {
  return Json{{"lambda", series.values}, {"peaks", series.peaks}};
}

Json to_json(const KeyResult& key) {
  return Json{{"index", key.index},
              {"tonic", key.tonic},
              {"mode", to_string(key.mode)},
              {"label", key_label(key.index)}};
}

}  // namespace tonalspace

#include "tonalspace/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "tonalspace/errors.h"

namespace tonalspace {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct Format {
  std::uint16_t tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

Format parse_fmt(const unsigned char* p, std::size_t size, const std::string& where) {
  if (size < 16) throw ParseError(where + ": truncated fmt chunk");
  Format f;
  f.tag = le16(p);
  f.channels = le16(p + 2);
  f.sample_rate = le32(p + 4);
  f.bits = le16(p + 14);
  if (f.tag == kFormatExtensible) {
    if (size < 40) throw ParseError(where + ": truncated extensible fmt chunk");
    f.tag = le16(p + 24);  // first two bytes of the sub-format GUID
  }
  return f;
}

float decode_sample(const unsigned char* p, const Format& f) {
  if (f.tag == kFormatFloat) {
    if (f.bits == 32) {
      float v;
      std::memcpy(&v, p, 4);
      return v;
    }
    double v;
    std::memcpy(&v, p, 8);
    return static_cast<float>(v);
  }
  switch (f.bits) {
    case 8:
      return (static_cast<float>(p[0]) - 128.0f) / 128.0f;
    case 16:
      return static_cast<float>(static_cast<std::int16_t>(le16(p))) / 32768.0f;
    case 24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return static_cast<float>(v / 8388608.0);
    }
    default:
      return static_cast<float>(static_cast<std::int32_t>(le32(p)) / 2147483648.0);
  }
}

void put16(std::ofstream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

void put32(std::ofstream& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

std::vector<double> WavData::mono() const {
  const std::size_t frames = frame_count();
  std::vector<double> out(frames, 0.0);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) acc += samples[i * channels + c];
    out[i] = acc / channels;
  }
  return out;
}

WavData read_wav(const std::filesystem::path& path) {
  const std::string where = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + where);
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw ParseError(where + ": not a RIFF/WAVE file");
  }

  std::optional<Format> format;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* header = bytes.data() + pos;
    const std::size_t size = le32(header + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = std::min(size, bytes.size() - body);
    if (std::memcmp(header, "fmt ", 4) == 0) {
      format = parse_fmt(bytes.data() + body, available, where);
    } else if (std::memcmp(header, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = available;  // tolerate a truncated final chunk
    }
    pos = body + size + (size & 1);
  }
  if (!format) throw ParseError(where + ": missing fmt chunk");
  if (!data) throw ParseError(where + ": missing data chunk");

  const Format& f = *format;
  const bool pcm_ok = f.tag == kFormatPcm &&
                      (f.bits == 8 || f.bits == 16 || f.bits == 24 || f.bits == 32);
  const bool float_ok = f.tag == kFormatFloat && (f.bits == 32 || f.bits == 64);
  if (!pcm_ok && !float_ok) {
    throw ParseError(where + ": unsupported encoding (format " + std::to_string(f.tag) +
                     ", " + std::to_string(f.bits) + " bits)");
  }
  if (f.channels == 0 || f.sample_rate == 0) {
    throw ParseError(where + ": invalid channel count or sample rate");
  }

  WavData wav;
  wav.sample_rate = f.sample_rate;
  wav.channels = f.channels;
  const std::size_t stride = f.bits / 8;
  const std::size_t frame_bytes = stride * f.channels;
  const std::size_t count = (data_size / frame_bytes) * f.channels;
  wav.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    wav.samples[i] = decode_sample(data + i * stride, f);
  }
  return wav;
}

void write_wav(const std::filesystem::path& path, const WavData& wav,
               WavEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  const std::uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : 32;
  const std::uint16_t tag = encoding == WavEncoding::kPcm16 ? kFormatPcm : kFormatFloat;
  const auto data_size = static_cast<std::uint32_t>(wav.samples.size() * (bits / 8));
  const auto block_align = static_cast<std::uint16_t>(wav.channels * (bits / 8));

  out.write("RIFF", 4);
  put32(out, 36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put32(out, 16);
  put16(out, tag);
  put16(out, wav.channels);
  put32(out, wav.sample_rate);
  put32(out, wav.sample_rate * block_align);
  put16(out, block_align);
  put16(out, bits);
  out.write("data", 4);
  put32(out, data_size);
  for (float s : wav.samples) {
    if (encoding == WavEncoding::kFloat32) {
      char b[4];
      std::memcpy(b, &s, 4);
      out.write(b, 4);
    } else {
      const float clipped = std::clamp(s, -1.0f, 1.0f);
      put16(out, static_cast<std::uint16_t>(
                     static_cast<std::int16_t>(std::lround(clipped * 32767.0f))));
    }
  }
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace tonalspace

// Copyright 2026 The IHA Phonotactics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iha/alphabet.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "iha/error.h"

namespace iha {
namespace {

constexpr std::array<std::string_view, kNumManners> kMannerNames = {
    "closure", "plosive", "fricative", "nasal", "approximant", "vowel"};
constexpr std::array<std::string_view, kNumFrontBack> kFrontBackNames = {
    "front", "frontLike", "central", "backLike", "back"};
constexpr std::array<std::string_view, kNumOpenClose> kOpenCloseNames = {
    "close", "closeLike", "closeMid", "mid", "openMid", "openLike", "open"};
constexpr std::array<std::string_view, kNumPlaces> kPlaceNames = {
    "palatAlveoLabial", "velar", "uvular", "pharyngeal", "epiglottal",
    "glottal"};

template <typename E, std::size_t N>
std::optional<E> Lookup(const std::array<std::string_view, N> &names,
                        std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return static_cast<E>(i);
  return std::nullopt;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string_view::npos
                                       ? std::string_view::npos
                                       : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return out;
}

// Decodes UTF-8 into code points; invalid bytes are passed through as-is.
std::vector<char32_t> CodePoints(std::string_view s) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    int len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                                          : (c >> 3) == 0x1E ? 4 : 1;
    char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F)
                                                                  : (c & 0x07);
    for (int k = 1; k < len && i + k < s.size(); ++k)
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

// Superscript glyphs used for frontBack/openClose marking.
bool IsSuperscript(char32_t cp) {
  switch (cp) {
    case U'ⁱ': case U'ᶤ': case U'ᵘ': case U'ᶦ': case U'ᶧ': case U'ᶷ':
    case U'ᵉ': case U'ᴲ': case U'ᵒ': case U'ᵊ': case U'ᵋ': case U'ᶟ':
    case U'ᵓ': case U'\U00010783': case U'ᵄ': case U'ᵃ': case U'ᵅ':
    case U'ˠ':
      return true;
    default:
      return false;
  }
}

constexpr char32_t kSubscriptO = U'ₒ';

}  // namespace

std::string_view ToString(Manner v) { return kMannerNames[static_cast<int>(v)]; }
std::string_view ToString(FrontBack v) {
  return kFrontBackNames[static_cast<int>(v)];
}
std::string_view ToString(OpenClose v) {
  return kOpenCloseNames[static_cast<int>(v)];
}
std::string_view ToString(Place v) { return kPlaceNames[static_cast<int>(v)]; }

std::optional<Manner> ParseManner(std::string_view s) {
  return Lookup<Manner>(kMannerNames, s);
}
std::optional<FrontBack> ParseFrontBack(std::string_view s) {
  return Lookup<FrontBack>(kFrontBackNames, s);
}
std::optional<OpenClose> ParseOpenClose(std::string_view s) {
  return Lookup<OpenClose>(kOpenCloseNames, s);
}
std::optional<Place> ParsePlace(std::string_view s) {
  if (s == "PAL") return Place::kPalatAlveoLabial;
  return Lookup<Place>(kPlaceNames, s);
}

std::string ToAscii(const Marker &m) {
  std::string out;
  out.append(ToString(m.manner)).append(":");
  out.append(ToString(m.front_back)).append(":");
  out.append(ToString(m.open_close)).append(":");
  out.append(ToString(m.place));
  return out;
}

std::optional<Marker> ParseAscii(std::string_view s) {
  std::array<std::string_view, 4> parts;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t colon = s.find(':', pos);
    if ((i < 3) == (colon == std::string_view::npos)) return std::nullopt;
    parts[i] = s.substr(pos, i < 3 ? colon - pos : std::string_view::npos);
    pos = colon + 1;
  }
  auto manner = ParseManner(parts[0]);
  auto fb = ParseFrontBack(parts[1]);
  auto oc = ParseOpenClose(parts[2]);
  auto place = ParsePlace(parts[3]);
  if (!manner || !fb || !oc || !place) return std::nullopt;
  return Marker{*manner, *fb, *oc, *place};
}

bool IsPharynGlottal(Place p) {
  return p == Place::kPharyngeal || p == Place::kEpiglottal ||
         p == Place::kGlottal;
}

Alphabet Alphabet::Load(std::istream &in) {
  Alphabet a;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&line_no](Errc code, const std::string &msg) {
    throw Error(code, "alphabet line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields[0] == "version") {
      if (fields.size() < 2 || fields[1].empty())
        fail(Errc::kMalformedDocument, "version line without a tag");
      a.version_ = std::string(fields[1]);
      continue;
    }
    if (fields.size() < 5)
      fail(Errc::kMalformedDocument, "expected at least 5 tab-separated fields");
    auto place = ParsePlace(fields[0]);
    auto manner = ParseManner(fields[1]);
    auto fb = ParseFrontBack(fields[2]);
    auto oc = ParseOpenClose(fields[3]);
    if (!place) fail(Errc::kUnknownAttribute, "unknown place '" + std::string(fields[0]) + "'");
    if (!manner) fail(Errc::kUnknownAttribute, "unknown manner '" + std::string(fields[1]) + "'");
    if (!fb) fail(Errc::kUnknownAttribute, "unknown frontBack '" + std::string(fields[2]) + "'");
    if (!oc) fail(Errc::kUnknownAttribute, "unknown openClose '" + std::string(fields[3]) + "'");
    Marker m{*manner, *fb, *oc, *place};
    if (m.manner == Manner::kVowel && m.place != Place::kGlottal)
      fail(Errc::kVowelPlace, "vowel entry with place " + std::string(fields[0]));
    if (m.manner == Manner::kNasal && IsPharynGlottal(m.place))
      fail(Errc::kNasalPlace, "nasal entry with place " + std::string(fields[0]));
    std::string symbol(fields[4]);
    if (symbol.empty()) fail(Errc::kMalformedDocument, "empty symbol");
    if (a.index_.count(m)) fail(Errc::kDuplicateCell, "duplicate cell " + ToAscii(m));
    if (a.by_symbol_.count(symbol))
      fail(Errc::kDuplicateSymbol, "duplicate symbol '" + symbol + "'");
    AlphabetCell cell{m, symbol, fields.size() > 5 ? std::string(fields[5]) : "",
                      fields.size() > 6 ? std::string(fields[6]) : ""};
    a.index_.emplace(m, 0);
    a.by_symbol_.emplace(symbol, 0);
    a.cells_.push_back(std::move(cell));
  }
  std::sort(a.cells_.begin(), a.cells_.end(),
            [](const AlphabetCell &x, const AlphabetCell &y) {
              return x.marker < y.marker;
            });
  for (std::size_t i = 0; i < a.cells_.size(); ++i) {
    a.index_[a.cells_[i].marker] = i;
    a.by_symbol_[a.cells_[i].symbol] = i;
  }
  return a;
}

Alphabet Alphabet::LoadFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open alphabet file " + path.string());
  return Load(in);
}

std::optional<std::size_t> Alphabet::IndexOf(const Marker &m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string &Alphabet::Symbol(const Marker &m) const {
  auto idx = IndexOf(m);
  if (!idx) throw Error(Errc::kInvalidMarker, "not an alphabet cell: " + ToAscii(m));
  return cells_[*idx].symbol;
}

Marker Alphabet::Parse(std::string_view text) const {
  if (auto it = by_symbol_.find(text); it != by_symbol_.end())
    return cells_[it->second].marker;
  if (auto m = ParseAscii(text)) {
    if (!Contains(*m))
      throw Error(Errc::kInvalidMarker, "not an alphabet cell: " + std::string(text));
    return *m;
  }
  auto cps = CodePoints(text);
  auto malformed = [&text](const char *why) {
    throw Error(Errc::kMalformedSymbol,
                "malformed symbol '" + std::string(text) + "': " + why);
  };
  if (cps.empty()) malformed("empty");
  if (cps.front() == kSubscriptO || IsSuperscript(cps.front()))
    malformed("diacritic without a base glyph");
  int supers = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == kSubscriptO && i + 1 != cps.size())
      malformed("closure subscript must come last");
    if (IsSuperscript(cps[i]) && ++supers > 1)
      malformed("more than one superscript");
  }
  throw Error(Errc::kUnknownGlyph, "unknown glyph '" + std::string(text) + "'");
}

bool IsValidMarker(const Alphabet &alphabet, const Marker &m) {
  return alphabet.Contains(m);
}

std::string RenderSymbol(const Alphabet &alphabet, const Marker &m) {
  return alphabet.Symbol(m);
}

Marker ParseSymbol(const Alphabet &alphabet, std::string_view s) {
  return alphabet.Parse(s);
}

void QuantizationConfig::Validate() const {
  if (!(reference_duration_sec > 0) || !(reference_pitch_hz > 0) ||
      !(reference_loudness > 0))
    throw Error(Errc::kOutOfRange, "quantization references must be positive");
  if (units_per_octave_d <= 0 || units_per_octave_t <= 0 ||
      units_per_decade_l <= 0 || units_per_nat_r <= 0)
    throw Error(Errc::kOutOfRange, "quantization units must be positive");
  if (min_value > max_value)
    throw Error(Errc::kOutOfRange, "quantization range is empty");
}

int Quantize(double value, ProsodicDimension dim, const QuantizationConfig &cfg) {
  double units = 0;
  switch (dim) {
    case ProsodicDimension::kRDelta:
      units = -cfg.units_per_nat_r * value;
      break;
    case ProsodicDimension::kD:
    case ProsodicDimension::kT:
    case ProsodicDimension::kL:
      if (!(value > 0))
        throw Error(Errc::kNonPositiveValue, "prosodic measurement must be positive");
      if (dim == ProsodicDimension::kD)
        units = cfg.units_per_octave_d * std::log2(value / cfg.reference_duration_sec);
      else if (dim == ProsodicDimension::kT)
        units = cfg.units_per_octave_t * std::log2(value / cfg.reference_pitch_hz);
      else
        units = cfg.units_per_decade_l * std::log10(value / cfg.reference_loudness);
      break;
  }
  double r = std::round(units);  // half away from zero
  if (r < cfg.min_value) return cfg.min_value;
  if (r > cfg.max_value) return cfg.max_value;
  return static_cast<int>(r);
}

double LinearDuration(int d, const QuantizationConfig &cfg) {
  return cfg.reference_duration_sec *
         std::exp2(static_cast<double>(d) / cfg.units_per_octave_d);
}

}  // namespace iha

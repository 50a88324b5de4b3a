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
//
// The phonetic and prosodic value spaces of the IHA alphabet.
//
// A Marker is a point in the 4-d phonetic subspace
// manner x frontBack x openClose x place. Only the populated cells of the
// alphabet tables are valid markers; the set of cells, their glyphs and the
// version tag are loaded from a tab-separated data file (data/iha_alphabet.tsv).
//
// Besides the glyphs, every routine that parses a marker also accepts the
// ASCII form "manner:frontBack:openClose:place" using the attribute names
// below, e.g. "vowel:front:close:glottal".

#ifndef IHA_ALPHABET_H_
#define IHA_ALPHABET_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iha {

enum class Manner : std::uint8_t {
  kClosure, kPlosive, kFricative, kNasal, kApproximant, kVowel
};
enum class FrontBack : std::uint8_t {
  kFront, kFrontLike, kCentral, kBackLike, kBack
};
enum class OpenClose : std::uint8_t {
  kClose, kCloseLike, kCloseMid, kMid, kOpenMid, kOpenLike, kOpen
};
enum class Place : std::uint8_t {
  kPalatAlveoLabial, kVelar, kUvular, kPharyngeal, kEpiglottal, kGlottal
};

inline constexpr int kNumManners = 6;
inline constexpr int kNumFrontBack = 5;
inline constexpr int kNumOpenClose = 7;
inline constexpr int kNumPlaces = 6;

std::string_view ToString(Manner v);
std::string_view ToString(FrontBack v);
std::string_view ToString(OpenClose v);
std::string_view ToString(Place v);

// Attribute names are matched exactly ("palatAlveoLabial", "frontLike", ...).
// "PAL" is accepted as an abbreviation of palatAlveoLabial.
std::optional<Manner> ParseManner(std::string_view s);
std::optional<FrontBack> ParseFrontBack(std::string_view s);
std::optional<OpenClose> ParseOpenClose(std::string_view s);
std::optional<Place> ParsePlace(std::string_view s);

struct Marker {
  Manner manner = Manner::kClosure;
  FrontBack front_back = FrontBack::kFront;
  OpenClose open_close = OpenClose::kClose;
  Place place = Place::kPalatAlveoLabial;

  auto operator<=>(const Marker &) const = default;
};

// "manner:frontBack:openClose:place".
std::string ToAscii(const Marker &m);
// Parses the ASCII form; nullopt if it is not four known attribute names.
std::optional<Marker> ParseAscii(std::string_view s);

bool IsPharynGlottal(Place p);

// Quantized prosodic values of one phone.
struct ProsodicVector {
  int R = 0;  // rounding: negated change of log vocal tract length
  int N = 0;  // nasal formant on/off
  int V = 0;  // first formant on/off
  int T = 0;  // log pitch
  int D = 0;  // log duration
  int L = 0;  // log loudness

  bool operator==(const ProsodicVector &) const = default;
};

// A real phone carries a marker and prosody; the null phone (marker empty)
// is the origin of the space and stands for deletion in distributions.
struct Phone {
  std::optional<Marker> marker;
  ProsodicVector prosody;
  std::optional<double> t0;

  static Phone Null() { return Phone{}; }
  static Phone Real(const Marker &m, const ProsodicVector &p = {},
                    std::optional<double> t0 = std::nullopt) {
    return Phone{m, p, t0};
  }
  bool is_null() const { return !marker.has_value(); }
  bool operator==(const Phone &) const = default;
};

struct AlphabetCell {
  Marker marker;
  std::string symbol;
  std::string ipa;
  std::string note;
};

class Alphabet {
 public:
  Alphabet() = default;

  // Reads the tab-separated table format. Lines starting with '#' and blank
  // lines are ignored; "version<TAB>tag" sets the version; every other line is
  // place, manner, frontBack, openClose, symbol[, ipa[, note]].
  static Alphabet Load(std::istream &in);
  static Alphabet LoadFile(const std::filesystem::path &path);

  const std::string &version() const { return version_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  // Cells in canonical (Marker) order; IndexOf gives positions in this span.
  std::span<const AlphabetCell> cells() const { return cells_; }
  const Marker &marker(std::size_t index) const { return cells_[index].marker; }
  std::optional<std::size_t> IndexOf(const Marker &m) const;
  bool Contains(const Marker &m) const { return IndexOf(m).has_value(); }

  // Throws Error(kInvalidMarker) for markers outside the table.
  const std::string &Symbol(const Marker &m) const;
  // Accepts table glyphs and the ASCII form. Throws kUnknownGlyph or
  // kMalformedSymbol.
  Marker Parse(std::string_view text) const;

 private:
  std::string version_;
  std::vector<AlphabetCell> cells_;
  std::map<Marker, std::size_t> index_;
  std::map<std::string, std::size_t, std::less<>> by_symbol_;
};

bool IsValidMarker(const Alphabet &alphabet, const Marker &m);
std::string RenderSymbol(const Alphabet &alphabet, const Marker &m);
Marker ParseSymbol(const Alphabet &alphabet, std::string_view s);

// Subscript "o" marking closures (U+2092).
inline constexpr std::string_view kClosureSubscript = "ₒ";

// ---------------------------------------------------------------------------
// Logarithmic quantization of prosodic measurements.

struct QuantizationConfig {
  double reference_duration_sec = 0.100;
  double reference_pitch_hz = 100.0;
  double reference_loudness = 1.0;
  int units_per_octave_d = 4;
  int units_per_octave_t = 12;
  int units_per_decade_l = 10;
  int units_per_nat_r = 10;
  // Quantized values saturate to [min_value, max_value].
  int min_value = -64;
  int max_value = 64;

  void Validate() const;
  bool operator==(const QuantizationConfig &) const = default;
};

enum class ProsodicDimension { kD, kT, kL, kRDelta };

// D, T and L take positive measurements (seconds, Hz, linear loudness).
// kRDelta takes a change of log vocal tract length, of either sign; the result
// is negated so that shortening ("fronting") is positive. Rounds half away
// from zero.
int Quantize(double value, ProsodicDimension dim, const QuantizationConfig &cfg);

// Linear duration in seconds represented by a quantized D value.
double LinearDuration(int d, const QuantizationConfig &cfg);

}  // namespace iha

#endif  // IHA_ALPHABET_H_

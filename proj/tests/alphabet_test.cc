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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "iha/alphabet.h"
#include "iha/error.h"
#include "test_util.h"

namespace iha {
namespace {

using testing::M;
using testing::Main;

Errc LoadError(const std::string &doc) {
  std::istringstream in(doc);
  try {
    Alphabet::Load(in);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << doc;
  return Errc::kIo;
}

TEST(Attributes, Cardinalities) {
  EXPECT_EQ(kNumManners, 6);
  EXPECT_EQ(kNumFrontBack, 5);
  EXPECT_EQ(kNumOpenClose, 7);
  EXPECT_EQ(kNumPlaces, 6);
}

TEST(Attributes, NamesRoundTrip) {
  for (int i = 0; i < kNumManners; ++i)
    EXPECT_EQ(ParseManner(ToString(Manner(i))), Manner(i));
  for (int i = 0; i < kNumFrontBack; ++i)
    EXPECT_EQ(ParseFrontBack(ToString(FrontBack(i))), FrontBack(i));
  for (int i = 0; i < kNumOpenClose; ++i)
    EXPECT_EQ(ParseOpenClose(ToString(OpenClose(i))), OpenClose(i));
  for (int i = 0; i < kNumPlaces; ++i) EXPECT_EQ(ParsePlace(ToString(Place(i))), Place(i));
  EXPECT_EQ(ParsePlace("PAL"), Place::kPalatAlveoLabial);
  EXPECT_FALSE(ParseManner("trill"));
  EXPECT_FALSE(ParseFrontBack("Front"));
}

TEST(Attributes, AsciiForm) {
  const Marker i{Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kGlottal};
  EXPECT_EQ(ToAscii(i), "vowel:front:close:glottal");
  EXPECT_EQ(ParseAscii("vowel:front:close:glottal"), i);
  EXPECT_EQ(ParseAscii("plosive:back:close:PAL")->place, Place::kPalatAlveoLabial);
  EXPECT_FALSE(ParseAscii("vowel:front:close"));
  EXPECT_FALSE(ParseAscii("vowel:front:close:glottal:x"));
  EXPECT_FALSE(ParseAscii("vowel:sideways:close:glottal"));
}

TEST(Load, ContainsCloseI) {
  std::istringstream in("version\tt\nglottal\tvowel\tfront\tclose\ti\n");
  const Alphabet a = Alphabet::Load(in);
  EXPECT_EQ(a.version(), "t");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(a.Contains({Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kGlottal}));
}

TEST(Load, EmptyDocumentIsEmptyAlphabet) {
  std::istringstream in("");
  const Alphabet a = Alphabet::Load(in);
  EXPECT_TRUE(a.empty());
  EXPECT_EQ(a.size(), 0u);
}

TEST(Load, Errors) {
  EXPECT_EQ(LoadError("glottal\tvowel\tfront\tclose\ti\nglottal\tvowel\tback\tclose\ti\n"),
            Errc::kDuplicateSymbol);
  EXPECT_EQ(LoadError("glottal\tvowel\tfront\tclose\ti\nglottal\tvowel\tfront\tclose\ty\n"),
            Errc::kDuplicateCell);
  EXPECT_EQ(LoadError("glottal\tvowel\tfront\tshut\ti\n"), Errc::kUnknownAttribute);
  EXPECT_EQ(LoadError("velar\tvowel\tfront\tclose\ti\n"), Errc::kVowelPlace);
  EXPECT_EQ(LoadError("pharyngeal\tnasal\tfront\tclose\tn\n"), Errc::kNasalPlace);
  EXPECT_EQ(LoadError("glottal\tvowel\tfront\n"), Errc::kMalformedDocument);
  EXPECT_EQ(ClassOf(Errc::kUnknownAttribute), ErrorClass::kFormat);
}

TEST(Load, MissingFileIsIoError) {
  try {
    Alphabet::LoadFile("/nonexistent/alphabet.tsv");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(ClassOf(e.code()), ErrorClass::kIo);
  }
}

TEST(MainTable, Shape) {
  const Alphabet &a = *Main();
  EXPECT_EQ(a.version(), "iha-tables-1");
  EXPECT_EQ(a.size(), 325u);
  std::map<Place, int> per_place;
  for (const auto &c : a.cells()) {
    ++per_place[c.marker.place];
    if (c.marker.manner == Manner::kVowel) EXPECT_EQ(c.marker.place, Place::kGlottal);
    if (c.marker.manner == Manner::kNasal) EXPECT_FALSE(IsPharynGlottal(c.marker.place));
  }
  EXPECT_EQ(per_place[Place::kGlottal], 5 * 17);
  EXPECT_EQ(per_place[Place::kPharyngeal], 4 * 17);
  EXPECT_EQ(per_place[Place::kEpiglottal], 4 * 17);
  EXPECT_EQ(per_place[Place::kVelar], 25);
  EXPECT_EQ(per_place[Place::kUvular], 25);
  EXPECT_EQ(per_place[Place::kPalatAlveoLabial], 54);
}

TEST(MainTable, CellsSortedCanonically) {
  const auto cells = Main()->cells();
  for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_LT(cells[i - 1].marker, cells[i].marker);
  for (std::size_t i = 0; i < cells.size(); ++i) EXPECT_EQ(Main()->IndexOf(cells[i].marker), i);
}

TEST(MainTable, ClosuresShareFricativeSupport) {
  std::map<Place, std::set<std::pair<FrontBack, OpenClose>>> closures, fricatives;
  for (const auto &c : Main()->cells()) {
    const auto fo = std::make_pair(c.marker.front_back, c.marker.open_close);
    if (c.marker.manner == Manner::kClosure) closures[c.marker.place].insert(fo);
    if (c.marker.manner == Manner::kFricative) fricatives[c.marker.place].insert(fo);
  }
  EXPECT_EQ(closures, fricatives);
}

TEST(MainTable, ClosureGlyphsAreSubscripted) {
  const Alphabet &a = *Main();
  for (const auto &c : a.cells()) {
    if (c.marker.manner != Manner::kClosure) continue;
    Marker base = c.marker;
    base.manner = c.marker.place == Place::kGlottal ? Manner::kVowel : Manner::kFricative;
    EXPECT_EQ(c.symbol, a.Symbol(base) + std::string(kClosureSubscript)) << ToAscii(c.marker);
  }
}

TEST(ValidMarker, Examples) {
  const Alphabet &a = *Main();
  EXPECT_TRUE(IsValidMarker(a, {Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kGlottal}));
  EXPECT_FALSE(IsValidMarker(a, {Manner::kNasal, FrontBack::kFront, OpenClose::kClose, Place::kGlottal}));
  EXPECT_FALSE(IsValidMarker(a, {Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kVelar}));
}

TEST(Symbols, RenderExamples) {
  const Alphabet &a = *Main();
  EXPECT_EQ(RenderSymbol(a, {Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kGlottal}), "i");
  EXPECT_EQ(RenderSymbol(a, {Manner::kClosure, FrontBack::kFrontLike, OpenClose::kOpen, Place::kGlottal}),
            "a" + std::string(kClosureSubscript));
  try {
    RenderSymbol(a, {Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kVelar});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kInvalidMarker);
  }
}

TEST(Symbols, ParseExamples) {
  const Alphabet &a = *Main();
  EXPECT_EQ(ParseSymbol(a, "i"),
            (Marker{Manner::kVowel, FrontBack::kFront, OpenClose::kClose, Place::kGlottal}));
  EXPECT_EQ(ParseSymbol(a, "aₒ"),
            (Marker{Manner::kClosure, FrontBack::kFrontLike, OpenClose::kOpen, Place::kGlottal}));
  EXPECT_EQ(ParseSymbol(a, "closure:back:close:PAL"), M("ɸₒ"));
}

TEST(Symbols, ParseErrors) {
  const Alphabet &a = *Main();
  auto code = [&](const char *s) {
    try {
      ParseSymbol(a, s);
    } catch (const Error &e) {
      return e.code();
    }
    return Errc::kIo;
  };
  EXPECT_EQ(code("zz"), Errc::kUnknownGlyph);
  EXPECT_EQ(code(""), Errc::kMalformedSymbol);
  EXPECT_EQ(code("ₒa"), Errc::kMalformedSymbol);
  EXPECT_EQ(code("ⁱ"), Errc::kMalformedSymbol);
  EXPECT_EQ(code("hⁱᵘ"), Errc::kMalformedSymbol);
  EXPECT_EQ(code("vowel:front:close:velar"), Errc::kInvalidMarker);
}

TEST(Symbols, RoundTripEveryCell) {
  const Alphabet &a = *Main();
  for (const auto &c : a.cells()) {
    EXPECT_EQ(ParseSymbol(a, RenderSymbol(a, c.marker)), c.marker) << c.symbol;
    EXPECT_EQ(ParseSymbol(a, ToAscii(c.marker)), c.marker);
  }
}

TEST(Quantize, Examples) {
  const QuantizationConfig q;
  EXPECT_EQ(Quantize(0.200, ProsodicDimension::kD, q), 4);
  EXPECT_EQ(Quantize(0.100, ProsodicDimension::kD, q), 0);
  EXPECT_EQ(Quantize(100.0, ProsodicDimension::kT, q), 0);
  EXPECT_EQ(Quantize(200.0, ProsodicDimension::kT, q), 12);
  EXPECT_EQ(Quantize(10.0, ProsodicDimension::kL, q), 10);
  EXPECT_EQ(Quantize(1.0, ProsodicDimension::kL, q), 0);
  EXPECT_EQ(Quantize(-0.1, ProsodicDimension::kRDelta, q), 1);
  EXPECT_EQ(Quantize(0.1, ProsodicDimension::kRDelta, q), -1);
}

TEST(Quantize, RoundsHalfAwayFromZero) {
  const QuantizationConfig q;
  EXPECT_EQ(Quantize(-0.05, ProsodicDimension::kRDelta, q), 1);   // 0.5
  EXPECT_EQ(Quantize(0.05, ProsodicDimension::kRDelta, q), -1);   // -0.5
  EXPECT_EQ(Quantize(-0.25, ProsodicDimension::kRDelta, q), 3);   // 2.5
}

TEST(Quantize, SaturatesAndRejectsNonPositive) {
  const QuantizationConfig q;
  EXPECT_EQ(Quantize(1e9, ProsodicDimension::kD, q), 64);
  EXPECT_EQ(Quantize(1e-30, ProsodicDimension::kT, q), -64);
  for (double bad : {0.0, -1.0}) {
    try {
      Quantize(bad, ProsodicDimension::kD, q);
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), Errc::kNonPositiveValue);
    }
  }
}

TEST(Quantize, MonotoneAndReferenceAtZero) {
  const QuantizationConfig q;
  for (auto dim : {ProsodicDimension::kD, ProsodicDimension::kT, ProsodicDimension::kL}) {
    int prev = Quantize(1e-3, dim, q);
    for (double v = 1e-3; v < 1e4; v *= 1.013) {
      const int cur = Quantize(v, dim, q);
      EXPECT_GE(cur, prev);
      prev = cur;
    }
  }
  EXPECT_EQ(Quantize(q.reference_duration_sec, ProsodicDimension::kD, q), 0);
  EXPECT_EQ(Quantize(q.reference_pitch_hz, ProsodicDimension::kT, q), 0);
  EXPECT_EQ(Quantize(q.reference_loudness, ProsodicDimension::kL, q), 0);
}

TEST(Quantize, ConfigValidation) {
  QuantizationConfig q;
  q.reference_pitch_hz = 0;
  EXPECT_THROW(q.Validate(), Error);
  q = {};
  q.units_per_octave_d = 0;
  EXPECT_THROW(q.Validate(), Error);
}

TEST(Phone, NullIsOrigin) {
  const Phone n = Phone::Null();
  EXPECT_TRUE(n.is_null());
  EXPECT_EQ(n.prosody, ProsodicVector{});
  EXPECT_FALSE(n.t0);
  EXPECT_FALSE(Phone::Real(M("i")).is_null());
}

}  // namespace
}  // namespace iha

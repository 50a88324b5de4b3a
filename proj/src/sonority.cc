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

#include "iha/sonority.h"

namespace iha {
namespace {

PartialOrdering CompareInts(int a, int b) {
  if (a < b) return PartialOrdering::kLess;
  if (a > b) return PartialOrdering::kGreater;
  return PartialOrdering::kEqual;
}

// frontBack is a tent: height rises towards central from either side.
int TentHeight(FrontBack v) {
  switch (v) {
    case FrontBack::kFront: case FrontBack::kBack: return 0;
    case FrontBack::kFrontLike: case FrontBack::kBackLike: return 1;
    case FrontBack::kCentral: return 2;
  }
  return 0;
}

int TentSide(FrontBack v) {
  if (v == FrontBack::kFront || v == FrontBack::kFrontLike) return -1;
  if (v == FrontBack::kCentral) return 0;
  return 1;
}

int PlaceHeight(Place p) {
  switch (p) {
    case Place::kPalatAlveoLabial: case Place::kVelar: return 0;
    case Place::kUvular: return 1;
    case Place::kPharyngeal: return 2;
    case Place::kEpiglottal: return 3;
    case Place::kGlottal: return 4;
  }
  return 0;
}

bool NotGreater(PartialOrdering o, bool allow_incomparable) {
  return o == PartialOrdering::kLess || o == PartialOrdering::kEqual ||
         (allow_incomparable && o == PartialOrdering::kIncomparable);
}

}  // namespace

PartialOrdering CompareManner(Manner a, Manner b) {
  return CompareInts(static_cast<int>(a), static_cast<int>(b));
}

PartialOrdering CompareOpenClose(OpenClose a, OpenClose b) {
  return CompareInts(static_cast<int>(a), static_cast<int>(b));
}

PartialOrdering CompareFrontBack(FrontBack a, FrontBack b) {
  if (a == b) return PartialOrdering::kEqual;
  int sa = TentSide(a), sb = TentSide(b);
  if (sa != 0 && sb != 0 && sa != sb) return PartialOrdering::kIncomparable;
  return CompareInts(TentHeight(a), TentHeight(b));
}

PartialOrdering ComparePlace(Place a, Place b) {
  if (a == b) return PartialOrdering::kEqual;
  if (PlaceHeight(a) == 0 && PlaceHeight(b) == 0)
    return PartialOrdering::kIncomparable;
  return CompareInts(PlaceHeight(a), PlaceHeight(b));
}

SonorityRelation CompareSonority(const Marker &a, const Marker &b) {
  const PartialOrdering steps[] = {
      CompareManner(a.manner, b.manner),
      ComparePlace(a.place, b.place),
      CompareOpenClose(a.open_close, b.open_close),
      CompareFrontBack(a.front_back, b.front_back),
  };
  for (PartialOrdering o : steps) {
    switch (o) {
      case PartialOrdering::kLess: return SonorityRelation::kLess;
      case PartialOrdering::kGreater: return SonorityRelation::kGreater;
      case PartialOrdering::kIncomparable: return SonorityRelation::kEquivalent;
      case PartialOrdering::kEqual: break;
    }
  }
  return SonorityRelation::kEquivalent;
}

bool IsDiphthongalStep(const Marker &a, const Marker &b) {
  const PartialOrdering manner = CompareManner(b.manner, a.manner);
  const PartialOrdering place = ComparePlace(b.place, a.place);
  const PartialOrdering oc = CompareOpenClose(b.open_close, a.open_close);
  const PartialOrdering fb = CompareFrontBack(b.front_back, a.front_back);
  if (!NotGreater(manner, false) || !NotGreater(place, true) ||
      !NotGreater(oc, false) || !NotGreater(fb, true))
    return false;
  return manner == PartialOrdering::kLess || place == PartialOrdering::kLess ||
         oc == PartialOrdering::kLess || fb == PartialOrdering::kLess;
}

bool CheckDiphthongalSyllable(std::span<const Marker> onset,
                              std::span<const Marker> rhyme) {
  for (std::size_t i = 1; i < rhyme.size(); ++i)
    if (!IsDiphthongalStep(rhyme[i - 1], rhyme[i])) return false;
  for (std::size_t i = 1; i < onset.size(); ++i)
    if (!IsDiphthongalStep(onset[i], onset[i - 1])) return false;
  return true;
}

StepTable::StepTable(const Alphabet &alphabet)
    : n_(alphabet.size()), bits_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      bits_[i * n_ + j] = IsDiphthongalStep(alphabet.marker(i), alphabet.marker(j));
}

}  // namespace iha

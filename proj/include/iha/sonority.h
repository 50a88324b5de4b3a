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
// Orders on the phonetic dimensions and the generalized-diphthong predicate.
//
//   manner:    closure < plosive < fricative < nasal < approximant < vowel
//   frontBack: front < frontLike < central > backLike > back
//   openClose: close < closeLike < closeMid < mid < openMid < openLike < open
//   place:     velar < uvular < pharyngeal < epiglottal < glottal
//              palatAlveoLabial < uvular
//
// frontBack and place are only partial orders: the two sides of frontBack
// are mutually incomparable, as are velar and palatAlveoLabial.

#ifndef IHA_SONORITY_H_
#define IHA_SONORITY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "iha/alphabet.h"

namespace iha {

enum class PartialOrdering { kLess, kGreater, kEqual, kIncomparable };
enum class SonorityRelation { kLess, kGreater, kEquivalent };

PartialOrdering CompareManner(Manner a, Manner b);
PartialOrdering CompareFrontBack(FrontBack a, FrontBack b);
PartialOrdering CompareOpenClose(OpenClose a, OpenClose b);
PartialOrdering ComparePlace(Place a, Place b);

// Lexicographic over (manner, place, openClose, frontBack). The first
// dimension that is not Equal decides; Incomparable there means Equivalent.
SonorityRelation CompareSonority(const Marker &a, const Marker &b);

// True iff moving from a to b (away from the nucleus) no dimension increases
// and at least one strictly decreases. frontBack and place may be
// Incomparable.
bool IsDiphthongalStep(const Marker &a, const Marker &b);

// onset is in time order and ends at the nucleus; rhyme starts at the
// nucleus. Onset pairs are checked time-reversed.
bool CheckDiphthongalSyllable(std::span<const Marker> onset,
                              std::span<const Marker> rhyme);

// IsDiphthongalStep precomputed over all pairs of alphabet cells.
class StepTable {
 public:
  explicit StepTable(const Alphabet &alphabet);
  bool Step(std::size_t from, std::size_t to) const {
    return bits_[from * n_ + to];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

}  // namespace iha

#endif  // IHA_SONORITY_H_

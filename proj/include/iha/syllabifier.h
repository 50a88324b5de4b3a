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
// Phone string validation, syllable parsing, stress classification and the
// dependency plan that factorizes a string's probability.
//
// A syllable runs from one sonority minimum to the next. Adjacent syllables
// share the minimum between them. Within a syllable the onset is
// [start .. nucleus] and the rhyme is [nucleus .. end], both in phone
// positions of the (collapsed) string.

#ifndef IHA_SYLLABIFIER_H_
#define IHA_SYLLABIFIER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iha/alphabet.h"
#include "iha/sonority.h"

namespace iha {

enum class ViolationKind {
  kTooShort,
  kMissingBoundaryClosure,
  kAllClosures,
  kClosureRunTooLong,
  kTimeNotStrictlyIncreasing,
  kInvalidMarker,
};

const char *ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t position = 0;  // phone index the violation refers to
  std::string detail;
};

// A phone sequence known to satisfy the string validity rules. Only
// ValidateString and CollapseRepeats produce one.
struct ValidationResult;

class PhoneString {
 public:
  const std::vector<Phone> &phones() const { return phones_; }
  std::size_t size() const { return phones_.size(); }
  const Phone &operator[](std::size_t i) const { return phones_[i]; }
  const Marker &marker(std::size_t i) const { return *phones_[i].marker; }
  bool operator==(const PhoneString &) const = default;

 private:
  friend struct ValidationResult;
  friend ValidationResult ValidateString(const Alphabet &, std::vector<Phone>);
  friend PhoneString CollapseRepeats(const PhoneString &,
                                     const QuantizationConfig &);
  explicit PhoneString(std::vector<Phone> phones) : phones_(std::move(phones)) {}
  std::vector<Phone> phones_;
};

struct ValidationResult {
  std::optional<PhoneString> value;
  std::vector<Violation> violations;
  bool ok() const { return value.has_value(); }
};

// Rules: at least 3 phones, closures at both ends, at least one non-closure,
// no more than 2 consecutive closures, strictly increasing t0 where present,
// every phone a real alphabet cell.
ValidationResult ValidateString(const Alphabet &alphabet, std::vector<Phone> phones);

// Merges runs of identical markers. The merged phone keeps the first t0 and
// T, sums linear durations (D re-quantized) and R, takes the max L, and takes
// N and V by majority with ties going to the first phone.
PhoneString CollapseRepeats(const PhoneString &s, const QuantizationConfig &cfg);

// A maximal run of phones treated as one sonority point: adjacent phones are
// Equivalent under CompareSonority, or both closures.
struct Block {
  std::size_t first = 0;
  std::size_t last = 0;
  Marker representative;
};

struct Syllable {
  std::size_t start_block = 0;
  std::size_t nucleus_block = 0;
  std::size_t end_block = 0;
  // Phone positions. start is the phone shared with the previous syllable
  // (phone 0 for the first syllable); end the phone shared with the next.
  std::size_t start = 0;
  std::size_t nucleus = 0;
  std::size_t end = 0;
};

struct SyllableParse {
  std::vector<Block> blocks;
  // Relation of block i to block i+1; never Equivalent.
  std::vector<SonorityRelation> block_steps;
  std::vector<std::size_t> minima;  // block indices, ascending
  std::vector<Syllable> syllables;
};

std::vector<Block> BuildBlocks(const PhoneString &s);

// Expects repeats collapsed.
SyllableParse ParseSyllables(const PhoneString &s);

enum class StressClass { kStressed, kUnstressed, kMiddlingLtoR, kMiddlingRtoL };
inline constexpr int kNumStressClasses = 4;

const char *ToString(StressClass c);
std::optional<StressClass> ParseStressClass(std::string_view s);

struct StressWeights {
  double duration = 1.0;
  double loudness = 1.0;
  double tone = 1.0;
  double count = 1.0;

  void Validate() const;
  bool operator==(const StressWeights &) const = default;
};

// The phones strictly between the syllable's two minimum blocks.
std::span<const Phone> ConstituentPhones(const Syllable &syl, const SyllableParse &parse,
                                         const PhoneString &s);

// duration * D(sum of linear constituent durations) + loudness * max L
//   + tone * T(nucleus) + count * number of constituents.
double StressScore(const Syllable &syl, const SyllableParse &parse,
                   const PhoneString &s, const StressWeights &w,
                   const QuantizationConfig &cfg);

// Local maxima are stressed, local minima unstressed, the rest middling with
// dependence flowing from the more stressed neighbor. Equal adjacent scores
// rank the earlier syllable higher. The string end is a virtual unstressed
// neighbor of the last syllable; the first syllable is stressed iff it ranks
// above the second.
std::vector<StressClass> ClassifyStress(std::span<const double> scores);

enum class Unit { kOnset, kRhyme, kNucleus };
const char *ToString(Unit u);
std::optional<Unit> ParseUnit(std::string_view s);

// target conditioned on context (phone positions). An empty context marks a
// root factor, conditioned on the null phone.
struct Factor {
  std::size_t target = 0;
  std::vector<std::size_t> context;
  Unit unit = Unit::kOnset;
  StressClass stress = StressClass::kStressed;
  std::size_t syllable = 0;

  bool operator==(const Factor &) const = default;
};

struct DependencyPlan {
  std::vector<Factor> factors;
};

// Stressed syllables depend outwards from the nucleus (the nucleus itself
// gets a root factor), unstressed inwards with a joint nucleus factor on both
// neighbours, middling ones inward on the side of the more stressed neighbor
// and outward on the other. A string-boundary phone no scheme targets gets a
// root factor. classes must come from ClassifyStress for every phone to be
// targeted exactly once.
DependencyPlan BuildDependencyPlan(const SyllableParse &parse,
                                   std::span<const StressClass> classes);

// Everything derived from a validated string.
struct Analysis {
  PhoneString collapsed;
  SyllableParse parse;
  std::vector<double> scores;
  std::vector<StressClass> classes;
  DependencyPlan plan;
};

Analysis Analyze(const PhoneString &s, const StressWeights &w,
                 const QuantizationConfig &cfg);

}  // namespace iha

#endif  // IHA_SYLLABIFIER_H_

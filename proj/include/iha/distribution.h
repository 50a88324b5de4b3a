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
// Conditional categorical distributions over the alphabet cells plus the
// null phone, and the keys they are indexed by.
//
// Outcomes are dense indices: 0 is the null phone, i + 1 is alphabet cell i.

#ifndef IHA_DISTRIBUTION_H_
#define IHA_DISTRIBUTION_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iha/alphabet.h"
#include "iha/sonority.h"
#include "iha/syllabifier.h"

namespace iha {

using Outcome = std::size_t;
inline constexpr Outcome kNullOutcome = 0;

inline Outcome OutcomeOfCell(std::size_t cell) { return cell + 1; }

struct CondKey {
  Unit unit = Unit::kOnset;
  StressClass stress = StressClass::kStressed;
  // One entry, or two for unstressed nuclei. [null] marks a root key.
  std::vector<std::optional<Marker>> context;

  auto operator<=>(const CondKey &) const = default;
  bool operator==(const CondKey &) const = default;
};

std::string ToString(const CondKey &key);

// Where a key's target sits relative to its context.
enum class Direction {
  kRoot,     // unconditioned (null context)
  kOutward,  // target is further from the nucleus than the context
  kInward,   // target is nearer the nucleus than the context(s)
};

Direction DirectionOf(const CondKey &key);

// Index into key.context of the context phone that follows the target in
// time, if any.
std::optional<std::size_t> FollowingContext(const CondKey &key);

// Throws Error(kMalformedDocument) if the context arity does not fit the
// unit and stress class.
void CheckKeyShape(const CondKey &key);

class CategoricalDist {
 public:
  CategoricalDist() = default;
  explicit CategoricalDist(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::size_t size() const { return probs_.size(); }
  double prob(Outcome o) const { return probs_[o]; }
  double &operator[](Outcome o) { return probs_[o]; }
  std::span<const double> probs() const { return probs_; }
  double Sum() const;
  // Nonnegative entries, null present, sum within tolerance of 1.
  bool IsNormalized(double tolerance = 1e-9) const;
  void Normalize();

  bool operator==(const CategoricalDist &) const = default;

 private:
  std::vector<double> probs_;
};

// Whether the outcome is allowed by the diphthongal constraint under the
// key's direction. The null phone and root keys admit everything.
bool IsAdmissible(const Alphabet &alphabet, const StepTable &steps,
                  const CondKey &key, Outcome outcome);

// Uniform (1 - epsilon) over the admissible outcomes, epsilon spread over the
// rest; when nothing is excluded the admissible set takes all mass.
CategoricalDist GenericDistribution(const Alphabet &alphabet, const StepTable &steps,
                                    const CondKey &key, double epsilon);

double TotalVariation(const CategoricalDist &a, const CategoricalDist &b);

}  // namespace iha

#endif  // IHA_DISTRIBUTION_H_

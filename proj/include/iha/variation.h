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
// Phonological variation as rewrites of a model's conditional distributions
// under a prosodic regime (speech rate, loudness, pitch relative to the
// norm).
//
//   syncope       unstressed keys: null mass x (1 + lambda (rate - 1))
//   epenthesis    stressed keys: joining mass x (1 + lambda (loud - 1))
//   lenition      onset/rhyme keys after a vowel: central close PAL plosive
//                 -> central close PAL approximant, fraction
//                 lambda (rate - 1) / rate
//   assimilation  keys conditioned on a following back close PAL plosive:
//                 central close PAL nasal -> back close PAL nasal, same
//                 fraction as lenition
//   straightening every key: p^k (1 + d)^-(k - 1), k = 1 + lambda (rate - 1),
//                 d the ordinal path length from the context
//
// Stored tables are rewritten directly. Keys that fall back to the generic
// construction get the same rewrite on demand: the transform is appended to
// the model's fallback chain.

#ifndef IHA_VARIATION_H_
#define IHA_VARIATION_H_

#include <optional>
#include <string_view>
#include <vector>

#include "iha/distribution.h"

namespace iha {

class LanguageModel;

struct Regime {
  double rate = 1.0;
  double loud = 1.0;
  double pitch = 1.0;

  void Validate() const;
  bool operator==(const Regime &) const = default;
};

enum class TransformKind { kSyncope, kEpenthesis, kLenition, kAssimilation, kStraightening };

const char *ToString(TransformKind kind);
std::optional<TransformKind> ParseTransformKind(std::string_view s);

struct TransformSpec {
  TransformKind kind = TransformKind::kSyncope;
  double lambda = 0.0;

  void Validate() const;
  bool operator==(const TransformSpec &) const = default;
};

// True when the transform cannot change any distribution under the regime.
bool IsIdentity(const TransformSpec &spec, const Regime &regime);

// Whether a key matches the transform's trigger pattern.
bool Triggers(const TransformSpec &spec, const CondKey &key);

// Rewrites one distribution; keys outside the trigger pattern are returned
// unchanged.
CategoricalDist TransformDistribution(const Alphabet &alphabet, const StepTable &steps,
                                      const CondKey &key, const CategoricalDist &dist,
                                      const Regime &regime, const TransformSpec &spec);

// L1 distance with each dimension indexed along its chain; incomparable
// values are joined through their least common upper bound.
int OrdinalDistance(const Marker &a, const Marker &b);

LanguageModel Apply(const LanguageModel &model, const Regime &regime,
                    const TransformSpec &spec);

struct KeyDrift {
  CondKey key;
  double distance = 0.0;
};

// Total variation per stored key of either model, descending. A key stored in
// only one model is compared against the other's fallback distribution.
std::vector<KeyDrift> DriftReport(const LanguageModel &base, const LanguageModel &varied);

}  // namespace iha

#endif  // IHA_VARIATION_H_

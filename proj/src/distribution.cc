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

#include "iha/distribution.h"

#include <cmath>
#include <numeric>

#include "iha/error.h"

namespace iha {

std::string ToString(const CondKey &key) {
  std::string out = ToString(key.unit);
  out += "/";
  out += ToString(key.stress);
  out += "|";
  for (std::size_t i = 0; i < key.context.size(); ++i) {
    if (i) out += ",";
    out += key.context[i] ? ToAscii(*key.context[i]) : "null";
  }
  return out;
}

Direction DirectionOf(const CondKey &key) {
  if (key.context.size() == 1 && !key.context[0]) return Direction::kRoot;
  switch (key.unit) {
    case Unit::kOnset:
      return key.stress == StressClass::kStressed ||
                     key.stress == StressClass::kMiddlingRtoL
                 ? Direction::kOutward
                 : Direction::kInward;
    case Unit::kRhyme:
      return key.stress == StressClass::kStressed ||
                     key.stress == StressClass::kMiddlingLtoR
                 ? Direction::kOutward
                 : Direction::kInward;
    case Unit::kNucleus:
      return key.stress == StressClass::kStressed ? Direction::kRoot
                                                  : Direction::kInward;
  }
  return Direction::kRoot;
}

std::optional<std::size_t> FollowingContext(const CondKey &key) {
  const Direction dir = DirectionOf(key);
  if (dir == Direction::kRoot) return std::nullopt;
  switch (key.unit) {
    case Unit::kOnset:
      // outward onsets condition phone j on j + 1
      if (dir == Direction::kOutward) return 0;
      return std::nullopt;
    case Unit::kRhyme:
      if (dir == Direction::kInward) return 0;
      return std::nullopt;
    case Unit::kNucleus:
      if (key.stress == StressClass::kUnstressed) return 1;
      if (key.stress == StressClass::kMiddlingRtoL) return 0;
      return std::nullopt;
  }
  return std::nullopt;
}

void CheckKeyShape(const CondKey &key) {
  const std::size_t want =
      key.unit == Unit::kNucleus && key.stress == StressClass::kUnstressed ? 2 : 1;
  if (key.context.size() != want)
    throw Error(Errc::kMalformedDocument,
                "key " + ToString(key) + " needs " + std::to_string(want) + " context entries");
  if (want == 2 && (!key.context[0] || !key.context[1]))
    throw Error(Errc::kMalformedDocument, "key " + ToString(key) + " has a null context");
}

double CategoricalDist::Sum() const {
  return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

bool CategoricalDist::IsNormalized(double tolerance) const {
  if (probs_.empty()) return false;
  for (double p : probs_)
    if (!(p >= 0) || !std::isfinite(p)) return false;
  return std::abs(Sum() - 1.0) <= tolerance;
}

void CategoricalDist::Normalize() {
  const double total = Sum();
  for (double &p : probs_) p /= total;
}

bool IsAdmissible(const Alphabet &alphabet, const StepTable &steps,
                  const CondKey &key, Outcome outcome) {
  if (outcome == kNullOutcome) return true;
  const std::size_t target = outcome - 1;
  const Direction dir = DirectionOf(key);
  if (dir == Direction::kRoot) return true;
  for (const auto &ctx : key.context) {
    if (!ctx) continue;
    auto idx = alphabet.IndexOf(*ctx);
    if (!idx) return false;
    bool ok = dir == Direction::kOutward ? steps.Step(*idx, target)
                                         : steps.Step(target, *idx);
    if (!ok) return false;
  }
  return true;
}

CategoricalDist GenericDistribution(const Alphabet &alphabet, const StepTable &steps,
                                    const CondKey &key, double epsilon) {
  const std::size_t n = alphabet.size() + 1;
  std::vector<bool> admissible(n);
  std::size_t count = 0;
  for (Outcome o = 0; o < n; ++o) {
    admissible[o] = IsAdmissible(alphabet, steps, key, o);
    count += admissible[o];
  }
  const std::size_t excluded = n - count;
  std::vector<double> probs(n);
  const double in = excluded == 0 ? 1.0 / count : (1.0 - epsilon) / count;
  const double out = excluded == 0 ? 0.0 : epsilon / excluded;
  for (Outcome o = 0; o < n; ++o) probs[o] = admissible[o] ? in : out;
  return CategoricalDist(std::move(probs));
}

double TotalVariation(const CategoricalDist &a, const CategoricalDist &b) {
  double total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a.prob(i) - b.prob(i));
  return 0.5 * total;
}

}  // namespace iha

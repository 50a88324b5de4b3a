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
// Language models over phone strings: stored conditional tables keyed by
// (unit, stress class, context), a generic fallback for unseen keys, and
// uniform prosodic limits.

#ifndef IHA_MODEL_H_
#define IHA_MODEL_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iha/alphabet.h"
#include "iha/distribution.h"
#include "iha/rng.h"
#include "iha/sonority.h"
#include "iha/syllabifier.h"
#include "iha/variation.h"

namespace iha {

struct IntRange {
  int lo = 0;
  int hi = 0;
  int width() const { return hi - lo + 1; }
  bool Contains(int v) const { return v >= lo && v <= hi; }
  bool operator==(const IntRange &) const = default;
};

// Prosodic values are uniform within these limits and impossible outside.
struct ProsodicLimits {
  IntRange R, T, D, L;
  std::array<bool, 2> N = {true, true};
  std::array<bool, 2> V = {true, true};

  static ProsodicLimits Full(const QuantizationConfig &cfg);
  void Validate() const;
  bool Contains(const ProsodicVector &p) const;
  // Log of the uniform density; -infinity outside the limits.
  double LogDensity(const ProsodicVector &p) const;
  bool operator==(const ProsodicLimits &) const = default;
};

struct AppliedTransform {
  TransformSpec spec;
  Regime regime;
  bool operator==(const AppliedTransform &) const = default;
};

class LanguageModel {
 public:
  LanguageModel(std::shared_ptr<const Alphabet> alphabet, double epsilon, double alpha,
                ProsodicLimits limits, QuantizationConfig quantization = {},
                StressWeights weights = {});

  const Alphabet &alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet> &alphabet_ptr() const { return alphabet_; }
  const StepTable &steps() const { return *steps_; }
  const std::string &alphabet_version() const { return alphabet_->version(); }
  double epsilon() const { return epsilon_; }
  double alpha() const { return alpha_; }
  const ProsodicLimits &limits() const { return limits_; }
  const QuantizationConfig &quantization() const { return quantization_; }
  const StressWeights &stress_weights() const { return weights_; }
  std::size_t outcome_count() const { return alphabet_->size() + 1; }

  const std::map<CondKey, CategoricalDist> &tables() const { return tables_; }
  // Validates shape, size and normalization.
  void SetTable(const CondKey &key, CategoricalDist dist);
  const CategoricalDist *Stored(const CondKey &key) const;

  // Stored table, else the fallback.
  CategoricalDist Distribution(const CondKey &key) const;
  // Generic construction followed by the fallback transform chain.
  CategoricalDist Fallback(const CondKey &key) const;

  const std::vector<AppliedTransform> &fallback_transforms() const {
    return fallback_transforms_;
  }
  void AddFallbackTransform(const AppliedTransform &t) { fallback_transforms_.push_back(t); }

  Outcome OutcomeOf(const std::optional<Marker> &m) const;
  std::optional<Marker> MarkerOf(Outcome o) const;

  // Key of a plan factor over a collapsed string.
  CondKey KeyFor(const Factor &f, const PhoneString &s) const;

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::shared_ptr<const StepTable> steps_;
  double epsilon_;
  double alpha_;
  ProsodicLimits limits_;
  QuantizationConfig quantization_;
  StressWeights weights_;
  std::map<CondKey, CategoricalDist> tables_;
  std::vector<AppliedTransform> fallback_transforms_;
};

// Empty tables: every key uses the generic construction. 0 <= epsilon < 1.
LanguageModel GenericModel(std::shared_ptr<const Alphabet> alphabet, double epsilon,
                           const ProsodicLimits &limits);

// Log probability: sum of log conditionals over the dependency plan plus the
// log prosodic density of every phone of the collapsed string.
double Score(const LanguageModel &model, const PhoneString &s);

// ---------------------------------------------------------------------------
// Training.

struct RawString {
  std::size_t line = 0;  // line of the first phone in the source
  std::vector<Phone> phones;
  std::vector<std::size_t> phone_lines;  // optional, one per phone
};

// "kind at phone i (line n) (detail); ..." for diagnostics.
std::string DescribeViolations(const RawString &raw, const std::vector<Violation> &v);

// Fills the next string and returns true, or returns false at end of input.
using CorpusSource = std::function<bool(RawString &)>;

enum class LimitsPolicy { kObserved, kFixed };

struct TrainOptions {
  double alpha = 0.01;
  double epsilon = 0.05;
  StressWeights weights;
  QuantizationConfig quantization;
  LimitsPolicy limits_policy = LimitsPolicy::kObserved;
  // Used with kFixed; defaults to the full quantization range.
  std::optional<ProsodicLimits> fixed_limits;
  bool skip_invalid = false;
};

struct TrainReport {
  std::size_t used = 0;
  std::size_t skipped = 0;
  std::vector<std::string> diagnostics;
};

// Add-alpha relative frequencies over (cells + null) for every observed key.
// Throws kEmptyCorpus, or kInvalidString (with the line number) unless
// skip_invalid is set.
LanguageModel Train(std::shared_ptr<const Alphabet> alphabet, const CorpusSource &corpus,
                    const TrainOptions &options, TrainReport *report = nullptr);
LanguageModel Train(std::shared_ptr<const Alphabet> alphabet,
                    std::span<const PhoneString> corpus, const TrainOptions &options);

// ---------------------------------------------------------------------------
// Sampling.

struct SampleOptions {
  int max_syllables = 3;
  // Interior phones drawn on an inward chain, uniform on [0, max].
  int max_inward_phones = 2;
  // Outward chains longer than this are rejected.
  int max_chain = 8;
  int max_attempts = 1000;
  int prosody_attempts = 1024;
};

// Draws a syllable count and a stress pattern, realizes phones along the
// dependency directions (stressed nuclei first, outward chains end at a
// closure), draws prosody uniformly within limits, and accepts the string
// only if it re-parses to the same syllables and stress classes.
// Throws kRetryBudgetExhausted.
PhoneString Sample(const LanguageModel &model, Rng &rng, const SampleOptions &options);
PhoneString Sample(const LanguageModel &model, int max_syllables, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Serialization: a JSON document with canonical key order and probabilities
// as shortest round-trip decimal strings.

inline constexpr std::string_view kModelFormat = "iha-model/1";

std::string SerializeModel(const LanguageModel &model);
void SaveModel(const LanguageModel &model, std::ostream &out);
void SaveModelFile(const LanguageModel &model, const std::filesystem::path &path);
// Throws kVersionMismatch, kMalformedDocument or kNotNormalized.
LanguageModel LoadModel(std::istream &in, std::shared_ptr<const Alphabet> alphabet);
LanguageModel LoadModelFile(const std::filesystem::path &path,
                            std::shared_ptr<const Alphabet> alphabet);

std::string FormatDouble(double v);
double ParseDouble(std::string_view s);

}  // namespace iha

#endif  // IHA_MODEL_H_

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

#include <algorithm>
#include <vector>

#include "iha/syllabifier.h"
#include "test_util.h"

namespace iha {
namespace {

using testing::M;
using testing::Main;
using testing::Phones;
using testing::Valid;
using SC = StressClass;

bool Has(const ValidationResult &v, ViolationKind k) {
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [k](const Violation &x) { return x.kind == k; });
}

TEST(Validate, MinimalString) {
  const auto v = ValidateString(*Main(), Phones({"ɸₒ", "i", "ɸₒ"}));
  EXPECT_TRUE(v.ok());
  EXPECT_TRUE(v.violations.empty());
}

TEST(Validate, Violations) {
  const Alphabet &a = *Main();
  auto v = ValidateString(a, Phones({"i", "ɸₒ", "ɸₒ"}));
  ASSERT_FALSE(v.ok());
  EXPECT_TRUE(Has(v, ViolationKind::kMissingBoundaryClosure));
  EXPECT_EQ(v.violations.front().position, 0u);

  v = ValidateString(a, Phones({"ɸₒ", "θₒ", "aₒ", "i", "ɸₒ"}));
  EXPECT_TRUE(Has(v, ViolationKind::kClosureRunTooLong));

  v = ValidateString(a, Phones({"ɸₒ", "θₒ"}));
  EXPECT_TRUE(Has(v, ViolationKind::kTooShort));

  v = ValidateString(a, Phones({"ɸₒ", "θₒ", "ɸₒ"}));
  EXPECT_TRUE(Has(v, ViolationKind::kAllClosures));

  auto timed = Phones({"ɸₒ", "i", "ɸₒ"});
  timed[0].t0 = 0.0;
  timed[1].t0 = 0.1;
  timed[2].t0 = 0.1;
  v = ValidateString(a, timed);
  EXPECT_TRUE(Has(v, ViolationKind::kTimeNotStrictlyIncreasing));

  auto with_null = Phones({"ɸₒ", "i", "ɸₒ"});
  with_null.insert(with_null.begin() + 1, Phone::Null());
  v = ValidateString(a, with_null);
  EXPECT_TRUE(Has(v, ViolationKind::kInvalidMarker));

  auto off_table = Phones({"ɸₒ", "i", "ɸₒ"});
  off_table[1].marker->place = Place::kVelar;
  v = ValidateString(a, off_table);
  EXPECT_TRUE(Has(v, ViolationKind::kInvalidMarker));
}

TEST(Validate, TwoClosuresAllowed) {
  EXPECT_TRUE(ValidateString(*Main(), Phones({"ɸₒ", "θₒ", "i", "aₒ", "ɸₒ"})).ok());
}

TEST(Collapse, MergesRepeats) {
  const QuantizationConfig q;
  const PhoneString c = CollapseRepeats(Valid({"ɸₒ", "i", "i", "ɸₒ"}), q);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.marker(1), M("i"));
  EXPECT_EQ(c[1].prosody.D, 4);
}

TEST(Collapse, ProsodyRules) {
  const QuantizationConfig q;
  auto p = Phones({"ɸₒ", "i", "i", "i", "ɸₒ"});
  p[1].prosody = {.R = 1, .N = 1, .V = 0, .T = 3, .D = 0, .L = 2};
  p[2].prosody = {.R = 2, .N = 0, .V = 1, .T = 9, .D = 0, .L = 7};
  p[3].prosody = {.R = -1, .N = 0, .V = 1, .T = 0, .D = 0, .L = 1};
  p[1].t0 = 0.1;
  p[2].t0 = 0.2;
  p[3].t0 = 0.3;
  const PhoneString c = CollapseRepeats(Valid(p), q);
  ASSERT_EQ(c.size(), 3u);
  const ProsodicVector &m = c[1].prosody;
  EXPECT_EQ(m.R, 2);
  EXPECT_EQ(m.N, 0);
  EXPECT_EQ(m.V, 1);
  EXPECT_EQ(m.T, 3);
  EXPECT_EQ(m.D, Quantize(0.3, ProsodicDimension::kD, q));
  EXPECT_EQ(m.L, 7);
  EXPECT_EQ(c[1].t0, 0.1);
}

TEST(Collapse, Idempotent) {
  const QuantizationConfig q;
  const PhoneString s = Valid({"ɸₒ", "p", "i", "n", "θₒ"});
  EXPECT_EQ(CollapseRepeats(s, q), s);
  const PhoneString once = CollapseRepeats(Valid({"ɸₒ", "p", "p", "i", "i", "i", "ɸₒ"}), q);
  EXPECT_EQ(CollapseRepeats(once, q), once);
}

TEST(Parse, Pin) {
  const SyllableParse p = ParseSyllables(Valid({"ɸₒ", "p", "i", "n", "θₒ"}));
  ASSERT_EQ(p.syllables.size(), 1u);
  const Syllable &s = p.syllables[0];
  EXPECT_EQ(s.start, 0u);
  EXPECT_EQ(s.nucleus, 2u);
  EXPECT_EQ(s.end, 4u);
  EXPECT_EQ(p.blocks.size(), 5u);
  EXPECT_EQ(p.minima, (std::vector<std::size_t>{0, 4}));
}

TEST(Parse, BareVowel) {
  const SyllableParse p = ParseSyllables(Valid({"ɸₒ", "a", "ɸₒ"}));
  ASSERT_EQ(p.syllables.size(), 1u);
  EXPECT_EQ(p.syllables[0].nucleus, 1u);
}

TEST(Parse, PinballSharesMinimum) {
  const SyllableParse p = ParseSyllables(Valid({"ɸₒ", "p", "i", "n", "p", "o", "l", "ɸₒ"}));
  ASSERT_EQ(p.syllables.size(), 2u);
  EXPECT_EQ(p.syllables[0].nucleus, 2u);
  EXPECT_EQ(p.syllables[1].nucleus, 5u);
  EXPECT_EQ(p.syllables[0].end, 4u);
  EXPECT_EQ(p.syllables[1].start, 4u);
  EXPECT_EQ(p.syllables[0].end_block, p.syllables[1].start_block);
}

TEST(Parse, EquivalentNeighborsShareBlock) {
  // velar and PAL plosives are incomparable in place, so one block
  const PhoneString s = Valid({"ɸₒ", "kⁱ", "p", "i", "ɸₒ"});
  const auto blocks = BuildBlocks(s);
  ASSERT_EQ(blocks.size(), 4u);
  EXPECT_EQ(blocks[1].first, 1u);
  EXPECT_EQ(blocks[1].last, 2u);
  EXPECT_EQ(blocks[1].representative, M("kⁱ"));
}

TEST(Parse, AdjacentClosuresShareBlock) {
  const SyllableParse p = ParseSyllables(Valid({"ɸₒ", "i", "θₒ", "aₒ", "o", "ɸₒ"}));
  ASSERT_EQ(p.syllables.size(), 2u);
  EXPECT_EQ(p.syllables[0].end, 3u);
  EXPECT_EQ(p.syllables[1].start, 3u);
}

TEST(Stress, SingleVowel) {
  const StressWeights w{.duration = 0.5, .loudness = 2, .tone = 3, .count = 1.75};
  const QuantizationConfig q;
  const PhoneString s = Valid({"ɸₒ", "i", "ɸₒ"});
  const SyllableParse p = ParseSyllables(s);
  EXPECT_DOUBLE_EQ(StressScore(p.syllables[0], p, s, w, q), 1.75);
}

TEST(Stress, DoublingDurations) {
  const StressWeights w{.duration = 1.5};
  const QuantizationConfig q;
  auto phones = Phones({"ɸₒ", "p", "i", "n", "θₒ"});
  for (auto &ph : phones) ph.prosody.D = 2;
  const PhoneString s = Valid(phones);
  for (auto &ph : phones) ph.prosody.D += q.units_per_octave_d;
  const PhoneString s2 = Valid(phones);
  const SyllableParse p = ParseSyllables(s);
  EXPECT_DOUBLE_EQ(StressScore(p.syllables[0], p, s2, w, q) - StressScore(p.syllables[0], p, s, w, q),
                   1.5 * q.units_per_octave_d);
}

TEST(Stress, ScoreTerms) {
  const StressWeights w{.duration = 0, .loudness = 1, .tone = 10, .count = 100};
  const QuantizationConfig q;
  auto phones = Phones({"ɸₒ", "p", "i", "n", "θₒ"});
  phones[1].prosody.L = 5;
  phones[3].prosody.L = 3;
  phones[2].prosody.T = 4;
  phones[0].prosody.L = 50;  // minimum phones are not constituents
  const PhoneString s = Valid(phones);
  const SyllableParse p = ParseSyllables(s);
  EXPECT_DOUBLE_EQ(StressScore(p.syllables[0], p, s, w, q), 5 + 40 + 300);
  EXPECT_EQ(ConstituentPhones(p.syllables[0], p, s).size(), 3u);
}

TEST(Stress, IdenticalSyllablesEqual) {
  const StressWeights w;
  const QuantizationConfig q;
  const PhoneString s = Valid({"ɸₒ", "i", "θₒ", "i", "ɸₒ"});
  const SyllableParse p = ParseSyllables(s);
  ASSERT_EQ(p.syllables.size(), 2u);
  EXPECT_EQ(StressScore(p.syllables[0], p, s, w, q), StressScore(p.syllables[1], p, s, w, q));
}

TEST(Stress, WeightsValidation) {
  EXPECT_THROW((StressWeights{0, 0, 0, 0}.Validate()), std::exception);
  EXPECT_THROW((StressWeights{-1, 1, 1, 1}.Validate()), std::exception);
  EXPECT_NO_THROW((StressWeights{0, 0, 0, 1}.Validate()));
}

TEST(Classify, Examples) {
  EXPECT_EQ(ClassifyStress(std::vector<double>{1.0}), (std::vector<SC>{SC::kStressed}));
  EXPECT_EQ(ClassifyStress(std::vector<double>{5, 2, 7}),
            (std::vector<SC>{SC::kStressed, SC::kUnstressed, SC::kStressed}));
  EXPECT_EQ(ClassifyStress(std::vector<double>{2, 5, 3}),
            (std::vector<SC>{SC::kUnstressed, SC::kStressed, SC::kMiddlingLtoR}));
}

TEST(Classify, Middling) {
  EXPECT_EQ(ClassifyStress(std::vector<double>{9, 5, 3, 1}),
            (std::vector<SC>{SC::kStressed, SC::kMiddlingLtoR, SC::kMiddlingLtoR, SC::kMiddlingLtoR}));
  EXPECT_EQ(ClassifyStress(std::vector<double>{1, 3, 5, 9}),
            (std::vector<SC>{SC::kUnstressed, SC::kMiddlingRtoL, SC::kMiddlingRtoL, SC::kStressed}));
}

TEST(Classify, TiesRankEarlierHigher) {
  EXPECT_EQ(ClassifyStress(std::vector<double>{3, 3}),
            (std::vector<SC>{SC::kStressed, SC::kMiddlingLtoR}));
  EXPECT_EQ(ClassifyStress(std::vector<double>{1, 3, 3, 1}),
            (std::vector<SC>{SC::kUnstressed, SC::kStressed, SC::kMiddlingLtoR, SC::kMiddlingLtoR}));
}

TEST(Classify, EmptyInput) { EXPECT_TRUE(ClassifyStress(std::vector<double>{}).empty()); }

const Factor *Targeting(const DependencyPlan &plan, std::size_t target) {
  for (const Factor &f : plan.factors)
    if (f.target == target) return &f;
  return nullptr;
}

TEST(Plan, StressedPin) {
  const PhoneString s = Valid({"ɸₒ", "p", "i", "n", "θₒ"});
  const SyllableParse p = ParseSyllables(s);
  const std::vector<SC> c{SC::kStressed};
  const DependencyPlan plan = BuildDependencyPlan(p, c);
  ASSERT_EQ(plan.factors.size(), 5u);
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> want{
      {0, {1}}, {1, {2}}, {2, {}}, {3, {2}}, {4, {3}}};
  for (const auto &[target, ctx] : want) {
    const Factor *f = Targeting(plan, target);
    ASSERT_NE(f, nullptr) << target;
    EXPECT_EQ(f->context, ctx) << target;
    EXPECT_EQ(f->stress, SC::kStressed);
  }
  EXPECT_EQ(Targeting(plan, 1)->unit, Unit::kOnset);
  EXPECT_EQ(Targeting(plan, 2)->unit, Unit::kNucleus);
  EXPECT_EQ(Targeting(plan, 3)->unit, Unit::kRhyme);
}

TEST(Plan, PinballNDependsOnI) {
  const Analysis a = Analyze(Valid({"ɸₒ", "p", "i", "n", "p", "o", "l", "ɸₒ"}), {}, {});
  ASSERT_EQ(a.classes.size(), 2u);
  const std::vector<SC> c{SC::kStressed, SC::kMiddlingLtoR};
  const DependencyPlan plan = BuildDependencyPlan(a.parse, c);
  const Factor *n = Targeting(plan, 3);
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->context, (std::vector<std::size_t>{2}));
  EXPECT_EQ(n->unit, Unit::kRhyme);
}

TEST(Plan, UnstressedInward) {
  const SyllableParse p = ParseSyllables(Valid({"ɸₒ", "a", "n", "p", "i", "ɸₒ"}));
  ASSERT_EQ(p.syllables.size(), 2u);
  const std::vector<SC> c{SC::kUnstressed, SC::kStressed};
  const DependencyPlan plan = BuildDependencyPlan(p, c);
  const Factor *n = Targeting(plan, 2);
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->context, (std::vector<std::size_t>{3}));
  EXPECT_EQ(n->stress, SC::kUnstressed);
  const Factor *a = Targeting(plan, 1);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->unit, Unit::kNucleus);
  EXPECT_EQ(a->context, (std::vector<std::size_t>{0, 2}));
  // the shared minimum p is targeted once, from the stressed side
  const Factor *shared = Targeting(plan, 3);
  ASSERT_NE(shared, nullptr);
  EXPECT_EQ(shared->syllable, 1u);
  EXPECT_EQ(shared->context, (std::vector<std::size_t>{4}));
}

TEST(Plan, BareNucleusSyllable) {
  const Analysis a = Analyze(Valid({"ɸₒ", "a", "ɸₒ"}), {}, {});
  ASSERT_EQ(a.plan.factors.size(), 3u);
  EXPECT_EQ(Targeting(a.plan, 1)->unit, Unit::kNucleus);
  EXPECT_TRUE(Targeting(a.plan, 1)->context.empty());
}

TEST(Plan, EveryPhoneTargetedOnce) {
  for (const auto &glyphs : std::vector<std::vector<const char *>>{
           {"ɸₒ", "p", "i", "n", "θₒ"},
           {"ɸₒ", "p", "i", "n", "p", "o", "l", "ɸₒ"},
           {"ɸₒ", "a", "n", "p", "i", "ɸₒ"},
           {"ɸₒ", "i", "θₒ", "aₒ", "o", "ɸₒ", "a", "θₒ"}}) {
    std::vector<Phone> phones;
    for (const char *g : glyphs) phones.push_back(Phone::Real(M(g)));
    const Analysis a = Analyze(Valid(phones), {}, {});
    std::vector<int> hits(a.collapsed.size(), 0);
    for (const Factor &f : a.plan.factors) ++hits[f.target];
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(Names, RoundTrip) {
  for (SC c : {SC::kStressed, SC::kUnstressed, SC::kMiddlingLtoR, SC::kMiddlingRtoL})
    EXPECT_EQ(ParseStressClass(ToString(c)), c);
  for (Unit u : {Unit::kOnset, Unit::kRhyme, Unit::kNucleus}) EXPECT_EQ(ParseUnit(ToString(u)), u);
  EXPECT_FALSE(ParseUnit("coda"));
}

}  // namespace
}  // namespace iha

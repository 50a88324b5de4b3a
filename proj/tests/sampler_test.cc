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

#include <cmath>
#include <map>
#include <vector>

#include "iha/error.h"
#include "iha/model.h"
#include "test_util.h"

namespace iha {
namespace {

using testing::Main;
using SC = StressClass;

ProsodicLimits PointLimits() {
  ProsodicLimits l;
  l.N = l.V = {true, false};
  return l;
}

std::shared_ptr<const Alphabet> Small() {
  static auto a = std::make_shared<const Alphabet>(
      Alphabet::LoadFile(std::string(IHA_TEST_DATA) + "/alphabet10.tsv"));
  return a;
}

// Single-syllable model over the small alphabet whose outward chains always
// fall in sonority, so every attempt is accepted.
LanguageModel Falling() {
  LanguageModel m = GenericModel(Small(), 0.05, PointLimits());
  const Alphabet &a = m.alphabet();
  auto set = [&](Unit u, const char *ctx, std::initializer_list<std::pair<const char *, double>> e) {
    std::vector<double> p(m.outcome_count(), 0.0);
    for (const auto &[g, x] : e) p[g ? m.OutcomeOf(a.Parse(g)) : kNullOutcome] = x;
    std::vector<std::optional<Marker>> c{ctx ? std::optional<Marker>(a.Parse(ctx)) : std::nullopt};
    m.SetTable({u, SC::kStressed, c}, CategoricalDist(p));
  };
  set(Unit::kNucleus, nullptr, {{nullptr, 0.1}, {"i", 0.45}, {"a", 0.27}, {"l", 0.18}});
  for (Unit u : {Unit::kOnset, Unit::kRhyme}) {
    set(u, "i", {{nullptr, 0.1}, {"p", 0.4}, {"n", 0.3}, {"ɸₒ", 0.2}});
    set(u, "a", {{"t", 0.5}, {"s", 0.3}, {"aₒ", 0.2}});
    set(u, "l", {{"p", 0.5}, {"ɸₒ", 0.5}});
    set(u, "n", {{nullptr, 0.2}, {"p", 0.5}, {"ɸₒ", 0.3}});
    set(u, "p", {{"ɸₒ", 0.6}, {"aₒ", 0.4}});
    set(u, "t", {{"ɸₒ", 1.0}});
    set(u, "s", {{"t", 0.5}, {"ɸₒ", 0.5}});
  }
  return m;
}

TEST(Sample, Deterministic) {
  const LanguageModel g = GenericModel(Main(), 0.05, PointLimits());
  for (std::uint64_t seed : {0u, 1u, 42u}) EXPECT_EQ(Sample(g, 3, seed), Sample(g, 3, seed));
  int differing = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) differing += !(Sample(g, 3, seed) == Sample(g, 3, seed + 100));
  EXPECT_GT(differing, 5);
  Rng a(9), b(9);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(Sample(g, a, {}), Sample(g, b, {}));
}

TEST(Sample, ZeroJoiningMassIsDiphthongal) {
  const LanguageModel g = GenericModel(Main(), 0.0, PointLimits());
  Rng rng(5);
  SampleOptions o;
  o.max_syllables = 3;
  for (int i = 0; i < 300; ++i) {
    const PhoneString s = Sample(g, rng, o);
    ASSERT_TRUE(std::isfinite(Score(g, s)));
    const Analysis a = Analyze(s, g.stress_weights(), g.quantization());
    ASSERT_EQ(a.collapsed, s);
    EXPECT_LE(a.parse.syllables.size(), 3u);
    for (const Syllable &syl : a.parse.syllables) {
      std::vector<Marker> onset, rhyme;
      for (std::size_t j = syl.start; j <= syl.nucleus; ++j) onset.push_back(s.marker(j));
      for (std::size_t j = syl.nucleus; j <= syl.end; ++j) rhyme.push_back(s.marker(j));
      EXPECT_TRUE(CheckDiphthongalSyllable(onset, rhyme));
    }
  }
}

TEST(Sample, ProsodyWithinLimits) {
  ProsodicLimits l;
  l.R = {-1, 1};
  l.T = {0, 3};
  l.D = {-2, 2};
  l.L = {0, 5};
  l.V = {false, true};
  const LanguageModel g = GenericModel(Main(), 0.05, l);
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const PhoneString s = Sample(g, rng, {});
    for (const Phone &p : s.phones()) EXPECT_TRUE(l.Contains(p.prosody));
    EXPECT_TRUE(std::isfinite(Score(g, s)));
  }
}

TEST(Sample, RealizedFrequenciesMatchTables) {
  const LanguageModel m = Falling();
  SampleOptions o;
  o.max_syllables = 1;
  Rng rng(12345);
  std::map<CondKey, std::vector<double>> counts;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const PhoneString s = Sample(m, rng, o);
    const Analysis a = Analyze(s, m.stress_weights(), m.quantization());
    for (const Factor &f : a.plan.factors) {
      if (f.target == 0 || f.target + 1 == s.size()) {
        if (f.context.empty()) continue;  // boundary root factors
      }
      auto &row = counts[m.KeyFor(f, a.collapsed)];
      row.resize(m.outcome_count());
      row[m.OutcomeOf(s.marker(f.target))] += 1;
    }
  }
  int checked = 0;
  for (const auto &[key, row] : counts) {
    const CategoricalDist *d = m.Stored(key);
    ASSERT_NE(d, nullptr) << ToString(key);
    double total = 0;
    for (double x : row) total += x;
    // null draws remove their slot, so the realized law excludes null
    const double keep = 1.0 - d->prob(kNullOutcome);
    for (Outcome o2 = 1; o2 < row.size(); ++o2) {
      const double p = d->prob(o2) / keep;
      if (p < 0.05) continue;
      EXPECT_NEAR(row[o2] / total, p, 0.01) << ToString(key) << " outcome " << o2;
      ++checked;
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Sample, RetryBudget) {
  LanguageModel m = Falling();
  std::vector<double> p(m.outcome_count(), 0.0);
  p[kNullOutcome] = 1.0;
  for (Unit u : {Unit::kOnset, Unit::kRhyme})
    for (const char *g : {"i", "a", "l"})
      m.SetTable({u, SC::kStressed, {m.alphabet().Parse(g)}}, CategoricalDist(p));
  SampleOptions o;
  o.max_syllables = 1;
  o.max_attempts = 5;
  Rng rng(1);
  try {
    Sample(m, rng, o);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kRetryBudgetExhausted);
  }
}

TEST(Sample, OptionValidation) {
  const LanguageModel g = GenericModel(Main(), 0.05, PointLimits());
  Rng rng(1);
  SampleOptions o;
  o.max_syllables = 0;
  EXPECT_THROW(Sample(g, rng, o), Error);
  o = {};
  o.max_attempts = 0;
  EXPECT_THROW(Sample(g, rng, o), Error);
}

}  // namespace
}  // namespace iha

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

#include <algorithm>

#include "iha/error.h"
#include "iha/model.h"

namespace iha {

namespace {

struct Draft {
  std::vector<std::optional<Marker>> boundary;  // K + 1
  std::vector<std::vector<Marker>> onset;       // interior, left to right
  std::vector<std::optional<Marker>> nucleus;
  std::vector<std::vector<Marker>> rhyme;
};

class Sampler {
 public:
  Sampler(const LanguageModel &model, Rng &rng, const SampleOptions &opt)
      : model_(model), rng_(rng), opt_(opt) {}

  std::optional<PhoneString> Attempt() {
    const int k = rng_.UniformInt(1, opt_.max_syllables);
    std::vector<double> latent(k);
    for (double &x : latent) x = rng_.Uniform();
    classes_ = ClassifyStress(latent);
    d_ = Draft{};
    d_.boundary.assign(k + 1, std::nullopt);
    d_.onset.assign(k, {});
    d_.nucleus.assign(k, std::nullopt);
    d_.rhyme.assign(k, {});

    std::vector<std::size_t> order;
    for (int i = 0; i < k; ++i)
      if (classes_[i] == StressClass::kStressed) order.push_back(i);
    for (int i = 0; i < k; ++i)
      if (classes_[i] == StressClass::kMiddlingLtoR) order.push_back(i);
    for (int i = k; i-- > 0;)
      if (classes_[i] == StressClass::kMiddlingRtoL) order.push_back(i);
    for (int i = 0; i < k; ++i)
      if (classes_[i] == StressClass::kUnstressed) order.push_back(i);
    for (std::size_t i : order)
      if (!Realize(i)) return std::nullopt;
    return Finish();
  }

 private:
  bool OnsetOutward(StressClass c) const {
    return c == StressClass::kStressed || c == StressClass::kMiddlingRtoL;
  }
  bool RhymeOutward(StressClass c) const {
    return c == StressClass::kStressed || c == StressClass::kMiddlingLtoR;
  }

  // Sets *failed when nothing is drawable.
  std::optional<Marker> Draw(Unit unit, StressClass c,
                             std::vector<std::optional<Marker>> context, bool allow_null,
                             bool *failed) {
    CondKey key{unit, c, std::move(context)};
    CategoricalDist dist = model_.Distribution(key);
    std::vector<double> w(dist.probs().begin(), dist.probs().end());
    if (!allow_null) w[kNullOutcome] = 0;
    double total = 0;
    for (double x : w) total += x;
    if (!(total > 0)) {
      *failed = true;
      return std::nullopt;
    }
    return model_.MarkerOf(rng_.Categorical(w));
  }

  // Draws outward from `from` until a closure; returns the closure and
  // appends the interior phones in draw order.
  std::optional<Marker> Outward(Unit unit, StressClass c, Marker from,
                                std::vector<Marker> &interior) {
    Marker ctx = from;
    for (int draws = 0; draws < opt_.max_chain; ++draws) {
      bool failed = false;
      auto m = Draw(unit, c, {ctx}, true, &failed);
      if (failed) return std::nullopt;
      if (!m) continue;
      if (m->manner == Manner::kClosure) return m;
      interior.push_back(*m);
      ctx = *m;
    }
    return std::nullopt;
  }

  // Draws up to a random number of interior phones inward from `from`,
  // in draw order. Null draws delete their slot.
  bool Inward(Unit unit, StressClass c, Marker from, std::vector<Marker> &interior) {
    const int slots = rng_.UniformInt(0, opt_.max_inward_phones);
    Marker ctx = from;
    for (int j = 0; j < slots; ++j) {
      bool failed = false;
      auto m = Draw(unit, c, {ctx}, true, &failed);
      if (failed) return false;
      if (!m) continue;
      interior.push_back(*m);
      ctx = *m;
    }
    return true;
  }

  bool Root(Unit unit, StressClass c, std::optional<Marker> &slot) {
    bool failed = false;
    slot = Draw(unit, c, {std::nullopt}, false, &failed);
    return !failed;
  }

  Marker LastOnset(std::size_t i) const {
    return d_.onset[i].empty() ? *d_.boundary[i] : d_.onset[i].back();
  }
  Marker FirstRhyme(std::size_t i) const {
    return d_.rhyme[i].empty() ? *d_.boundary[i + 1] : d_.rhyme[i].front();
  }

  bool Realize(std::size_t i) {
    const StressClass c = classes_[i];
    const std::size_t k = classes_.size();
    bool failed = false;
    if (c == StressClass::kStressed) {
      if (!Root(Unit::kNucleus, c, d_.nucleus[i])) return false;
    }
    if (!OnsetOutward(c) && !d_.boundary[i]) {
      if (i != 0 || !Root(Unit::kOnset, c, d_.boundary[i])) return false;
    }
    if (!RhymeOutward(c) && !d_.boundary[i + 1]) {
      if (i + 1 != k || !Root(Unit::kRhyme, c, d_.boundary[i + 1])) return false;
    }
    if (!OnsetOutward(c)) {
      if (!Inward(Unit::kOnset, c, *d_.boundary[i], d_.onset[i])) return false;
    }
    if (!RhymeOutward(c)) {
      std::vector<Marker> rev;
      if (!Inward(Unit::kRhyme, c, *d_.boundary[i + 1], rev)) return false;
      d_.rhyme[i].assign(rev.rbegin(), rev.rend());
    }
    switch (c) {
      case StressClass::kStressed:
        break;
      case StressClass::kUnstressed:
        d_.nucleus[i] = Draw(Unit::kNucleus, c, {LastOnset(i), FirstRhyme(i)}, false, &failed);
        break;
      case StressClass::kMiddlingLtoR:
        d_.nucleus[i] = Draw(Unit::kNucleus, c, {LastOnset(i)}, false, &failed);
        break;
      case StressClass::kMiddlingRtoL:
        d_.nucleus[i] = Draw(Unit::kNucleus, c, {FirstRhyme(i)}, false, &failed);
        break;
    }
    if (failed) return false;
    if (OnsetOutward(c)) {
      std::vector<Marker> rev;
      auto b = Outward(Unit::kOnset, c, *d_.nucleus[i], rev);
      if (!b || d_.boundary[i]) return false;
      d_.boundary[i] = b;
      d_.onset[i].assign(rev.rbegin(), rev.rend());
    }
    if (RhymeOutward(c)) {
      auto b = Outward(Unit::kRhyme, c, *d_.nucleus[i], d_.rhyme[i]);
      if (!b || d_.boundary[i + 1]) return false;
      d_.boundary[i + 1] = b;
    }
    return true;
  }

  ProsodicVector DrawProsody() {
    const ProsodicLimits &l = model_.limits();
    auto pick = [this](const std::array<bool, 2> &a) {
      if (a[0] && a[1]) return rng_.UniformInt(0, 1);
      return a[1] ? 1 : 0;
    };
    ProsodicVector p;
    p.R = rng_.UniformInt(l.R.lo, l.R.hi);
    p.N = pick(l.N);
    p.V = pick(l.V);
    p.T = rng_.UniformInt(l.T.lo, l.T.hi);
    p.D = rng_.UniformInt(l.D.lo, l.D.hi);
    p.L = rng_.UniformInt(l.L.lo, l.L.hi);
    return p;
  }

  std::optional<PhoneString> Finish() {
    const std::size_t k = classes_.size();
    std::vector<Marker> markers;
    std::vector<Syllable> want(k);
    for (std::size_t i = 0; i < k; ++i) {
      want[i].start = markers.size();
      markers.push_back(*d_.boundary[i]);
      markers.insert(markers.end(), d_.onset[i].begin(), d_.onset[i].end());
      want[i].nucleus = markers.size();
      markers.push_back(*d_.nucleus[i]);
      markers.insert(markers.end(), d_.rhyme[i].begin(), d_.rhyme[i].end());
      want[i].end = markers.size();
    }
    markers.push_back(*d_.boundary[k]);

    std::vector<Phone> phones;
    for (const Marker &m : markers) phones.push_back(Phone::Real(m));
    ValidationResult v = ValidateString(model_.alphabet(), phones);
    if (!v.ok()) return std::nullopt;
    const PhoneString collapsed = CollapseRepeats(*v.value, model_.quantization());
    if (collapsed.size() != markers.size()) return std::nullopt;
    const SyllableParse parse = ParseSyllables(collapsed);
    if (parse.syllables.size() != k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) {
      const Syllable &s = parse.syllables[i];
      if (s.start != want[i].start || s.nucleus != want[i].nucleus || s.end != want[i].end)
        return std::nullopt;
    }
    for (int t = 0; t < opt_.prosody_attempts; ++t) {
      for (Phone &p : phones) p.prosody = DrawProsody();
      ValidationResult pv = ValidateString(model_.alphabet(), phones);
      if (!pv.ok()) return std::nullopt;
      std::vector<double> scores;
      for (const Syllable &s : parse.syllables)
        scores.push_back(StressScore(s, parse, *pv.value, model_.stress_weights(),
                                     model_.quantization()));
      if (ClassifyStress(scores) == classes_) return std::move(pv.value);
    }
    return std::nullopt;
  }

  const LanguageModel &model_;
  Rng &rng_;
  const SampleOptions &opt_;
  std::vector<StressClass> classes_;
  Draft d_;
};

}  // namespace

PhoneString Sample(const LanguageModel &model, Rng &rng, const SampleOptions &options) {
  if (options.max_syllables < 1)
    throw Error(Errc::kOutOfRange, "max syllables must be at least 1");
  if (options.max_inward_phones < 0 || options.max_chain < 1 || options.max_attempts < 1 ||
      options.prosody_attempts < 1)
    throw Error(Errc::kOutOfRange, "sampling budgets must be positive");
  Sampler sampler(model, rng, options);
  for (int a = 0; a < options.max_attempts; ++a)
    if (auto s = sampler.Attempt()) return std::move(*s);
  throw Error(Errc::kRetryBudgetExhausted,
              "no valid string after " + std::to_string(options.max_attempts) + " attempts");
}

PhoneString Sample(const LanguageModel &model, int max_syllables, std::uint64_t seed) {
  Rng rng(seed);
  SampleOptions options;
  options.max_syllables = max_syllables;
  return Sample(model, rng, options);
}

}  // namespace iha

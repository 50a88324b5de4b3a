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

#include "iha/syllabifier.h"

#include <algorithm>

#include "iha/error.h"
#include "iha/sonority.h"

namespace iha {
namespace {

bool IsClosure(const Phone &p) {
  return p.marker && p.marker->manner == Manner::kClosure;
}

Phone MergeRun(std::span<const Phone> run, const QuantizationConfig &cfg) {
  Phone out = run.front();
  if (run.size() == 1) return out;
  double seconds = 0;
  long long r_sum = 0;
  int n_on = 0, v_on = 0;
  out.t0.reset();
  for (const Phone &p : run) {
    seconds += LinearDuration(p.prosody.D, cfg);
    r_sum += p.prosody.R;
    out.prosody.L = std::max(out.prosody.L, p.prosody.L);
    n_on += p.prosody.N != 0;
    v_on += p.prosody.V != 0;
    if (!out.t0 && p.t0) out.t0 = p.t0;
  }
  const int n = static_cast<int>(run.size());
  auto majority = [n](int on, int first) {
    if (2 * on > n) return 1;
    if (2 * on < n) return 0;
    return first;
  };
  out.prosody.D = Quantize(seconds, ProsodicDimension::kD, cfg);
  out.prosody.R = static_cast<int>(
      std::clamp<long long>(r_sum, cfg.min_value, cfg.max_value));
  out.prosody.N = majority(n_on, run.front().prosody.N != 0);
  out.prosody.V = majority(v_on, run.front().prosody.V != 0);
  return out;
}

// True iff syllable i ranks above syllable j in stress.
bool Higher(std::span<const double> scores, std::size_t i, std::size_t j) {
  if (scores[i] != scores[j]) return scores[i] > scores[j];
  return i < j;
}

}  // namespace

const char *ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kTooShort: return "tooShort";
    case ViolationKind::kMissingBoundaryClosure: return "missingBoundaryClosure";
    case ViolationKind::kAllClosures: return "allClosures";
    case ViolationKind::kClosureRunTooLong: return "closureRunTooLong";
    case ViolationKind::kTimeNotStrictlyIncreasing: return "timeNotStrictlyIncreasing";
    case ViolationKind::kInvalidMarker: return "invalidMarker";
  }
  return "unknown";
}

ValidationResult ValidateString(const Alphabet &alphabet, std::vector<Phone> phones) {
  ValidationResult result;
  auto &v = result.violations;
  const std::size_t n = phones.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (phones[i].is_null()) {
      v.push_back({ViolationKind::kInvalidMarker, i, "null phone in a transcription"});
    } else if (!alphabet.Contains(*phones[i].marker)) {
      v.push_back({ViolationKind::kInvalidMarker, i,
                   "not an alphabet cell: " + ToAscii(*phones[i].marker)});
    }
  }
  if (n < 3)
    v.push_back({ViolationKind::kTooShort, 0,
                 "string has " + std::to_string(n) + " phones, needs at least 3"});
  if (n > 0 && !phones.front().is_null() && !IsClosure(phones.front()))
    v.push_back({ViolationKind::kMissingBoundaryClosure, 0, "string must start with a closure"});
  if (n > 1 && !phones.back().is_null() && !IsClosure(phones.back()))
    v.push_back({ViolationKind::kMissingBoundaryClosure, n - 1, "string must end with a closure"});
  if (n > 0 && std::all_of(phones.begin(), phones.end(), IsClosure))
    v.push_back({ViolationKind::kAllClosures, 0, "string has no non-closure phone"});
  std::size_t run = 0;
  for (std::size_t i = 0; i < n; ++i) {
    run = IsClosure(phones[i]) ? run + 1 : 0;
    if (run == 3)
      v.push_back({ViolationKind::kClosureRunTooLong, i,
                   "more than 2 consecutive closures"});
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (phones[i - 1].t0 && phones[i].t0 && !(*phones[i].t0 > *phones[i - 1].t0))
      v.push_back({ViolationKind::kTimeNotStrictlyIncreasing, i,
                   "onset time does not increase"});
  }
  if (v.empty()) result.value = PhoneString(std::move(phones));
  return result;
}

PhoneString CollapseRepeats(const PhoneString &s, const QuantizationConfig &cfg) {
  std::vector<Phone> out;
  const auto &phones = s.phones();
  for (std::size_t i = 0; i < phones.size();) {
    std::size_t j = i + 1;
    while (j < phones.size() && phones[j].marker == phones[i].marker) ++j;
    out.push_back(MergeRun(std::span(phones).subspan(i, j - i), cfg));
    i = j;
  }
  return PhoneString(std::move(out));
}

std::vector<Block> BuildBlocks(const PhoneString &s) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool joins = false;
    if (i > 0) {
      const Marker &prev = s.marker(i - 1);
      const Marker &cur = s.marker(i);
      joins = CompareSonority(prev, cur) == SonorityRelation::kEquivalent ||
              (prev.manner == Manner::kClosure && cur.manner == Manner::kClosure);
    }
    if (joins)
      blocks.back().last = i;
    else
      blocks.push_back({i, i, s.marker(i)});
  }
  return blocks;
}

SyllableParse ParseSyllables(const PhoneString &s) {
  SyllableParse parse;
  parse.blocks = BuildBlocks(s);
  const auto &blocks = parse.blocks;
  const std::size_t nb = blocks.size();
  for (std::size_t i = 0; i + 1 < nb; ++i)
    parse.block_steps.push_back(
        CompareSonority(s.marker(blocks[i].last), s.marker(blocks[i + 1].first)));
  const auto &steps = parse.block_steps;
  for (std::size_t i = 0; i < nb; ++i) {
    bool left = i == 0 || steps[i - 1] == SonorityRelation::kGreater;
    bool right = i + 1 == nb || steps[i] == SonorityRelation::kLess;
    if (left && right) parse.minima.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < parse.minima.size(); ++k) {
    Syllable syl;
    syl.start_block = parse.minima[k];
    syl.end_block = parse.minima[k + 1];
    syl.nucleus_block = syl.start_block;
    while (syl.nucleus_block < syl.end_block &&
           steps[syl.nucleus_block] == SonorityRelation::kLess)
      ++syl.nucleus_block;
    syl.start = k == 0 ? 0 : blocks[syl.start_block].last;
    syl.nucleus = blocks[syl.nucleus_block].first;
    syl.end = blocks[syl.end_block].last;
    parse.syllables.push_back(syl);
  }
  return parse;
}

const char *ToString(StressClass c) {
  switch (c) {
    case StressClass::kStressed: return "stressed";
    case StressClass::kUnstressed: return "unstressed";
    case StressClass::kMiddlingLtoR: return "middlingLtoR";
    case StressClass::kMiddlingRtoL: return "middlingRtoL";
  }
  return "unknown";
}

std::optional<StressClass> ParseStressClass(std::string_view s) {
  for (int i = 0; i < kNumStressClasses; ++i) {
    auto c = static_cast<StressClass>(i);
    if (s == ToString(c)) return c;
  }
  return std::nullopt;
}

void StressWeights::Validate() const {
  if (duration < 0 || loudness < 0 || tone < 0 || count < 0)
    throw Error(Errc::kOutOfRange, "stress weights must be nonnegative");
  if (duration == 0 && loudness == 0 && tone == 0 && count == 0)
    throw Error(Errc::kOutOfRange, "stress weights must not all be zero");
}

std::span<const Phone> ConstituentPhones(const Syllable &syl, const SyllableParse &parse,
                                         const PhoneString &s) {
  std::size_t first = parse.blocks[syl.start_block + 1].first;
  std::size_t last = parse.blocks[syl.end_block - 1].last;
  return std::span(s.phones()).subspan(first, last - first + 1);
}

double StressScore(const Syllable &syl, const SyllableParse &parse,
                   const PhoneString &s, const StressWeights &w,
                   const QuantizationConfig &cfg) {
  auto phones = ConstituentPhones(syl, parse, s);
  double seconds = 0;
  int loud = phones.front().prosody.L;
  for (const Phone &p : phones) {
    seconds += LinearDuration(p.prosody.D, cfg);
    loud = std::max(loud, p.prosody.L);
  }
  return w.duration * Quantize(seconds, ProsodicDimension::kD, cfg) +
         w.loudness * loud + w.tone * s[syl.nucleus].prosody.T +
         w.count * static_cast<double>(phones.size());
}

std::vector<StressClass> ClassifyStress(std::span<const double> scores) {
  const std::size_t k = scores.size();
  std::vector<StressClass> out(k);
  if (k == 0) return out;
  if (k == 1) {
    out[0] = StressClass::kStressed;
    return out;
  }
  out[0] = Higher(scores, 0, 1) ? StressClass::kStressed : StressClass::kUnstressed;
  out[k - 1] = Higher(scores, k - 1, k - 2) ? StressClass::kStressed
                                            : StressClass::kMiddlingLtoR;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    bool above_left = Higher(scores, i, i - 1);
    bool above_right = Higher(scores, i, i + 1);
    if (above_left && above_right)
      out[i] = StressClass::kStressed;
    else if (!above_left && !above_right)
      out[i] = StressClass::kUnstressed;
    else if (above_right)
      out[i] = StressClass::kMiddlingLtoR;
    else
      out[i] = StressClass::kMiddlingRtoL;
  }
  return out;
}

const char *ToString(Unit u) {
  switch (u) {
    case Unit::kOnset: return "onset";
    case Unit::kRhyme: return "rhyme";
    case Unit::kNucleus: return "nucleus";
  }
  return "unknown";
}

std::optional<Unit> ParseUnit(std::string_view s) {
  for (Unit u : {Unit::kOnset, Unit::kRhyme, Unit::kNucleus})
    if (s == ToString(u)) return u;
  return std::nullopt;
}

DependencyPlan BuildDependencyPlan(const SyllableParse &parse,
                                   std::span<const StressClass> classes) {
  DependencyPlan plan;
  auto &f = plan.factors;
  for (std::size_t i = 0; i < parse.syllables.size(); ++i) {
    const Syllable &syl = parse.syllables[i];
    const std::size_t s = syl.start, m = syl.nucleus, e = syl.end;
    const StressClass c = classes[i];
    auto onset_out = [&] {
      for (std::size_t j = m; j-- > s;) f.push_back({j, {j + 1}, Unit::kOnset, c, i});
    };
    auto onset_in = [&] {
      for (std::size_t j = s + 1; j < m; ++j) f.push_back({j, {j - 1}, Unit::kOnset, c, i});
    };
    auto rhyme_out = [&] {
      for (std::size_t k = m + 1; k <= e; ++k) f.push_back({k, {k - 1}, Unit::kRhyme, c, i});
    };
    auto rhyme_in = [&] {
      for (std::size_t k = e - 1; k > m; --k) f.push_back({k, {k + 1}, Unit::kRhyme, c, i});
    };
    switch (c) {
      case StressClass::kStressed:
        f.push_back({m, {}, Unit::kNucleus, c, i});
        onset_out();
        rhyme_out();
        break;
      case StressClass::kUnstressed:
        onset_in();
        rhyme_in();
        f.push_back({m, {m - 1, m + 1}, Unit::kNucleus, c, i});
        break;
      case StressClass::kMiddlingLtoR:
        onset_in();
        f.push_back({m, {m - 1}, Unit::kNucleus, c, i});
        rhyme_out();
        break;
      case StressClass::kMiddlingRtoL:
        rhyme_in();
        f.push_back({m, {m + 1}, Unit::kNucleus, c, i});
        onset_out();
        break;
    }
  }
  if (parse.syllables.empty()) return plan;
  const std::size_t last = parse.blocks.back().last;
  auto targeted = [&f](std::size_t pos) {
    return std::any_of(f.begin(), f.end(),
                       [pos](const Factor &x) { return x.target == pos; });
  };
  if (!targeted(0))
    f.insert(f.begin(), Factor{0, {}, Unit::kOnset, classes.front(), 0});
  if (!targeted(last))
    f.push_back({last, {}, Unit::kRhyme, classes.back(), parse.syllables.size() - 1});
  return plan;
}

Analysis Analyze(const PhoneString &s, const StressWeights &w,
                 const QuantizationConfig &cfg) {
  Analysis a{CollapseRepeats(s, cfg), {}, {}, {}, {}};
  a.parse = ParseSyllables(a.collapsed);
  for (const Syllable &syl : a.parse.syllables)
    a.scores.push_back(StressScore(syl, a.parse, a.collapsed, w, cfg));
  a.classes = ClassifyStress(a.scores);
  a.plan = BuildDependencyPlan(a.parse, a.classes);
  return a;
}

}  // namespace iha

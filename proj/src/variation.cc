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

#include "iha/variation.h"

#include <algorithm>
#include <cmath>

#include "iha/error.h"
#include "iha/model.h"

namespace iha {

namespace {

constexpr double kClipMargin = 1e-12;

constexpr Marker kCentralClosePlosive{Manner::kPlosive, FrontBack::kCentral, OpenClose::kClose,
                                      Place::kPalatAlveoLabial};
constexpr Marker kCentralCloseApproximant{Manner::kApproximant, FrontBack::kCentral,
                                          OpenClose::kClose, Place::kPalatAlveoLabial};
constexpr Marker kBackClosePlosive{Manner::kPlosive, FrontBack::kBack, OpenClose::kClose,
                                   Place::kPalatAlveoLabial};
constexpr Marker kCentralCloseNasal{Manner::kNasal, FrontBack::kCentral, OpenClose::kClose,
                                    Place::kPalatAlveoLabial};
constexpr Marker kBackCloseNasal{Manner::kNasal, FrontBack::kBack, OpenClose::kClose,
                                 Place::kPalatAlveoLabial};

double Driver(const TransformSpec &spec, const Regime &r) {
  return spec.kind == TransformKind::kEpenthesis ? r.loud : r.rate;
}

double Gain(const TransformSpec &spec, const Regime &r) {
  return 1.0 + spec.lambda * (Driver(spec, r) - 1.0);
}

double MoveFraction(const TransformSpec &spec, const Regime &r) {
  const double f = spec.lambda * (r.rate - 1.0) / r.rate;
  return std::clamp(f, 0.0, 1.0);
}

void ClipAndNormalize(std::vector<double> &p) {
  const double cap = 1.0 - double(p.size() - 1) * kClipMargin;
  for (double &x : p) x = std::min(x, cap);
  double total = 0;
  for (double x : p) total += x;
  for (double &x : p) x /= total;
}

void Move(const Alphabet &a, std::vector<double> &p, const Marker &from, const Marker &to,
          double fraction) {
  auto i = a.IndexOf(from), j = a.IndexOf(to);
  if (!i || !j) return;
  const double moved = p[OutcomeOfCell(*i)] * fraction;
  p[OutcomeOfCell(*i)] -= moved;
  p[OutcomeOfCell(*j)] += moved;
}

int PlaceHeight(Place p) {
  switch (p) {
    case Place::kPalatAlveoLabial:
    case Place::kVelar: return 0;
    case Place::kUvular: return 1;
    case Place::kPharyngeal: return 2;
    case Place::kEpiglottal: return 3;
    case Place::kGlottal: return 4;
  }
  return 0;
}

int PlaceDistance(Place a, Place b) {
  const bool split = (a == Place::kPalatAlveoLabial && b == Place::kVelar) ||
                     (a == Place::kVelar && b == Place::kPalatAlveoLabial);
  if (split) return 2;  // joined at uvular
  return std::abs(PlaceHeight(a) - PlaceHeight(b));
}

}  // namespace

void Regime::Validate() const {
  for (double f : {rate, loud, pitch})
    if (!(f > 0) || !std::isfinite(f))
      throw Error(Errc::kNonPositiveValue, "regime factors must be positive");
}

const char *ToString(TransformKind kind) {
  switch (kind) {
    case TransformKind::kSyncope: return "syncope";
    case TransformKind::kEpenthesis: return "epenthesis";
    case TransformKind::kLenition: return "lenition";
    case TransformKind::kAssimilation: return "assimilation";
    case TransformKind::kStraightening: return "straightening";
  }
  return "unknown";
}

std::optional<TransformKind> ParseTransformKind(std::string_view s) {
  for (auto k : {TransformKind::kSyncope, TransformKind::kEpenthesis, TransformKind::kLenition,
                 TransformKind::kAssimilation, TransformKind::kStraightening})
    if (s == ToString(k)) return k;
  return std::nullopt;
}

void TransformSpec::Validate() const {
  if (!(lambda >= 0 && lambda <= 1))
    throw Error(Errc::kOutOfRange, "lambda must lie in [0, 1]");
}

bool IsIdentity(const TransformSpec &spec, const Regime &regime) {
  return spec.lambda == 0 || Driver(spec, regime) == 1.0 ||
         ((spec.kind == TransformKind::kLenition || spec.kind == TransformKind::kAssimilation) &&
          MoveFraction(spec, regime) == 0);
}

bool Triggers(const TransformSpec &spec, const CondKey &key) {
  switch (spec.kind) {
    case TransformKind::kSyncope:
      return key.stress == StressClass::kUnstressed;
    case TransformKind::kEpenthesis:
      return key.stress == StressClass::kStressed;
    case TransformKind::kLenition:
      if (key.unit == Unit::kNucleus || DirectionOf(key) == Direction::kRoot) return false;
      return std::any_of(key.context.begin(), key.context.end(), [](const auto &c) {
        return c && c->manner == Manner::kVowel;
      });
    case TransformKind::kAssimilation: {
      auto i = FollowingContext(key);
      return i && key.context[*i] == kBackClosePlosive;
    }
    case TransformKind::kStraightening:
      return true;
  }
  return false;
}

CategoricalDist TransformDistribution(const Alphabet &alphabet, const StepTable &steps,
                                      const CondKey &key, const CategoricalDist &dist,
                                      const Regime &regime, const TransformSpec &spec) {
  if (IsIdentity(spec, regime) || !Triggers(spec, key)) return dist;
  std::vector<double> p(dist.probs().begin(), dist.probs().end());
  switch (spec.kind) {
    case TransformKind::kSyncope:
      p[kNullOutcome] *= Gain(spec, regime);
      ClipAndNormalize(p);
      break;
    case TransformKind::kEpenthesis: {
      const double g = Gain(spec, regime);
      for (Outcome o = 0; o < p.size(); ++o)
        if (!IsAdmissible(alphabet, steps, key, o)) p[o] *= g;
      ClipAndNormalize(p);
      break;
    }
    case TransformKind::kLenition:
      Move(alphabet, p, kCentralClosePlosive, kCentralCloseApproximant,
           MoveFraction(spec, regime));
      break;
    case TransformKind::kAssimilation:
      Move(alphabet, p, kCentralCloseNasal, kBackCloseNasal, MoveFraction(spec, regime));
      break;
    case TransformKind::kStraightening: {
      const double k = Gain(spec, regime);
      for (Outcome o = 1; o < p.size(); ++o) {
        if (p[o] == 0) continue;
        const Marker &target = alphabet.marker(o - 1);
        int d = 0;
        for (const auto &c : key.context)
          if (c) d += OrdinalDistance(target, *c);
        p[o] = std::pow(p[o], k) * std::pow(1.0 + d, -(k - 1.0));
      }
      p[kNullOutcome] = std::pow(p[kNullOutcome], k);
      ClipAndNormalize(p);
      break;
    }
  }
  return CategoricalDist(std::move(p));
}

int OrdinalDistance(const Marker &a, const Marker &b) {
  return std::abs(int(a.manner) - int(b.manner)) +
         std::abs(int(a.front_back) - int(b.front_back)) +
         std::abs(int(a.open_close) - int(b.open_close)) + PlaceDistance(a.place, b.place);
}

LanguageModel Apply(const LanguageModel &model, const Regime &regime,
                    const TransformSpec &spec) {
  regime.Validate();
  spec.Validate();
  LanguageModel out = model;
  if (IsIdentity(spec, regime)) return out;
  for (const auto &[key, dist] : model.tables())
    if (Triggers(spec, key))
      out.SetTable(key, TransformDistribution(model.alphabet(), model.steps(), key, dist,
                                              regime, spec));
  out.AddFallbackTransform({spec, regime});
  return out;
}

std::vector<KeyDrift> DriftReport(const LanguageModel &base, const LanguageModel &varied) {
  if (base.alphabet_version() != varied.alphabet_version() ||
      base.outcome_count() != varied.outcome_count())
    throw Error(Errc::kVersionMismatch, "models use different alphabets");
  std::vector<CondKey> keys;
  for (const auto &[k, d] : base.tables()) keys.push_back(k);
  for (const auto &[k, d] : varied.tables())
    if (!base.Stored(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::vector<KeyDrift> out;
  for (const CondKey &k : keys)
    out.push_back({k, TotalVariation(base.Distribution(k), varied.Distribution(k))});
  std::stable_sort(out.begin(), out.end(), [](const KeyDrift &a, const KeyDrift &b) {
    return a.distance > b.distance;
  });
  return out;
}

}  // namespace iha

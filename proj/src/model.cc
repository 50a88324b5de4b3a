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

#include "iha/model.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iha/error.h"

namespace iha {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void CheckRange(const IntRange &r, const char *name) {
  if (r.lo > r.hi)
    throw Error(Errc::kOutOfRange, std::string("limits for ") + name + " have lo > hi");
}

int AllowedCount(const std::array<bool, 2> &a) { return int(a[0]) + int(a[1]); }

bool Allowed(const std::array<bool, 2> &a, int v) {
  return (v == 0 || v == 1) && a[v];
}

}  // namespace

ProsodicLimits ProsodicLimits::Full(const QuantizationConfig &cfg) {
  const IntRange full{cfg.min_value, cfg.max_value};
  ProsodicLimits l;
  l.R = l.T = l.D = l.L = full;
  return l;
}

void ProsodicLimits::Validate() const {
  CheckRange(R, "R");
  CheckRange(T, "T");
  CheckRange(D, "D");
  CheckRange(L, "L");
  if (AllowedCount(N) == 0) throw Error(Errc::kOutOfRange, "limits allow no N value");
  if (AllowedCount(V) == 0) throw Error(Errc::kOutOfRange, "limits allow no V value");
}

bool ProsodicLimits::Contains(const ProsodicVector &p) const {
  return R.Contains(p.R) && T.Contains(p.T) && D.Contains(p.D) && L.Contains(p.L) &&
         Allowed(N, p.N) && Allowed(V, p.V);
}

double ProsodicLimits::LogDensity(const ProsodicVector &p) const {
  if (!Contains(p)) return kNegInf;
  return -std::log(double(R.width())) - std::log(double(T.width())) -
         std::log(double(D.width())) - std::log(double(L.width())) -
         std::log(double(AllowedCount(N))) - std::log(double(AllowedCount(V)));
}

LanguageModel::LanguageModel(std::shared_ptr<const Alphabet> alphabet, double epsilon,
                             double alpha, ProsodicLimits limits,
                             QuantizationConfig quantization, StressWeights weights)
    : alphabet_(std::move(alphabet)),
      epsilon_(epsilon),
      alpha_(alpha),
      limits_(limits),
      quantization_(quantization),
      weights_(weights) {
  if (!alphabet_ || alphabet_->empty())
    throw Error(Errc::kOutOfRange, "model needs a nonempty alphabet");
  if (!(epsilon_ >= 0 && epsilon_ < 1))
    throw Error(Errc::kOutOfRange, "joining mass must lie in [0, 1)");
  if (!(alpha_ >= 0) || !std::isfinite(alpha_))
    throw Error(Errc::kOutOfRange, "smoothing must be nonnegative");
  limits_.Validate();
  quantization_.Validate();
  weights_.Validate();
  steps_ = std::make_shared<StepTable>(*alphabet_);
}

void LanguageModel::SetTable(const CondKey &key, CategoricalDist dist) {
  CheckKeyShape(key);
  for (const auto &c : key.context)
    if (c && !alphabet_->Contains(*c))
      throw Error(Errc::kInvalidMarker, "key " + ToString(key) + " uses a marker outside the alphabet");
  if (dist.size() != outcome_count())
    throw Error(Errc::kMalformedDocument, "distribution for " + ToString(key) + " has " +
                                              std::to_string(dist.size()) + " entries, want " +
                                              std::to_string(outcome_count()));
  if (!dist.IsNormalized())
    throw Error(Errc::kNotNormalized, "distribution for " + ToString(key) + " sums to " +
                                          std::to_string(dist.Sum()));
  tables_[key] = std::move(dist);
}

const CategoricalDist *LanguageModel::Stored(const CondKey &key) const {
  auto it = tables_.find(key);
  return it == tables_.end() ? nullptr : &it->second;
}

CategoricalDist LanguageModel::Distribution(const CondKey &key) const {
  if (const CategoricalDist *d = Stored(key)) return *d;
  return Fallback(key);
}

CategoricalDist LanguageModel::Fallback(const CondKey &key) const {
  CategoricalDist d = GenericDistribution(*alphabet_, *steps_, key, epsilon_);
  for (const AppliedTransform &t : fallback_transforms_)
    d = TransformDistribution(*alphabet_, *steps_, key, d, t.regime, t.spec);
  return d;
}

Outcome LanguageModel::OutcomeOf(const std::optional<Marker> &m) const {
  if (!m) return kNullOutcome;
  auto idx = alphabet_->IndexOf(*m);
  if (!idx) throw Error(Errc::kInvalidMarker, ToAscii(*m) + " is not in the alphabet");
  return OutcomeOfCell(*idx);
}

std::optional<Marker> LanguageModel::MarkerOf(Outcome o) const {
  if (o == kNullOutcome) return std::nullopt;
  return alphabet_->marker(o - 1);
}

CondKey LanguageModel::KeyFor(const Factor &f, const PhoneString &s) const {
  CondKey key{f.unit, f.stress, {}};
  if (f.context.empty()) {
    key.context.push_back(std::nullopt);
  } else {
    for (std::size_t i : f.context) key.context.push_back(s.marker(i));
  }
  return key;
}

LanguageModel GenericModel(std::shared_ptr<const Alphabet> alphabet, double epsilon,
                           const ProsodicLimits &limits) {
  return LanguageModel(std::move(alphabet), epsilon, 0.0, limits);
}

double Score(const LanguageModel &model, const PhoneString &s) {
  const Analysis a = Analyze(s, model.stress_weights(), model.quantization());
  double total = 0;
  for (const Phone &p : a.collapsed.phones()) {
    total += model.limits().LogDensity(p.prosody);
    if (total == kNegInf) return kNegInf;
  }
  for (const Factor &f : a.plan.factors) {
    const CondKey key = model.KeyFor(f, a.collapsed);
    const Outcome o = model.OutcomeOf(a.collapsed.marker(f.target));
    const double p = model.Stored(key) ? model.Stored(key)->prob(o)
                                       : model.Fallback(key).prob(o);
    if (p <= 0) return kNegInf;
    total += std::log(p);
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct Counter {
  std::map<CondKey, std::vector<double>> counts;
  ProsodicLimits observed;
  bool any_phone = false;

  void AddPhone(const ProsodicVector &p) {
    auto widen = [this](IntRange &r, int v) {
      if (!any_phone) r = {v, v};
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    };
    if (!any_phone) observed.N = observed.V = {false, false};
    widen(observed.R, p.R);
    widen(observed.T, p.T);
    widen(observed.D, p.D);
    widen(observed.L, p.L);
    if (p.N == 0 || p.N == 1) observed.N[p.N] = true;
    if (p.V == 0 || p.V == 1) observed.V[p.V] = true;
    any_phone = true;
  }
};

void CountString(const LanguageModel &shape, const PhoneString &s, Counter &c) {
  const Analysis a = Analyze(s, shape.stress_weights(), shape.quantization());
  for (const Phone &p : a.collapsed.phones()) c.AddPhone(p.prosody);
  for (const Factor &f : a.plan.factors) {
    auto &row = c.counts[shape.KeyFor(f, a.collapsed)];
    if (row.empty()) row.assign(shape.outcome_count(), 0.0);
    row[shape.OutcomeOf(a.collapsed.marker(f.target))] += 1;
  }
}

LanguageModel Finish(std::shared_ptr<const Alphabet> alphabet, const TrainOptions &options,
                     const Counter &c) {
  ProsodicLimits limits;
  if (options.limits_policy == LimitsPolicy::kFixed)
    limits = options.fixed_limits.value_or(ProsodicLimits::Full(options.quantization));
  else
    limits = c.observed;
  LanguageModel model(std::move(alphabet), options.epsilon, options.alpha, limits,
                      options.quantization, options.weights);
  const double n = double(model.outcome_count());
  for (const auto &[key, row] : c.counts) {
    double total = 0;
    for (double x : row) total += x;
    std::vector<double> probs(row.size());
    for (std::size_t o = 0; o < row.size(); ++o)
      probs[o] = (row[o] + options.alpha) / (total + options.alpha * n);
    model.SetTable(key, CategoricalDist(std::move(probs)));
  }
  return model;
}

}  // namespace

std::string DescribeViolations(const RawString &raw, const std::vector<Violation> &v) {
  std::string out;
  for (const Violation &x : v) {
    if (!out.empty()) out += "; ";
    out += ToString(x.kind);
    out += " at phone " + std::to_string(x.position);
    if (x.position < raw.phone_lines.size())
      out += " (line " + std::to_string(raw.phone_lines[x.position]) + ")";
    if (!x.detail.empty()) out += " (" + x.detail + ")";
  }
  return out;
}

LanguageModel Train(std::shared_ptr<const Alphabet> alphabet, const CorpusSource &corpus,
                    const TrainOptions &options, TrainReport *report) {
  if (!(options.alpha >= 0)) throw Error(Errc::kOutOfRange, "smoothing must be nonnegative");
  // Shape-only model used for key construction and analysis settings.
  const LanguageModel shape(alphabet, options.epsilon, options.alpha,
                            ProsodicLimits::Full(options.quantization), options.quantization,
                            options.weights);
  Counter c;
  TrainReport local;
  TrainReport &r = report ? *report : local;
  RawString raw;
  while (corpus(raw)) {
    ValidationResult v = ValidateString(*alphabet, raw.phones);
    if (!v.ok()) {
      std::string msg = "line " + std::to_string(raw.line) + ": " + DescribeViolations(raw, v.violations);
      if (!options.skip_invalid) throw Error(Errc::kInvalidString, msg);
      r.diagnostics.push_back(msg);
      ++r.skipped;
      continue;
    }
    CountString(shape, *v.value, c);
    ++r.used;
  }
  if (r.used == 0) throw Error(Errc::kEmptyCorpus, "no valid strings to train on");
  return Finish(std::move(alphabet), options, c);
}

LanguageModel Train(std::shared_ptr<const Alphabet> alphabet,
                    std::span<const PhoneString> corpus, const TrainOptions &options) {
  std::size_t next = 0;
  CorpusSource source = [&](RawString &raw) {
    if (next == corpus.size()) return false;
    raw.line = next + 1;
    raw.phones = corpus[next++].phones();
    raw.phone_lines.clear();
    return true;
  };
  return Train(std::move(alphabet), source, options);
}

}  // namespace iha

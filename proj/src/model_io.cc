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

#include <charconv>
#include <fstream>
#include <sstream>

#include "iha/error.h"
#include "iha/model.h"
#include "json.hpp"

namespace iha {

using nlohmann::ordered_json;

std::string FormatDouble(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double ParseDouble(std::string_view s) {
  double v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Error(Errc::kMalformedDocument, "not a decimal number: \"" + std::string(s) + "\"");
  return v;
}

namespace {

ordered_json RangeJson(const IntRange &r) { return ordered_json::array({r.lo, r.hi}); }

ordered_json AllowedJson(const std::array<bool, 2> &a) {
  ordered_json out = ordered_json::array();
  for (int v = 0; v < 2; ++v)
    if (a[v]) out.push_back(v);
  return out;
}

ordered_json MarkerJson(const std::optional<Marker> &m) {
  return m ? ordered_json(ToAscii(*m)) : ordered_json("null");
}

ordered_json HeaderJson(const LanguageModel &m) {
  const QuantizationConfig &q = m.quantization();
  const StressWeights &w = m.stress_weights();
  const ProsodicLimits &l = m.limits();
  ordered_json j;
  j["format"] = std::string(kModelFormat);
  j["alphabet_version"] = m.alphabet_version();
  j["epsilon"] = FormatDouble(m.epsilon());
  j["alpha"] = FormatDouble(m.alpha());
  j["quantization"] = {
      {"reference_duration_sec", FormatDouble(q.reference_duration_sec)},
      {"reference_pitch_hz", FormatDouble(q.reference_pitch_hz)},
      {"reference_loudness", FormatDouble(q.reference_loudness)},
      {"units_per_octave_d", q.units_per_octave_d},
      {"units_per_octave_t", q.units_per_octave_t},
      {"units_per_decade_l", q.units_per_decade_l},
      {"units_per_nat_r", q.units_per_nat_r},
      {"min_value", q.min_value},
      {"max_value", q.max_value},
  };
  j["stress_weights"] = {
      {"duration", FormatDouble(w.duration)},
      {"loudness", FormatDouble(w.loudness)},
      {"tone", FormatDouble(w.tone)},
      {"count", FormatDouble(w.count)},
  };
  j["limits"] = {{"R", RangeJson(l.R)}, {"T", RangeJson(l.T)}, {"D", RangeJson(l.D)},
                 {"L", RangeJson(l.L)}, {"N", AllowedJson(l.N)}, {"V", AllowedJson(l.V)}};
  ordered_json fb = ordered_json::array();
  for (const AppliedTransform &t : m.fallback_transforms())
    fb.push_back({{"kind", ToString(t.spec.kind)},
                  {"lambda", FormatDouble(t.spec.lambda)},
                  {"rate", FormatDouble(t.regime.rate)},
                  {"loud", FormatDouble(t.regime.loud)},
                  {"pitch", FormatDouble(t.regime.pitch)}});
  j["fallback_transforms"] = fb;
  return j;
}

ordered_json EntryJson(const LanguageModel &m, const CondKey &key, const CategoricalDist &d) {
  ordered_json ctx = ordered_json::array();
  for (const auto &c : key.context) ctx.push_back(MarkerJson(c));
  ordered_json dist = ordered_json::array();
  for (Outcome o = 0; o < d.size(); ++o) {
    if (o != kNullOutcome && d.prob(o) == 0) continue;
    dist.push_back({MarkerJson(m.MarkerOf(o)), FormatDouble(d.prob(o))});
  }
  return {{"key", {{"unit", ToString(key.unit)}, {"stress", ToString(key.stress)},
                   {"context", ctx}}},
          {"dist", dist}};
}

// Field access that reports schema problems as format errors.
const nlohmann::json &Field(const nlohmann::json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(Errc::kMalformedDocument, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string Str(const nlohmann::json &j, const char *name) {
  const auto &v = Field(j, name);
  if (!v.is_string())
    throw Error(Errc::kMalformedDocument, std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

double Num(const nlohmann::json &j, const char *name) { return ParseDouble(Str(j, name)); }

int Int(const nlohmann::json &j, const char *name) {
  const auto &v = Field(j, name);
  if (!v.is_number_integer())
    throw Error(Errc::kMalformedDocument, std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

IntRange ReadRange(const nlohmann::json &j, const char *name) {
  const auto &v = Field(j, name);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw Error(Errc::kMalformedDocument, std::string("limit \"") + name + "\" must be [lo, hi]");
  return {v[0].get<int>(), v[1].get<int>()};
}

std::array<bool, 2> ReadAllowed(const nlohmann::json &j, const char *name) {
  const auto &v = Field(j, name);
  std::array<bool, 2> out{false, false};
  if (!v.is_array()) throw Error(Errc::kMalformedDocument, std::string("limit \"") + name + "\" must be a list");
  for (const auto &x : v) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
      throw Error(Errc::kMalformedDocument, std::string("limit \"") + name + "\" takes 0 and 1");
    out[x.get<int>()] = true;
  }
  return out;
}

std::optional<Marker> ReadMarker(const Alphabet &a, const nlohmann::json &v) {
  if (!v.is_string()) throw Error(Errc::kMalformedDocument, "marker must be a string");
  const std::string s = v.get<std::string>();
  if (s == "null") return std::nullopt;
  auto m = ParseAscii(s);
  if (!m) throw Error(Errc::kMalformedDocument, "malformed marker \"" + s + "\"");
  if (!a.Contains(*m)) throw Error(Errc::kMalformedDocument, "marker " + s + " is not in the alphabet");
  return m;
}

}  // namespace

std::string SerializeModel(const LanguageModel &model) {
  const ordered_json header = HeaderJson(model);
  std::string out = "{\n";
  for (const auto &[name, value] : header.items())
    out += "  " + ordered_json(name).dump() + ": " + value.dump() + ",\n";
  out += "  \"tables\": [";
  bool first = true;
  for (const auto &[key, dist] : model.tables()) {
    out += first ? "\n    " : ",\n    ";
    out += EntryJson(model, key, dist).dump();
    first = false;
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void SaveModel(const LanguageModel &model, std::ostream &out) {
  out << SerializeModel(model);
  if (!out) throw Error(Errc::kIo, "failed to write model");
}

void SaveModelFile(const LanguageModel &model, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kIo, "cannot open " + path.string() + " for writing");
  SaveModel(model, out);
}

LanguageModel LoadModel(std::istream &in, std::shared_ptr<const Alphabet> alphabet) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::kMalformedDocument, std::string("model is not valid JSON: ") + e.what());
  }
  if (Str(j, "format") != kModelFormat)
    throw Error(Errc::kMalformedDocument, "unsupported model format \"" + Str(j, "format") + "\"");
  if (Str(j, "alphabet_version") != alphabet->version())
    throw Error(Errc::kVersionMismatch, "model was built for alphabet \"" +
                                            Str(j, "alphabet_version") + "\", loaded \"" +
                                            alphabet->version() + "\"");
  const auto &q = Field(j, "quantization");
  QuantizationConfig qc;
  qc.reference_duration_sec = Num(q, "reference_duration_sec");
  qc.reference_pitch_hz = Num(q, "reference_pitch_hz");
  qc.reference_loudness = Num(q, "reference_loudness");
  qc.units_per_octave_d = Int(q, "units_per_octave_d");
  qc.units_per_octave_t = Int(q, "units_per_octave_t");
  qc.units_per_decade_l = Int(q, "units_per_decade_l");
  qc.units_per_nat_r = Int(q, "units_per_nat_r");
  qc.min_value = Int(q, "min_value");
  qc.max_value = Int(q, "max_value");
  const auto &w = Field(j, "stress_weights");
  StressWeights sw{Num(w, "duration"), Num(w, "loudness"), Num(w, "tone"), Num(w, "count")};
  const auto &l = Field(j, "limits");
  ProsodicLimits lim;
  lim.R = ReadRange(l, "R");
  lim.T = ReadRange(l, "T");
  lim.D = ReadRange(l, "D");
  lim.L = ReadRange(l, "L");
  lim.N = ReadAllowed(l, "N");
  lim.V = ReadAllowed(l, "V");

  LanguageModel model(alphabet, Num(j, "epsilon"), Num(j, "alpha"), lim, qc, sw);

  const auto &fb = Field(j, "fallback_transforms");
  if (!fb.is_array()) throw Error(Errc::kMalformedDocument, "fallback_transforms must be a list");
  for (const auto &t : fb) {
    auto kind = ParseTransformKind(Str(t, "kind"));
    if (!kind) throw Error(Errc::kMalformedDocument, "unknown transform \"" + Str(t, "kind") + "\"");
    AppliedTransform at{{*kind, Num(t, "lambda")}, {Num(t, "rate"), Num(t, "loud"), Num(t, "pitch")}};
    at.spec.Validate();
    at.regime.Validate();
    model.AddFallbackTransform(at);
  }

  const auto &tables = Field(j, "tables");
  if (!tables.is_array()) throw Error(Errc::kMalformedDocument, "tables must be a list");
  for (const auto &entry : tables) {
    const auto &k = Field(entry, "key");
    auto unit = ParseUnit(Str(k, "unit"));
    auto stress = ParseStressClass(Str(k, "stress"));
    if (!unit || !stress) throw Error(Errc::kMalformedDocument, "unknown unit or stress class");
    CondKey key{*unit, *stress, {}};
    const auto &ctx = Field(k, "context");
    if (!ctx.is_array()) throw Error(Errc::kMalformedDocument, "context must be a list");
    for (const auto &c : ctx) key.context.push_back(ReadMarker(*alphabet, c));
    CheckKeyShape(key);
    if (model.Stored(key)) throw Error(Errc::kMalformedDocument, "duplicate key " + ToString(key));
    std::vector<double> probs(model.outcome_count(), 0.0);
    const auto &dist = Field(entry, "dist");
    if (!dist.is_array()) throw Error(Errc::kMalformedDocument, "dist must be a list");
    for (const auto &pair : dist) {
      if (!pair.is_array() || pair.size() != 2 || !pair[1].is_string())
        throw Error(Errc::kMalformedDocument, "dist entries are [marker, \"probability\"]");
      probs[model.OutcomeOf(ReadMarker(*alphabet, pair[0]))] =
          ParseDouble(pair[1].get<std::string>());
    }
    model.SetTable(key, CategoricalDist(std::move(probs)));
  }
  return model;
}

LanguageModel LoadModelFile(const std::filesystem::path &path,
                            std::shared_ptr<const Alphabet> alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open model " + path.string());
  return LoadModel(in, std::move(alphabet));
}

}  // namespace iha

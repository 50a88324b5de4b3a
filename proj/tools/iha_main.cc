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

// iha: command-line front end for validation, syllabification, training,
// scoring, sampling and variation of phone-string corpora.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "iha/alphabet.h"
#include "iha/corpus.h"
#include "iha/error.h"
#include "iha/model.h"
#include "iha/rng.h"
#include "iha/syllabifier.h"
#include "iha/variation.h"
#include "json.hpp"

#ifndef IHA_DEFAULT_ALPHABET
#define IHA_DEFAULT_ALPHABET "data/iha_alphabet.tsv"
#endif

namespace {

using iha::Errc;
using iha::Error;

struct Global {
  std::string alphabet_path;
  std::vector<double> stress_weights;
  bool skip_invalid = false;
  iha::QuantizationConfig quant;
  double epsilon = 0.05;
};

std::string AlphabetPath(const Global &g) {
  if (!g.alphabet_path.empty()) return g.alphabet_path;
  if (const char *env = std::getenv("IHA_ALPHABET"); env && *env) return env;
  return IHA_DEFAULT_ALPHABET;
}

std::shared_ptr<const iha::Alphabet> LoadAlphabet(const Global &g) {
  return std::make_shared<const iha::Alphabet>(iha::Alphabet::LoadFile(AlphabetPath(g)));
}

iha::StressWeights Weights(const Global &g) {
  iha::StressWeights w;
  if (g.stress_weights.empty()) return w;
  if (g.stress_weights.size() != 4)
    throw Error(Errc::kOutOfRange, "--stress-weights takes duration,loudness,tone,count");
  w = {g.stress_weights[0], g.stress_weights[1], g.stress_weights[2], g.stress_weights[3]};
  w.Validate();
  return w;
}

iha::LanguageModel ModelOrGeneric(const Global &g, const std::string &path,
                                  std::shared_ptr<const iha::Alphabet> alphabet) {
  if (!path.empty()) return iha::LoadModelFile(path, std::move(alphabet));
  g.quant.Validate();
  return iha::LanguageModel(std::move(alphabet), g.epsilon, 0.0,
                            iha::ProsodicLimits::Full(g.quant), g.quant, Weights(g));
}

std::string Num(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  return iha::FormatDouble(v);
}

// Visits every string of a corpus; invalid strings are reported on stderr and
// either skipped or turned into a domain error.
template <typename Fn>
std::size_t ForEachValid(const Global &g, const iha::Alphabet &alphabet,
                         const std::string &path, Fn fn) {
  iha::CorpusFile file(path);
  iha::RawString raw;
  std::size_t index = 0, invalid = 0;
  while (file.reader().Next(raw)) {
    ++index;
    auto v = iha::ValidateString(alphabet, raw.phones);
    if (!v.ok()) {
      ++invalid;
      std::cerr << path << ": string " << index << " (line " << raw.line
                << "): " << iha::DescribeViolations(raw, v.violations) << "\n";
      if (!g.skip_invalid) throw Error(Errc::kInvalidString, "invalid string in " + path);
      continue;
    }
    fn(index, raw, *v.value);
  }
  return invalid;
}

int CmdValidate(const Global &g, const std::string &path) {
  auto alphabet = LoadAlphabet(g);
  iha::CorpusFile file(path);
  iha::RawString raw;
  std::size_t index = 0, valid = 0, invalid = 0;
  while (file.reader().Next(raw)) {
    ++index;
    auto v = iha::ValidateString(*alphabet, raw.phones);
    std::cout << "string " << index << " (line " << raw.line << "): ";
    if (v.ok()) {
      ++valid;
      std::cout << "valid\n";
    } else {
      ++invalid;
      std::cout << "invalid: " << iha::DescribeViolations(raw, v.violations) << "\n";
    }
  }
  std::cout << valid << " valid, " << invalid << " invalid\n";
  return invalid == 0 || g.skip_invalid ? 0 : 1;
}

int CmdSyllabify(const Global &g, const std::string &path, bool json) {
  auto alphabet = LoadAlphabet(g);
  const auto weights = Weights(g);
  ForEachValid(g, *alphabet, path, [&](std::size_t index, const iha::RawString &raw,
                                       const iha::PhoneString &s) {
    const iha::Analysis a = iha::Analyze(s, weights, g.quant);
    if (json) {
      nlohmann::ordered_json j;
      j["string"] = index;
      j["line"] = raw.line;
      j["phones"] = a.collapsed.size();
      nlohmann::ordered_json syl = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < a.parse.syllables.size(); ++i) {
        const auto &x = a.parse.syllables[i];
        syl.push_back({{"start", x.start}, {"nucleus", x.nucleus}, {"end", x.end},
                       {"score", a.scores[i]}, {"class", iha::ToString(a.classes[i])}});
      }
      j["syllables"] = syl;
      nlohmann::ordered_json minima = nlohmann::ordered_json::array();
      for (std::size_t b : a.parse.minima) minima.push_back(a.parse.blocks[b].last);
      j["minima"] = minima;
      nlohmann::ordered_json plan = nlohmann::ordered_json::array();
      for (const auto &f : a.plan.factors)
        plan.push_back({{"target", f.target}, {"context", f.context},
                        {"unit", iha::ToString(f.unit)}, {"stress", iha::ToString(f.stress)},
                        {"syllable", f.syllable}});
      j["plan"] = plan;
      std::cout << j.dump() << "\n";
      return;
    }
    std::cout << "string " << index << " (line " << raw.line << "): "
              << a.parse.syllables.size() << " syllable(s)\n";
    for (std::size_t i = 0; i < a.parse.syllables.size(); ++i) {
      const auto &x = a.parse.syllables[i];
      std::cout << "  [" << x.start << ", " << x.end << "] nucleus " << x.nucleus << " "
                << alphabet->Symbol(a.collapsed.marker(x.nucleus)) << "  score "
                << Num(a.scores[i]) << "  " << iha::ToString(a.classes[i]) << "\n";
    }
    for (const auto &f : a.plan.factors) {
      std::cout << "  " << f.target << " <-";
      if (f.context.empty()) std::cout << " root";
      for (std::size_t c : f.context) std::cout << " " << c;
      std::cout << "  " << iha::ToString(f.unit) << "/" << iha::ToString(f.stress) << "\n";
    }
  });
  return 0;
}

int CmdScore(const Global &g, const std::string &path, const std::string &model_path) {
  auto alphabet = LoadAlphabet(g);
  const iha::LanguageModel model = ModelOrGeneric(g, model_path, alphabet);
  double total = 0;
  ForEachValid(g, *alphabet, path, [&](std::size_t index, const iha::RawString &raw,
                                       const iha::PhoneString &s) {
    const double lp = iha::Score(model, s);
    total += lp;
    std::cout << index << "\t" << raw.line << "\t" << Num(lp) << "\n";
  });
  std::cout << "total\t" << Num(total) << "\n";
  return 0;
}

int CmdTrain(const Global &g, const std::string &path, const std::string &out, double alpha,
             bool fixed_limits) {
  auto alphabet = LoadAlphabet(g);
  iha::TrainOptions opt;
  opt.alpha = alpha;
  opt.epsilon = g.epsilon;
  opt.weights = Weights(g);
  opt.quantization = g.quant;
  opt.skip_invalid = g.skip_invalid;
  if (fixed_limits) opt.limits_policy = iha::LimitsPolicy::kFixed;
  iha::CorpusFile file(path);
  iha::TrainReport report;
  const iha::LanguageModel model = iha::Train(alphabet, file.reader().AsSource(), opt, &report);
  for (const auto &d : report.diagnostics) std::cerr << path << ": " << d << "\n";
  if (out.empty() || out == "-")
    iha::SaveModel(model, std::cout);
  else
    iha::SaveModelFile(model, out);
  std::cerr << "trained on " << report.used << " string(s), skipped " << report.skipped
            << ", " << model.tables().size() << " table(s)\n";
  return 0;
}

int CmdSample(const Global &g, const std::string &model_path, int n, std::uint64_t seed,
              int max_syllables, const std::string &out_path) {
  auto alphabet = LoadAlphabet(g);
  const iha::LanguageModel model = ModelOrGeneric(g, model_path, alphabet);
  iha::SampleOptions opt;
  opt.max_syllables = max_syllables;
  iha::Rng rng(seed);
  std::ostringstream out;
  out << "# sampler: " << iha::Rng::kAlgorithm << " seed=" << seed << "\n";
  for (int i = 0; i < n; ++i) {
    const iha::PhoneString s = iha::Sample(model, rng, opt);
    iha::WritePhoneString(out, s.phones(), alphabet.get());
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << out.str())) throw Error(Errc::kIo, "cannot write " + out_path);
  }
  return 0;
}

int CmdVary(const Global &g, const std::string &model_path, const std::string &kind,
            double lambda, iha::Regime regime, const std::string &out, bool drift) {
  auto alphabet = LoadAlphabet(g);
  const iha::LanguageModel base = iha::LoadModelFile(model_path, alphabet);
  auto k = iha::ParseTransformKind(kind);
  if (!k) throw Error(Errc::kOutOfRange, "unknown transform \"" + kind + "\"");
  const iha::LanguageModel varied = iha::Apply(base, regime, {*k, lambda});
  if (!out.empty()) iha::SaveModelFile(varied, out);
  if (drift) {
    for (const auto &d : iha::DriftReport(base, varied))
      std::cout << iha::ToString(d.key) << "\t" << Num(d.distance) << "\n";
  } else if (out.empty()) {
    iha::SaveModel(varied, std::cout);
  }
  return 0;
}

int CmdInfo(const Global &g, const std::string &model_path) {
  auto alphabet = LoadAlphabet(g);
  nlohmann::ordered_json j;
  j["alphabet"] = AlphabetPath(g);
  j["alphabet_version"] = alphabet->version();
  j["cells"] = alphabet->size();
  std::map<std::string, int> manners;
  for (const auto &c : alphabet->cells()) ++manners[std::string(iha::ToString(c.marker.manner))];
  j["cells_by_manner"] = manners;
  j["sampler"] = std::string(iha::Rng::kAlgorithm);
  if (!model_path.empty()) {
    const iha::LanguageModel m = iha::LoadModelFile(model_path, alphabet);
    const auto &l = m.limits();
    j["model"] = {{"format", std::string(iha::kModelFormat)},
                  {"epsilon", Num(m.epsilon())},
                  {"alpha", Num(m.alpha())},
                  {"tables", m.tables().size()},
                  {"fallback_transforms", m.fallback_transforms().size()},
                  {"limits", {{"R", {l.R.lo, l.R.hi}}, {"T", {l.T.lo, l.T.hi}},
                              {"D", {l.D.lo, l.D.hi}}, {"L", {l.L.lo, l.L.hi}}}}};
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int ExitCode(Errc code) {
  switch (iha::ClassOf(code)) {
    case iha::ErrorClass::kDomain: return 1;
    case iha::ErrorClass::kIo: return 2;
    case iha::ErrorClass::kFormat: return 3;
  }
  return 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"IHA phone-string toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--alphabet", g.alphabet_path,
                 "Alphabet table (default: $IHA_ALPHABET, then the bundled table)");
  app.add_option("--stress-weights", g.stress_weights, "duration,loudness,tone,count")
      ->delimiter(',')
      ->expected(4);
  app.add_flag("--skip-invalid", g.skip_invalid, "Skip invalid strings instead of failing");
  app.add_option("--epsilon", g.epsilon, "Joining mass of the generic model")->capture_default_str();
  app.add_option("--ref-duration", g.quant.reference_duration_sec, "Reference duration (s)");
  app.add_option("--ref-pitch", g.quant.reference_pitch_hz, "Reference pitch (Hz)");
  app.add_option("--ref-loudness", g.quant.reference_loudness, "Reference loudness");
  app.add_option("--units-d", g.quant.units_per_octave_d, "Duration units per octave");
  app.add_option("--units-t", g.quant.units_per_octave_t, "Pitch units per octave");
  app.add_option("--units-l", g.quant.units_per_decade_l, "Loudness units per decade");
  app.add_option("--units-r", g.quant.units_per_nat_r, "Rounding units per nat");

  std::string corpus, model_path, out, transform = "syncope";
  bool json = false, drift = false, fixed_limits = false;
  double alpha = 0.01, lambda = 0;
  iha::Regime regime;
  int n = 1, max_syllables = 3;
  std::uint64_t seed = 0;

  auto *validate = app.add_subcommand("validate", "Check strings against the validity rules");
  validate->add_option("corpus", corpus, "JSONL corpus")->required();

  auto *syllabify = app.add_subcommand("syllabify", "Print syllables, stress and plans");
  syllabify->add_option("corpus", corpus, "JSONL corpus")->required();
  syllabify->add_flag("--json", json, "One JSON object per string");

  auto *score = app.add_subcommand("score", "Log-probability of each string");
  score->add_option("corpus", corpus, "JSONL corpus")->required();
  score->add_option("--model", model_path, "Model file (default: generic model)");

  auto *train = app.add_subcommand("train", "Estimate a model from a corpus");
  train->add_option("corpus", corpus, "JSONL corpus")->required();
  train->add_option("--out,-o", out, "Model file (default: stdout)");
  train->add_option("--alpha", alpha, "Add-alpha smoothing")->capture_default_str();
  train->add_flag("--fixed-limits", fixed_limits, "Use the full quantization range as limits");

  auto *sample = app.add_subcommand("sample", "Draw strings from a model");
  sample->add_option("--model", model_path, "Model file (default: generic model)");
  sample->add_option("-n", n, "Number of strings")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Random seed")->capture_default_str();
  sample->add_option("--max-syllables", max_syllables, "Upper bound on syllables")->capture_default_str()
      ->check(CLI::PositiveNumber);
  sample->add_option("--out,-o", out, "Output corpus (default: stdout)");

  auto *vary = app.add_subcommand("vary", "Apply a variation transform to a model");
  vary->add_option("--model", model_path, "Model file")->required();
  vary->add_option("--transform", transform,
                   "syncope, epenthesis, lenition, assimilation or straightening")
      ->capture_default_str();
  vary->add_option("--lambda", lambda, "Transform strength in [0, 1]")->capture_default_str();
  vary->add_option("--rate", regime.rate, "Speech rate factor")->capture_default_str();
  vary->add_option("--loud", regime.loud, "Loudness factor")->capture_default_str();
  vary->add_option("--pitch", regime.pitch, "Pitch factor")->capture_default_str();
  vary->add_option("--out,-o", out, "Varied model file");
  vary->add_flag("--drift", drift, "Print per-key total variation against the input");

  auto *info = app.add_subcommand("info", "Describe the alphabet and optionally a model");
  info->add_option("--model", model_path, "Model file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return CmdValidate(g, corpus);
    if (*syllabify) return CmdSyllabify(g, corpus, json);
    if (*score) return CmdScore(g, corpus, model_path);
    if (*train) return CmdTrain(g, corpus, out, alpha, fixed_limits);
    if (*sample) return CmdSample(g, model_path, n, seed, max_syllables, out);
    if (*vary) return CmdVary(g, model_path, transform, lambda, regime, out, drift);
    if (*info) return CmdInfo(g, model_path);
  } catch (const Error &e) {
    std::cerr << "iha: " << iha::ErrcName(e.code()) << ": " << e.what() << "\n";
    return ExitCode(e.code());
  } catch (const std::exception &e) {
    std::cerr << "iha: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

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

#include "iha/corpus.h"

#include <cmath>
#include <istream>
#include <ostream>

#include "iha/error.h"
#include "json.hpp"

namespace iha {

namespace {

template <typename T>
T Attribute(const nlohmann::json &j, const char *field,
            std::optional<T> (*parse)(std::string_view)) {
  if (!j.contains(field))
    throw Error(Errc::kMalformedDocument, std::string("missing field \"") + field + "\"");
  const auto &v = j.at(field);
  if (!v.is_string())
    throw Error(Errc::kMalformedDocument, std::string("field \"") + field + "\" must be a string");
  const std::string s = v.get<std::string>();
  auto parsed = parse(s);
  if (!parsed)
    throw Error(Errc::kUnknownAttribute,
                std::string("unknown ") + field + " value \"" + s + "\"");
  return *parsed;
}

int IntField(const nlohmann::json &j, const char *field) {
  if (!j.contains(field)) return 0;
  const auto &v = j.at(field);
  if (!v.is_number_integer())
    throw Error(Errc::kMalformedDocument, std::string("field \"") + field + "\" must be an integer");
  return v.get<int>();
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Phone ParsePhoneRecord(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::kMalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::kMalformedDocument, "phone record must be an object");
  for (const auto &[k, v] : j.items()) {
    static const char *const kKnown[] = {"m", "fb", "oc", "pl", "R", "N", "V",
                                         "T", "D", "L", "t0", "sym", "null"};
    bool known = false;
    for (const char *f : kKnown) known |= k == f;
    if (!known) throw Error(Errc::kMalformedDocument, "unknown field \"" + k + "\"");
  }
  if (j.contains("null")) {
    if (j.at("null") != true || j.size() != 1)
      throw Error(Errc::kMalformedDocument, "null phone is written {\"null\": true}");
    return Phone::Null();
  }
  Phone p;
  p.marker = Marker{Attribute<Manner>(j, "m", ParseManner),
                    Attribute<FrontBack>(j, "fb", ParseFrontBack),
                    Attribute<OpenClose>(j, "oc", ParseOpenClose),
                    Attribute<Place>(j, "pl", ParsePlace)};
  p.prosody = {IntField(j, "R"), IntField(j, "N"), IntField(j, "V"),
               IntField(j, "T"), IntField(j, "D"), IntField(j, "L")};
  if (p.prosody.N != 0 && p.prosody.N != 1)
    throw Error(Errc::kMalformedDocument, "N must be 0 or 1");
  if (p.prosody.V != 0 && p.prosody.V != 1)
    throw Error(Errc::kMalformedDocument, "V must be 0 or 1");
  if (j.contains("t0")) {
    const auto &t = j.at("t0");
    if (!t.is_number() || !std::isfinite(t.get<double>()))
      throw Error(Errc::kMalformedDocument, "t0 must be a number");
    p.t0 = t.get<double>();
  }
  return p;
}

std::string FormatPhoneRecord(const Phone &p, const Alphabet *alphabet) {
  if (p.is_null()) return "{\"null\":true}";
  nlohmann::ordered_json j;
  const Marker &m = *p.marker;
  j["m"] = std::string(ToString(m.manner));
  j["fb"] = std::string(ToString(m.front_back));
  j["oc"] = std::string(ToString(m.open_close));
  j["pl"] = std::string(ToString(m.place));
  j["R"] = p.prosody.R;
  j["N"] = p.prosody.N;
  j["V"] = p.prosody.V;
  j["T"] = p.prosody.T;
  j["D"] = p.prosody.D;
  j["L"] = p.prosody.L;
  if (p.t0) j["t0"] = *p.t0;
  if (alphabet && alphabet->Contains(m)) j["sym"] = alphabet->Symbol(m);
  return j.dump();
}

void WritePhoneString(std::ostream &out, std::span<const Phone> phones,
                      const Alphabet *alphabet) {
  for (const Phone &p : phones) out << FormatPhoneRecord(p, alphabet) << '\n';
  out << '\n';
}

CorpusReader::CorpusReader(std::istream &in, std::string name)
    : in_(in), name_(std::move(name)) {}

bool CorpusReader::Next(RawString &out) {
  out = RawString{};
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text[0] == '#') continue;
    if (IsBlank(text)) {
      if (out.phones.empty()) continue;
      return true;
    }
    try {
      if (out.phones.empty()) out.line = line_;
      out.phones.push_back(ParsePhoneRecord(text));
      out.phone_lines.push_back(line_);
    } catch (const Error &e) {
      throw Error(e.code(), name_ + ":" + std::to_string(line_) + ": " + e.what());
    }
  }
  if (in_.bad()) throw Error(Errc::kIo, name_ + ": read error");
  return !out.phones.empty();
}

CorpusFile::CorpusFile(const std::filesystem::path &path) : in_(path, std::ios::binary) {
  if (!in_) throw Error(Errc::kIo, "cannot open corpus " + path.string());
  reader_ = std::make_unique<CorpusReader>(in_, path.string());
}

std::vector<RawString> ReadCorpus(std::istream &in, const std::string &name) {
  CorpusReader reader(in, name);
  std::vector<RawString> out;
  RawString s;
  while (reader.Next(s)) out.push_back(std::move(s));
  return out;
}

}  // namespace iha

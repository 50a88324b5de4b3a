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
// JSONL corpora: one phone per line, e.g.
//   {"m":"plosive","fb":"back","oc":"close","pl":"PAL","R":0,"N":0,"V":0,"T":3,"D":1,"L":2}
// Prosody fields default to 0; "t0" (seconds) is optional; "sym" is an
// informational glyph and is ignored on input. A blank line ends a string and
// lines starting with '#' are comments.

#ifndef IHA_CORPUS_H_
#define IHA_CORPUS_H_

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "iha/alphabet.h"
#include "iha/model.h"

namespace iha {

// Throws Error(kMalformedDocument) for bad JSON or fields and
// Error(kUnknownAttribute) for unknown attribute names.
Phone ParsePhoneRecord(std::string_view line);

// Compact JSON for one phone; adds "sym" when an alphabet is given and knows
// the marker.
std::string FormatPhoneRecord(const Phone &p, const Alphabet *alphabet = nullptr);

void WritePhoneString(std::ostream &out, std::span<const Phone> phones,
                      const Alphabet *alphabet = nullptr);

class CorpusReader {
 public:
  // `name` prefixes error messages.
  CorpusReader(std::istream &in, std::string name);

  // Returns false at end of input. Format errors carry the line number.
  bool Next(RawString &out);
  std::size_t line() const { return line_; }

  CorpusSource AsSource() {
    return [this](RawString &s) { return Next(s); };
  }

 private:
  std::istream &in_;
  std::string name_;
  std::size_t line_ = 0;
};

// Opens a corpus for reading; throws Error(kIo).
class CorpusFile {
 public:
  explicit CorpusFile(const std::filesystem::path &path);
  CorpusReader &reader() { return *reader_; }

 private:
  std::ifstream in_;
  std::unique_ptr<CorpusReader> reader_;
};

std::vector<RawString> ReadCorpus(std::istream &in, const std::string &name = "corpus");

}  // namespace iha

#endif  // IHA_CORPUS_H_

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

#ifndef IHA_ERROR_H_
#define IHA_ERROR_H_

#include <stdexcept>
#include <string>

namespace iha {

enum class Errc {
  kDuplicateCell,
  kDuplicateSymbol,
  kUnknownAttribute,
  kVowelPlace,
  kNasalPlace,
  kInvalidMarker,
  kUnknownGlyph,
  kMalformedSymbol,
  kNonPositiveValue,
  kOutOfRange,
  kVersionMismatch,
  kMalformedDocument,
  kNotNormalized,
  kEmptyCorpus,
  kInvalidString,
  kRetryBudgetExhausted,
  kIo,
};

// Broad classes used by the command line tool to pick an exit status.
enum class ErrorClass { kDomain, kIo, kFormat };

ErrorClass ClassOf(Errc code);
const char *ErrcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace iha

#endif  // IHA_ERROR_H_

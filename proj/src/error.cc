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

#include "iha/error.h"

namespace iha {

ErrorClass ClassOf(Errc code) {
  switch (code) {
    case Errc::kIo:
      return ErrorClass::kIo;
    case Errc::kMalformedDocument:
    case Errc::kUnknownAttribute:
      return ErrorClass::kFormat;
    default:
      return ErrorClass::kDomain;
  }
}

const char *ErrcName(Errc code) {
  switch (code) {
    case Errc::kDuplicateCell: return "duplicateCell";
    case Errc::kDuplicateSymbol: return "duplicateSymbol";
    case Errc::kUnknownAttribute: return "unknownAttribute";
    case Errc::kVowelPlace: return "vowelWithNonGlottalPlace";
    case Errc::kNasalPlace: return "nasalWithPharynGlottalPlace";
    case Errc::kInvalidMarker: return "invalidMarker";
    case Errc::kUnknownGlyph: return "unknownGlyph";
    case Errc::kMalformedSymbol: return "malformedSymbol";
    case Errc::kNonPositiveValue: return "nonPositiveValue";
    case Errc::kOutOfRange: return "outOfRange";
    case Errc::kVersionMismatch: return "versionMismatch";
    case Errc::kMalformedDocument: return "malformedDocument";
    case Errc::kNotNormalized: return "notNormalized";
    case Errc::kEmptyCorpus: return "emptyCorpus";
    case Errc::kInvalidString: return "invalidString";
    case Errc::kRetryBudgetExhausted: return "retryBudgetExhausted";
    case Errc::kIo: return "io";
  }
  return "unknown";
}

}  // namespace iha

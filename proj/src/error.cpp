// Copyright 2026 The semtree Authors.
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

#include "semtree/error.hpp"

namespace semtree {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedRecord: return "TruncatedRecord";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::EmptyVocabulary: return "EmptyVocabulary";
    case Errc::InconsistentDimension: return "InconsistentDimension";
    case Errc::UnparsableNumber: return "UnparsableNumber";
    case Errc::OutOfVocabulary: return "OutOfVocabulary";
    case Errc::ZeroQueryVector: return "ZeroQueryVector";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroDelta: return "ZeroDelta";
    case Errc::ZeroSum: return "ZeroSum";
    case Errc::DegenerateSupportSet: return "DegenerateSupportSet";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ScaleOutOfRange: return "ScaleOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyAfterVocabFilter: return "EmptyAfterVocabFilter";
    case Errc::EmptyGold: return "EmptyGold";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::EmptyPairs: return "EmptyPairs";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::NoSections: return "NoSections";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::DuplicateCategory: return "DuplicateCategory";
    case Errc::EmptyCategory: return "EmptyCategory";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace semtree

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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semtree {

enum class Errc {
  // embedding files
  MalformedHeader,
  TruncatedRecord,
  NonFiniteValue,
  EmptyVocabulary,
  InconsistentDimension,
  UnparsableNumber,
  // queries
  OutOfVocabulary,
  ZeroQueryVector,
  DimensionMismatch,
  ZeroDelta,
  ZeroSum,
  DegenerateSupportSet,
  IndexOutOfRange,
  ScaleOutOfRange,
  InvalidArgument,
  // evaluation
  EmptyAfterVocabFilter,
  EmptyGold,
  EmptyClass,
  EmptyPairs,
  // datasets
  MalformedLine,
  NoSections,
  SchemaViolation,
  DuplicateCategory,
  EmptyCategory,
  ArityMismatch,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `what()` is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace semtree

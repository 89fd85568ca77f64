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

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace semtree {

struct Category {
  std::string name;
  std::vector<std::string> members;  // ordered, unique
};

struct CategoryCorpus {
  std::string name;
  std::vector<Category> categories;

  std::size_t total_members() const;
  const Category* find(const std::string& name) const;
};

struct AnalogyQuestion {
  std::string x1, y1, x2, y2;  // x1 : y1 :: x2 : y2, y2 is gold
  std::string section;
};

struct AnalogySection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pairs;  // deduplicated
};

/// Google analogy question file: sections of (x, y) pairs plus the original
/// question list in file order.
struct AnalogyCorpus {
  std::vector<AnalogySection> sections;
  std::vector<AnalogyQuestion> questions;

  const AnalogySection* find(const std::string& name) const;
  /// Sum of pair slots over all sections (two instances per pair).
  std::size_t pair_slot_count() const;
};

/// Headers are lines starting with ": "; data lines hold exactly four
/// whitespace-separated tokens. Throws MalformedLine or NoSections.
AnalogyCorpus parse_google_analogy(std::istream& in);
AnalogyCorpus parse_google_analogy(const std::filesystem::path& path);
/// Writes the question list back in the same text layout.
std::string format_google_analogy(const AnalogyCorpus& corpus);

/// Two categories per section: "<section>/x" and "<section>/y".
CategoryCorpus analogy_sections_to_categories(const AnalogyCorpus& corpus);

/// {"name": ..., "categories": {"months": ["January", ...], ...}}
CategoryCorpus parse_category_corpus(const std::string& json_text);
CategoryCorpus load_category_corpus(const std::filesystem::path& path);
std::string format_category_corpus(const CategoryCorpus& corpus);

}  // namespace semtree

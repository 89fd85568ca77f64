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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semtree/linalg.hpp"

namespace semtree {

/// Load-time vocabulary restrictions.
struct VocabFilter {
  std::optional<std::size_t> max_vocab;  // keeps the first N surviving entries
  bool drop_multiword = false;           // tokens containing '_' or ' '
  bool lowercase_fallback = false;       // lookup retries the lowercased form

  void validate() const;
};

/// Immutable vocabulary plus a dense row-major matrix of raw (unnormalized)
/// vectors. Safe to share across threads once constructed.
class EmbeddingSpace {
 public:
  EmbeddingSpace(std::vector<std::string> words, std::vector<double> matrix,
                 std::size_t dim, std::string source_tag = {},
                 bool lowercase_fallback = false);

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& source_tag() const noexcept { return source_tag_; }
  bool lowercase_fallback() const noexcept { return lowercase_fallback_; }
  const std::vector<std::string>& words() const noexcept { return words_; }

  const std::string& word(std::size_t i) const { return words_.at(i); }
  VectorView row(std::size_t i) const;
  double row_norm(std::size_t i) const { return norms_.at(i); }

  /// Exact token match.
  std::optional<std::size_t> index_of(std::string_view word) const;
  /// Exact match, then the lowercased form when fallback is enabled.
  std::optional<std::size_t> resolve(std::string_view word) const;
  /// Like resolve, but throws OutOfVocabulary.
  std::size_t require(std::string_view word) const;

  VectorView lookup(std::string_view word) const { return row(require(word)); }

 private:
  std::vector<std::string> words_;
  std::vector<double> matrix_;
  std::vector<double> norms_;
  std::size_t dim_;
  std::string source_tag_;
  bool lowercase_fallback_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// ASCII lowercase; bytes >= 0x80 are left untouched.
std::string ascii_lower(std::string_view s);

EmbeddingSpace load_word2vec_binary(const std::filesystem::path& path,
                                    const VocabFilter& filter = {});
EmbeddingSpace load_glove_text(const std::filesystem::path& path,
                               const VocabFilter& filter = {});

/// Writes the word2vec binary layout (values narrowed to float32).
void write_word2vec_binary(const std::filesystem::path& path,
                           const EmbeddingSpace& space);
/// GloVe text layout, values printed with round-trip float32 precision.
void write_glove_text(const std::filesystem::path& path,
                      const EmbeddingSpace& space);

struct Neighbor {
  std::string word;
  std::size_t index;
  double score;
};

/// Top-k vocabulary entries by cosine to `q`, descending, ties broken by
/// token. Excluded entries are skipped. Throws ZeroQueryVector.
std::vector<Neighbor> cosine_neighbors(
    const EmbeddingSpace& space, VectorView q, std::size_t k,
    const std::unordered_set<std::string>& exclude = {});

/// Same as cosine_neighbors with exclusions given as row indices.
std::vector<Neighbor> cosine_neighbors_by_index(
    const EmbeddingSpace& space, VectorView q, std::size_t k,
    const std::vector<std::size_t>& exclude);

}  // namespace semtree

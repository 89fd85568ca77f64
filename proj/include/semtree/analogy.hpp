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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semtree/corpora.hpp"
#include "semtree/embedding.hpp"

namespace semtree {

enum class AnalogyMethod { VecOfAdd, VecOfMul, VecOfAvr, SsnBranch, SsnFilter };

std::string method_name(AnalogyMethod m);
AnalogyMethod parse_analogy_method(const std::string& name);
const std::vector<AnalogyMethod>& all_analogy_methods();

struct AnalogyAnswer {
  std::string word;
  std::size_t index;
  double score;
  bool fell_back = false;  // SsnFilter answered through SsnBranch
};

/// Highest cosine to q outside `exclude`; ties go to the smaller token.
AnalogyAnswer argmax_cosine(const EmbeddingSpace& space, VectorView q,
                            const std::vector<std::size_t>& exclude);

// Query vectors (y-hat) before the argmax; exposed for inspection and tests.

/// y1 - x1 + x2.
Vector vec_of_add_query(const EmbeddingSpace& space, const std::string& x1,
                        const std::string& y1, const std::string& x2);
/// x2 + mean_i (y_i - x_i).
Vector vec_of_avr_query(const EmbeddingSpace& space,
                        const std::vector<std::pair<std::string, std::string>>& pairs,
                        const std::string& x2);
/// (x2 - root(X)) + root(Y).
Vector ssn_branch_query(const EmbeddingSpace& space,
                        const std::vector<std::string>& xs,
                        const std::vector<std::string>& ys, const std::string& x2);

struct FilterQuery {
  Vector y_hat;
  bool fell_back = false;
};

/// root over the branches of x2 in the trees (x2, x_i) for every other x_i,
/// plus root(Y). Falls back to ssn_branch_query when that root is degenerate.
FilterQuery ssn_filter_query(const EmbeddingSpace& space,
                             const std::vector<std::string>& xs,
                             const std::vector<std::string>& ys,
                             const std::string& x2);

AnalogyAnswer vec_of_add(const EmbeddingSpace& space, const std::string& x1,
                         const std::string& y1, const std::string& x2,
                         bool exclude_inputs = true);

/// argmax s(y,y1) s(y,x2) / (s(y,x1) + epsilon) with s = (1 + cos) / 2.
AnalogyAnswer vec_of_mul(const EmbeddingSpace& space, const std::string& x1,
                         const std::string& y1, const std::string& x2,
                         double epsilon = 1e-3, bool exclude_inputs = true);

/// The caller removes the query pair (x2, y2) from `pairs`.
AnalogyAnswer vec_of_avr(const EmbeddingSpace& space,
                         const std::vector<std::pair<std::string, std::string>>& pairs,
                         const std::string& x2);

/// x2 must be in xs; the caller removes y2 from ys.
AnalogyAnswer ssn_branch(const EmbeddingSpace& space,
                         const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys, const std::string& x2);

AnalogyAnswer ssn_filter(const EmbeddingSpace& space,
                         const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys, const std::string& x2);

struct AnalogyOptions {
  bool exclude_inputs = true;
  double epsilon = 1e-3;
};

struct SectionScore {
  std::string name;
  std::size_t total = 0;
  std::size_t answered = 0;
  std::size_t correct = 0;
  std::size_t errors = 0;     // answered but the method raised
  std::size_t fallbacks = 0;  // SsnFilter questions answered via SsnBranch

  std::optional<double> accuracy() const;
};

struct AnalogyReport {
  AnalogyMethod method;
  std::string source_tag;
  std::size_t vocab_size = 0;
  AnalogyOptions options;
  std::vector<SectionScore> sections;
  std::size_t total = 0;
  std::size_t answered = 0;
  std::size_t correct = 0;

  std::optional<double> accuracy() const;
  double coverage() const;
};

/// Questions with any out-of-vocabulary word are skipped (coverage).
/// Set-based methods use every pair of the question's section with y2's
/// pairs removed: X = their x words, Y = their y words.
AnalogyReport run_analogy_benchmark(const EmbeddingSpace& space,
                                    const AnalogyCorpus& corpus,
                                    AnalogyMethod method,
                                    const AnalogyOptions& options = {});

nlohmann::ordered_json to_json(const AnalogyReport& report);
/// Rows are methods, columns are embedding sources.
std::string to_tsv(const std::vector<AnalogyReport>& reports);

}  // namespace semtree

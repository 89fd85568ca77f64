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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "semtree/corpora.hpp"
#include "semtree/embedding.hpp"

namespace semtree {

struct Split {
  std::vector<std::string> examples;
  std::vector<std::string> held_out;
};

/// max(1, round(fraction * |members|)) examples drawn uniformly without
/// replacement; deterministic per seed. Members must already be filtered to
/// the vocabulary.
Split sample_split(const std::vector<std::string>& members, double fraction,
                   std::uint64_t seed);

std::size_t example_count(std::size_t members, double fraction);

struct Completion {
  std::vector<std::string> tokens;  // sorted, unique
  bool fell_back = false;           // degenerate root; examples only
};

/// examples united with the children of their root.
Completion complete_category(const EmbeddingSpace& space,
                             const std::vector<std::string>& examples);

/// Set F1; 0 when `predicted` is empty. Throws EmptyGold.
double f1_set(const std::vector<std::string>& predicted,
              const std::vector<std::string>& gold);

struct SvmParams {
  double lambda = 1e-4;
  std::size_t epochs = 20;
  std::uint64_t seed = 0;
};

struct LinearModel {
  Vector weights;
  double bias = 0.0;

  double decision(VectorView x) const;
  bool classify(VectorView x) const { return decision(x) > 0.0; }
};

/// Primal hinge loss with L2 regularization, minimized by Pegasos stochastic
/// subgradient steps (step 1 / (lambda t), projection onto the
/// 1/sqrt(lambda) ball). The bias is an extra constant-1 feature.
LinearModel train_linear_svm(const std::vector<Vector>& positives,
                             const std::vector<Vector>& negatives,
                             const SvmParams& params);

/// Examples plus every vocabulary word the trained model labels positive.
/// Negatives are drawn from vocabulary minus examples, clamped to what is
/// available.
std::vector<std::string> svm_complete_category(
    const EmbeddingSpace& space, const std::vector<std::string>& examples,
    std::size_t n_negatives, const SvmParams& params);

enum class CategoryMethod { Baseline, Ssn, Svm100, Svm500 };

std::string method_name(CategoryMethod m);
CategoryMethod parse_category_method(const std::string& name);

struct CategoryBenchmarkOptions {
  std::vector<double> fractions{0.1, 0.2, 0.3, 0.4};
  std::vector<CategoryMethod> methods{CategoryMethod::Baseline,
                                      CategoryMethod::Ssn, CategoryMethod::Svm100,
                                      CategoryMethod::Svm500};
  std::size_t n_runs = 5;
  std::uint64_t base_seed = 0;
  double svm_lambda = 1e-4;
  std::size_t svm_epochs = 20;
};

struct CategoryScore {
  double fraction;
  std::string category;
  CategoryMethod method;
  std::size_t n_examples;
  std::size_t n_members;
  double mean_f1;
  std::vector<double> run_f1;
};

struct CategoryEvalReport {
  std::string corpus;
  std::string source_tag;
  std::size_t vocab_size = 0;
  CategoryBenchmarkOptions options;
  std::vector<CategoryScore> scores;     // fraction, category, method order
  std::vector<std::string> skipped;      // emptied by vocabulary filtering
  std::map<std::string, std::size_t> dropped_members;  // per category
  std::size_t ssn_fallbacks = 0;

  /// Mean over categories of the per-category mean F1.
  double mean_f1(double fraction, CategoryMethod method) const;
};

/// Split seed for (category, run) is derive_seed(base_seed, category, run);
/// every method sees the same split.
CategoryEvalReport run_category_benchmark(const EmbeddingSpace& space,
                                          const CategoryCorpus& corpus,
                                          const CategoryBenchmarkOptions& opts);

nlohmann::ordered_json to_json(const CategoryEvalReport& report);
/// Rows are methods, columns are fractions.
std::string to_tsv(const CategoryEvalReport& report);

}  // namespace semtree

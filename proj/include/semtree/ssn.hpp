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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "semtree/decomp.hpp"
#include "semtree/embedding.hpp"

namespace semtree {

/// A named node or edge vector of a network, e.g. "alpha" or "gamma3".
struct NamedVector {
  std::string name;
  Vector value;
};

// Branch names follow support order inside each constituent tree.

/// Two lower trees over (v1, v2) and (v3, v4) whose roots b and c support a
/// top tree with root alpha.
struct BinaryTreeSsn {
  SemanticTree lower_left;
  SemanticTree lower_right;
  SemanticTree top;

  const Vector& alpha() const { return top.alpha(); }
  const Vector& b() const { return lower_left.alpha(); }
  const Vector& c() const { return lower_right.alpha(); }
  /// gamma1..gamma4 indexed 0..3.
  const Vector& gamma(std::size_t i) const;

  std::vector<NamedVector> nodes() const;
};

/// Left tree over (v1, v2), right tree over (v2, v3) sharing the middle word,
/// and a top tree over their roots.
struct TernaryTreeSsn {
  SemanticTree left;
  SemanticTree right;
  SemanticTree top;

  const Vector& alpha() const { return top.alpha(); }
  const Vector& b() const { return left.alpha(); }
  const Vector& c() const { return right.alpha(); }
  const Vector& gamma(std::size_t i) const;

  std::vector<NamedVector> nodes() const;
};

/// Ring of trees over (v1,v2), (v2,v3), (v3,v4), (v4,v1).
struct QuadRelationSsn {
  std::array<SemanticTree, 4> trees;

  const Vector& alpha(std::size_t i) const { return trees.at(i).alpha(); }
  /// beta1..beta8 indexed 0..7; two per tree in support order.
  const Vector& beta(std::size_t i) const;

  std::vector<NamedVector> nodes() const;
};

BinaryTreeSsn binary_tree(const EmbeddingSpace& space,
                          const std::vector<std::string>& words);
TernaryTreeSsn ternary_tree(const EmbeddingSpace& space,
                            const std::vector<std::string>& words);
QuadRelationSsn quad_relation(const EmbeddingSpace& space,
                              const std::vector<std::string>& words);

struct NodeReport {
  std::string name;
  double norm = 0.0;
  std::size_t total_children = 0;  // before capping
  std::vector<Child> children;     // capped, margin-ranked
};

struct SsnReport {
  std::string shape;
  std::vector<std::string> words;
  std::vector<NodeReport> nodes;
};

/// Children (capped at k_cap) and norm for every named vector. Zero vectors
/// get an empty child list since every word trivially contains them.
SsnReport describe(const std::vector<NamedVector>& nodes,
                   const EmbeddingSpace& space, std::size_t k_cap);

/// {"shape", "words", "nodes": {name: {norm, count, children: [{word, margin}]}}}
nlohmann::ordered_json to_json(const SsnReport& report);

}  // namespace semtree

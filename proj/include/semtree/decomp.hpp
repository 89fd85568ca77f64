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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semtree/embedding.hpp"
#include "semtree/linalg.hpp"

namespace semtree {

/// delta is a sub-vector of v iff the projection of v onto delta is at least
/// as long as delta itself: delta . v >= |delta|^2. Equality counts.
bool is_subvector(VectorView delta, VectorView v);

/// delta . v - |delta|^2; non-negative exactly when is_subvector holds.
double subvector_margin(VectorView delta, VectorView v);

struct Child {
  std::string word;
  std::size_t index;
  double margin;
};

struct SubVectorReport {
  Vector delta;
  std::vector<Child> children;  // margin descending, ties by token

  std::size_t count() const noexcept { return children.size(); }
};

/// Every vocabulary entry having delta as a sub-vector. Throws ZeroDelta.
SubVectorReport children(const EmbeddingSpace& space, VectorView delta);

struct Root {
  Vector alpha;       // v_min * alpha_unit
  Vector alpha_unit;  // direction of the support sum
  double v_min = 0.0;
};

/// Root of a support set: the sum direction scaled to the smallest support
/// projection onto it.
///
/// A single support is its own root, returned bit-exact. For larger sets
/// v_min is lowered by a few ulps when rounding would otherwise leave some
/// support failing `is_subvector(alpha, v_i)` or
/// `is_subvector(v_i - alpha, v_i)`, so both predicates hold exactly in
/// working precision for every support.
///
/// Throws ZeroSum when the supports cancel and DegenerateSupportSet when
/// some support has a non-positive projection.
Root compute_root(std::span<const Vector> support);
Vector root(std::span<const Vector> support);

/// Support vectors, their shared root, and per-support branches.
class SemanticTree {
 public:
  /// Needs at least two supports of equal dimension.
  static SemanticTree build(std::vector<std::pair<std::string, Vector>> support);

  std::size_t size() const noexcept { return support_.size(); }
  const std::string& token(std::size_t i) const { return support_.at(i).first; }
  const Vector& support(std::size_t i) const { return support_.at(i).second; }
  const Vector& alpha() const noexcept { return root_.alpha; }
  const Vector& alpha_unit() const noexcept { return root_.alpha_unit; }
  double v_min() const noexcept { return root_.v_min; }
  const Vector& branch(std::size_t i) const { return branches_.at(i); }
  const std::vector<Vector>& branches() const noexcept { return branches_; }

  /// O_ij = v_j - v_i.
  Vector offset(std::size_t i, std::size_t j) const;

 private:
  SemanticTree() = default;

  std::vector<std::pair<std::string, Vector>> support_;
  Root root_;
  std::vector<Vector> branches_;
};

/// Convenience: tree over vocabulary tokens (resolved through the space).
SemanticTree build_tree(const EmbeddingSpace& space,
                        const std::vector<std::string>& tokens);

/// Branch i with its component along alpha_unit removed.
Vector orthogonal_branch(const SemanticTree& tree, std::size_t i);

/// v - root(support).
Vector residual(VectorView v, std::span<const Vector> support);

/// (c v, (1 - c) v) for c in [0, 1]. Throws ScaleOutOfRange.
std::pair<Vector, Vector> scale_split(VectorView v, double c);

}  // namespace semtree

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

#include "semtree/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semtree/error.hpp"

namespace semtree {

bool is_subvector(VectorView delta, VectorView v) {
  return dot(delta, v) >= squared_norm(delta);
}

double subvector_margin(VectorView delta, VectorView v) {
  return dot(delta, v) - squared_norm(delta);
}

SubVectorReport children(const EmbeddingSpace& space, VectorView delta) {
  if (delta.size() != space.dim()) {
    throw Error(Errc::DimensionMismatch, "delta has dim " +
                                             std::to_string(delta.size()) +
                                             ", space has " +
                                             std::to_string(space.dim()));
  }
  const double dd = squared_norm(delta);
  if (dd == 0.0) throw Error(Errc::ZeroDelta, "children of the zero vector");

  SubVectorReport report;
  report.delta.assign(delta.begin(), delta.end());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double proj = dot(delta, space.row(i));
    if (proj >= dd) report.children.push_back({space.word(i), i, proj - dd});
  }
  std::sort(report.children.begin(), report.children.end(),
            [](const Child& a, const Child& b) {
              if (a.margin != b.margin) return a.margin > b.margin;
              return a.word < b.word;
            });
  return report;
}

namespace {

bool root_holds_for(VectorView alpha, std::span<const Vector> support) {
  for (const auto& v : support) {
    if (!is_subvector(alpha, v)) return false;
    if (!is_subvector(sub(v, alpha), v)) return false;
  }
  return true;
}

}  // namespace

Root compute_root(std::span<const Vector> support) {
  if (support.empty()) {
    throw Error(Errc::InvalidArgument, "root of an empty support set");
  }
  const std::size_t dim = support.front().size();
  for (const auto& v : support) require_same_dim(support.front(), v);

  Root r;
  if (support.size() == 1) {
    const double n = norm(support.front());
    if (n == 0.0) throw Error(Errc::ZeroSum, "single zero support vector");
    r.alpha = support.front();
    r.alpha_unit = scale(r.alpha, 1.0 / n);
    r.v_min = n;
    return r;
  }

  Vector total = sum(support, dim);
  const double total_norm = norm(total);
  if (total_norm == 0.0) throw Error(Errc::ZeroSum, "support vectors cancel");
  r.alpha_unit = scale(total, 1.0 / total_norm);

  double v_min = std::numeric_limits<double>::infinity();
  for (const auto& v : support) v_min = std::min(v_min, dot(r.alpha_unit, v));
  if (!(v_min > 0.0)) {
    throw Error(Errc::DegenerateSupportSet,
                "smallest projection onto the sum direction is " +
                    std::to_string(v_min));
  }

  r.v_min = v_min;
  r.alpha = scale(r.alpha_unit, v_min);
  // Rounding in alpha can put the minimizing support a few ulps on the wrong
  // side of the predicate; shrink until both identities hold exactly.
  double shrink = std::numeric_limits<double>::epsilon();
  while (!root_holds_for(r.alpha, support)) {
    r.v_min = v_min * (1.0 - shrink);
    r.alpha = scale(r.alpha_unit, r.v_min);
    shrink *= 2.0;
    if (shrink > 1e-6) {
      throw Error(Errc::DegenerateSupportSet,
                  "root does not hold for every support");
    }
  }
  return r;
}

Vector root(std::span<const Vector> support) {
  return compute_root(support).alpha;
}

SemanticTree SemanticTree::build(
    std::vector<std::pair<std::string, Vector>> support) {
  if (support.size() < 2) {
    throw Error(Errc::InvalidArgument, "a semantic tree needs >= 2 supports");
  }
  std::vector<Vector> vs;
  vs.reserve(support.size());
  for (const auto& [_, v] : support) vs.push_back(v);

  SemanticTree t;
  t.root_ = compute_root(vs);
  t.branches_.reserve(vs.size());
  for (const auto& v : vs) t.branches_.push_back(sub(v, t.root_.alpha));
  t.support_ = std::move(support);
  return t;
}

Vector SemanticTree::offset(std::size_t i, std::size_t j) const {
  return sub(support(j), support(i));
}

SemanticTree build_tree(const EmbeddingSpace& space,
                        const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, Vector>> support;
  support.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto row = space.lookup(t);
    support.emplace_back(t, Vector(row.begin(), row.end()));
  }
  return SemanticTree::build(std::move(support));
}

Vector orthogonal_branch(const SemanticTree& tree, std::size_t i) {
  if (i >= tree.size()) {
    throw Error(Errc::IndexOutOfRange, "branch " + std::to_string(i) + " of " +
                                           std::to_string(tree.size()));
  }
  const Vector& b = tree.branch(i);
  const Vector& u = tree.alpha_unit();
  Vector out = b;
  axpy(-dot(b, u), u, out);
  return out;
}

Vector residual(VectorView v, std::span<const Vector> support) {
  Vector r = root(support);
  return sub(v, r);
}

std::pair<Vector, Vector> scale_split(VectorView v, double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(Errc::ScaleOutOfRange, std::to_string(c));
  }
  Vector first = scale(v, c);
  Vector second = sub(v, first);
  return {std::move(first), std::move(second)};
}

}  // namespace semtree

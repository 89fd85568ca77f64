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
#include <vector>

namespace semtree {

/// Dense real vector in working precision.
using Vector = std::vector<double>;
using VectorView = std::span<const double>;

// All reductions accumulate left to right in index order, so equal inputs
// always give bit-identical results regardless of the caller.
double dot(VectorView a, VectorView b);
double squared_norm(VectorView a);
double norm(VectorView a);

/// 0 when either side has zero norm.
double cosine(VectorView a, VectorView b);
double cosine(VectorView a, double norm_a, VectorView b, double norm_b);

Vector add(VectorView a, VectorView b);
Vector sub(VectorView a, VectorView b);
Vector scale(VectorView a, double c);
void axpy(double c, VectorView x, std::span<double> y);

/// Sum of the vectors in order; empty input yields a zero vector of `dim`.
Vector sum(std::span<const Vector> vs, std::size_t dim);

void require_same_dim(VectorView a, VectorView b);

}  // namespace semtree

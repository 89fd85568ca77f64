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

#include "semtree/linalg.hpp"

#include <cmath>
#include <string>

#include "semtree/error.hpp"

namespace semtree {

void require_same_dim(VectorView a, VectorView b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

double dot(VectorView a, VectorView b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double squared_norm(VectorView a) {
  double acc = 0.0;
  for (double x : a) acc += x * x;
  return acc;
}

double norm(VectorView a) { return std::sqrt(squared_norm(a)); }

double cosine(VectorView a, double norm_a, VectorView b, double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot(a, b) / (norm_a * norm_b);
}

double cosine(VectorView a, VectorView b) {
  return cosine(a, norm(a), b, norm(b));
}

Vector add(VectorView a, VectorView b) {
  require_same_dim(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(VectorView a, VectorView b) {
  require_same_dim(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(VectorView a, double c) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

void axpy(double c, VectorView x, std::span<double> y) {
  require_same_dim(x, VectorView(y));
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

Vector sum(std::span<const Vector> vs, std::size_t dim) {
  Vector out(dim, 0.0);
  for (const auto& v : vs) axpy(1.0, v, out);
  return out;
}

}  // namespace semtree

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
#include <functional>
#include <random>
#include <string_view>
#include <vector>

namespace semtree {

/// Stable 64-bit seed mixing (FNV-1a over the label, then splitmix64), so
/// per-run seeds do not depend on std::hash or scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                          std::uint64_t run);

/// mt19937_64 with portable helpers; the std distributions are
/// implementation-defined, these are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n) by rejection sampling.
  std::size_t uniform_index(std::size_t n);
  /// k distinct indices from [0, n) in draw order (partial Fisher-Yates).
  std::vector<std::size_t> sample(std::size_t n, std::size_t k);
  void shuffle(std::vector<std::size_t>& v);

 private:
  std::mt19937_64 engine_;
};

/// 0 means "use the hardware concurrency".
void set_num_threads(std::size_t n);
std::size_t num_threads();

/// Runs body(i) for i in [0, n) on up to num_threads() workers. Items are
/// claimed in contiguous blocks; callers write results into per-index slots
/// so output never depends on the schedule. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace semtree

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

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "semtree/embedding.hpp"

namespace fixtures {

inline semtree::EmbeddingSpace space(
    const std::vector<std::pair<std::string, std::vector<double>>>& rows,
    bool lowercase_fallback = false) {
  std::vector<std::string> words;
  std::vector<double> data;
  for (const auto& [w, v] : rows) {
    words.push_back(w);
    data.insert(data.end(), v.begin(), v.end());
  }
  const std::size_t dim = rows.front().second.size();
  return semtree::EmbeddingSpace(std::move(words), std::move(data), dim, "fixture",
                                 lowercase_fallback);
}

inline std::vector<double> gaussian(std::mt19937_64& rng, std::size_t dim,
                                    double mean = 0.0, double sd = 1.0) {
  std::normal_distribution<double> n(mean, sd);
  std::vector<double> v(dim);
  for (double& x : v) x = n(rng);
  return v;
}

/// Random space of n words "w0".."w{n-1}".
inline semtree::EmbeddingSpace random_space(std::uint64_t seed, std::size_t n,
                                            std::size_t dim) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, std::vector<double>>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.emplace_back("w" + std::to_string(i), gaussian(rng, dim));
  }
  return space(rows);
}

/// Fresh path under the system temp directory.
inline std::filesystem::path temp_path(const std::string& name) {
  static std::uint64_t counter = 0;
  auto dir = std::filesystem::temp_directory_path() / "semtree-tests";
  std::filesystem::create_directories(dir);
  return dir / (std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" + name);
}

}  // namespace fixtures

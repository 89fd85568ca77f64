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

#include "semtree/ssn.hpp"

#include "semtree/error.hpp"

namespace semtree {

namespace {

void require_arity(const std::vector<std::string>& words, std::size_t n,
                   const char* shape) {
  if (words.size() != n) {
    throw Error(Errc::ArityMismatch, std::string(shape) + " needs " +
                                         std::to_string(n) + " words, got " +
                                         std::to_string(words.size()));
  }
}

// Tags degenerate constituents with the tree that failed.
template <typename F>
SemanticTree constituent(const char* label, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateSupportSet || e.code() == Errc::ZeroSum) {
      throw Error(e.code(), std::string(label) + " tree: " + e.detail());
    }
    throw;
  }
}

SemanticTree pair_tree(const std::string& name_a, const Vector& a,
                       const std::string& name_b, const Vector& b) {
  return SemanticTree::build({{name_a, a}, {name_b, b}});
}

Vector row_of(const EmbeddingSpace& space, const std::string& w) {
  auto r = space.lookup(w);
  return Vector(r.begin(), r.end());
}

}  // namespace

const Vector& BinaryTreeSsn::gamma(std::size_t i) const {
  if (i >= 4) throw Error(Errc::IndexOutOfRange, "gamma" + std::to_string(i + 1));
  return i < 2 ? lower_left.branch(i) : lower_right.branch(i - 2);
}

std::vector<NamedVector> BinaryTreeSsn::nodes() const {
  return {{"alpha", alpha()},      {"b", b()},
          {"c", c()},              {"beta1", top.branch(0)},
          {"beta2", top.branch(1)}, {"gamma1", gamma(0)},
          {"gamma2", gamma(1)},    {"gamma3", gamma(2)},
          {"gamma4", gamma(3)}};
}

const Vector& TernaryTreeSsn::gamma(std::size_t i) const {
  if (i >= 4) throw Error(Errc::IndexOutOfRange, "gamma" + std::to_string(i + 1));
  return i < 2 ? left.branch(i) : right.branch(i - 2);
}

std::vector<NamedVector> TernaryTreeSsn::nodes() const {
  return {{"alpha", alpha()},      {"b", b()},
          {"c", c()},              {"beta1", top.branch(0)},
          {"beta2", top.branch(1)}, {"gamma1", gamma(0)},
          {"gamma2", gamma(1)},    {"gamma3", gamma(2)},
          {"gamma4", gamma(3)}};
}

const Vector& QuadRelationSsn::beta(std::size_t i) const {
  if (i >= 8) throw Error(Errc::IndexOutOfRange, "beta" + std::to_string(i + 1));
  return trees[i / 2].branch(i % 2);
}

std::vector<NamedVector> QuadRelationSsn::nodes() const {
  std::vector<NamedVector> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back({"alpha" + std::to_string(i + 1), alpha(i)});
  }
  for (std::size_t i = 0; i < 8; ++i) {
    out.push_back({"beta" + std::to_string(i + 1), beta(i)});
  }
  return out;
}

BinaryTreeSsn binary_tree(const EmbeddingSpace& space,
                          const std::vector<std::string>& words) {
  require_arity(words, 4, "binary");
  std::vector<Vector> v;
  for (const auto& w : words) v.push_back(row_of(space, w));

  auto left = constituent("lower-left", [&] {
    return pair_tree(words[0], v[0], words[1], v[1]);
  });
  auto right = constituent("lower-right", [&] {
    return pair_tree(words[2], v[2], words[3], v[3]);
  });
  auto top = constituent("top", [&] {
    return pair_tree("b", left.alpha(), "c", right.alpha());
  });
  return {std::move(left), std::move(right), std::move(top)};
}

TernaryTreeSsn ternary_tree(const EmbeddingSpace& space,
                            const std::vector<std::string>& words) {
  require_arity(words, 3, "ternary");
  std::vector<Vector> v;
  for (const auto& w : words) v.push_back(row_of(space, w));

  auto left = constituent("left", [&] {
    return pair_tree(words[0], v[0], words[1], v[1]);
  });
  auto right = constituent("right", [&] {
    return pair_tree(words[1], v[1], words[2], v[2]);
  });
  auto top = constituent("top", [&] {
    return pair_tree("b", left.alpha(), "c", right.alpha());
  });
  return {std::move(left), std::move(right), std::move(top)};
}

QuadRelationSsn quad_relation(const EmbeddingSpace& space,
                              const std::vector<std::string>& words) {
  require_arity(words, 4, "quad");
  std::vector<Vector> v;
  for (const auto& w : words) v.push_back(row_of(space, w));

  static constexpr const char* kLabels[] = {"ring-1", "ring-2", "ring-3",
                                            "ring-4"};
  auto ring = [&](std::size_t i) {
    const std::size_t j = (i + 1) % 4;
    return constituent(kLabels[i], [&] {
      return pair_tree(words[i], v[i], words[j], v[j]);
    });
  };
  return {{ring(0), ring(1), ring(2), ring(3)}};
}

SsnReport describe(const std::vector<NamedVector>& nodes,
                   const EmbeddingSpace& space, std::size_t k_cap) {
  SsnReport report;
  report.nodes.reserve(nodes.size());
  for (const auto& node : nodes) {
    NodeReport nr;
    nr.name = node.name;
    nr.norm = norm(node.value);
    if (nr.norm > 0.0 && k_cap > 0) {
      auto ch = children(space, node.value);
      nr.total_children = ch.count();
      if (ch.children.size() > k_cap) ch.children.resize(k_cap);
      nr.children = std::move(ch.children);
    } else if (nr.norm > 0.0) {
      nr.total_children = children(space, node.value).count();
    }
    report.nodes.push_back(std::move(nr));
  }
  return report;
}

nlohmann::ordered_json to_json(const SsnReport& report) {
  nlohmann::ordered_json j;
  j["shape"] = report.shape;
  j["words"] = report.words;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::object();
  for (const auto& n : report.nodes) {
    nlohmann::ordered_json node;
    node["norm"] = n.norm;
    node["count"] = n.total_children;
    auto& kids = node["children"] = nlohmann::ordered_json::array();
    for (const auto& c : n.children) {
      kids.push_back({{"word", c.word}, {"margin", c.margin}});
    }
    nodes[n.name] = std::move(node);
  }
  return j;
}

}  // namespace semtree

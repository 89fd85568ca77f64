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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "semtree/decomp.hpp"
#include "semtree/error.hpp"

using semtree::Errc;
using semtree::Error;
using semtree::Vector;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Io;
}

double max_abs_diff(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Random support sets that share a dominant direction, so v_min > 0.
std::vector<Vector> random_support(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  auto common = fixtures::gaussian(rng, dim, 0.0, 1.0);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = fixtures::gaussian(rng, dim, 0.0, 0.6);
    for (std::size_t j = 0; j < dim; ++j) v[j] += common[j];
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("is_subvector trivial cases") {
  Vector v{1.0, -2.0, 0.5};
  CHECK(semtree::is_subvector(v, v));
  CHECK(semtree::is_subvector(Vector{0, 0, 0}, v));
  CHECK_FALSE(semtree::is_subvector(semtree::scale(v, 1.5), v));
  CHECK(error_of([&] { semtree::is_subvector(Vector{1, 2}, v); }) == Errc::DimensionMismatch);
}

TEST_CASE("scaling law: c v is a sub-vector of v iff 0 <= c <= 1") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> cdist(-1.0, 2.0);
  for (int t = 0; t < 2000; ++t) {
    auto v = fixtures::gaussian(rng, 1 + t % 20);
    const double c = cdist(rng);
    CHECK(semtree::is_subvector(semtree::scale(v, c), v) == (c >= 0.0 && c <= 1.0));
  }
  auto v = fixtures::gaussian(rng, 5);
  CHECK(semtree::is_subvector(semtree::scale(v, 0.0), v));
  CHECK(semtree::is_subvector(semtree::scale(v, 1.0), v));
}

TEST_CASE("children of a small space") {
  auto s = fixtures::space({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 1}}});
  auto r = semtree::children(s, Vector{0.5, 0.5});
  REQUIRE(r.count() == 3);
  CHECK(r.children[0].word == "c");
  CHECK(r.children[0].margin == doctest::Approx(0.5));
  CHECK(r.children[1].word == "a");
  CHECK(r.children[1].margin == 0.0);
  CHECK(r.children[2].word == "b");
  CHECK(r.children[2].margin == 0.0);

  CHECK(error_of([&] { semtree::children(s, Vector{0, 0}); }) == Errc::ZeroDelta);
  CHECK(error_of([&] { semtree::children(s, Vector{1, 0, 0}); }) == Errc::DimensionMismatch);
}

TEST_CASE("children contain the query word itself and match the naive scan") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = fixtures::random_space(seed, 20, 6);
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto delta = oracle::row(s, i);
      auto r = semtree::children(s, delta);
      CHECK(std::any_of(r.children.begin(), r.children.end(),
                        [&](const auto& c) { return c.word == s.word(i); }));
    }
    std::mt19937_64 rng(seed);
    auto delta = fixtures::gaussian(rng, 6, 0.0, 0.3);
    auto expect = oracle::children(s, delta);
    auto got = semtree::children(s, delta);
    REQUIRE(got.count() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
      CHECK(got.children[k].word == expect[k].first);
      CHECK(got.children[k].margin == expect[k].second);
    }
  }
}

TEST_CASE("root of two unit axes is the bisector") {
  std::vector<Vector> s{{1, 0}, {0, 1}};
  auto a = semtree::root(s);
  CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("root of a single vector is the vector") {
  Vector v{3.0, -1.0, 2.5};
  CHECK(semtree::root(std::vector<Vector>{v}) == v);
}

TEST_CASE("root errors") {
  CHECK(error_of([] { semtree::root(std::vector<Vector>{{1, 0}, {-1, 0}}); }) == Errc::ZeroSum);
  // (1,0) and (-0.9, 0.1): sum points at (0.1, 0.1), first projection positive,
  // second negative.
  CHECK(error_of([] {
          semtree::root(std::vector<Vector>{{1, 0}, {-0.9, 0.1}});
        }) == Errc::DegenerateSupportSet);
  CHECK(error_of([] { semtree::root(std::vector<Vector>{{1, 0}, {1, 0, 0}}); }) ==
        Errc::DimensionMismatch);
  CHECK(error_of([] { semtree::root(std::vector<Vector>{}); }) == Errc::InvalidArgument);
}

TEST_CASE("equal-norm pair: antipodal branches orthogonal to the root") {
  auto t = semtree::SemanticTree::build({{"x", {1, 0}}, {"y", {0, 1}}});
  CHECK(t.branch(0)[0] == doctest::Approx(0.5));
  CHECK(t.branch(0)[1] == doctest::Approx(-0.5));
  CHECK(semtree::norm(semtree::add(t.branch(0), t.branch(1))) <= 1e-12);
  CHECK(std::abs(semtree::dot(t.alpha(), t.branch(0))) <= 1e-12);
  auto perp = semtree::orthogonal_branch(t, 0);
  CHECK(max_abs_diff(perp, t.branch(0)) <= 1e-12);
  CHECK(t.offset(0, 1) == Vector{-1, 1});
}

TEST_CASE("build_tree errors") {
  CHECK(error_of([] { semtree::SemanticTree::build({{"a", {1, 0}}, {"b", {-1, 0}}}); }) ==
        Errc::ZeroSum);
  CHECK(error_of([] { semtree::SemanticTree::build({{"a", {1, 0}}}); }) ==
        Errc::InvalidArgument);
  CHECK(error_of([] { semtree::SemanticTree::build({{"a", {1, 0}}, {"b", {1, 0, 0}}}); }) ==
        Errc::DimensionMismatch);
  auto t = semtree::SemanticTree::build({{"a", {1, 0}}, {"b", {0, 1}}});
  CHECK(error_of([&] { semtree::orthogonal_branch(t, 2); }) == Errc::IndexOutOfRange);
}

TEST_CASE("tree invariants on random support sets") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = std::array<std::size_t, 3>{3, 10, 300}[t % 3];
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    auto support = random_support(rng, n, dim);
    std::vector<std::pair<std::string, Vector>> named;
    for (std::size_t i = 0; i < n; ++i) named.emplace_back("v" + std::to_string(i), support[i]);
    Vector alpha;
    try {
      alpha = semtree::root(support);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateSupportSet);
      continue;
    }
    auto tree = semtree::SemanticTree::build(named);
    CHECK(tree.v_min() > 0.0);
    CHECK(tree.alpha() == semtree::scale(tree.alpha_unit(), tree.v_min()));

    // independent root agrees up to rounding
    auto ref = oracle::root(support);
    CHECK(max_abs_diff(ref, tree.alpha()) <= 1e-9 * oracle::norm(ref));

    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = tree.support(i);
      auto rebuilt = semtree::add(tree.alpha(), tree.branch(i));
      CHECK(semtree::norm(semtree::sub(rebuilt, v)) <= 1e-9 * semtree::norm(v));
      CHECK(semtree::is_subvector(tree.alpha(), v));
      CHECK(semtree::is_subvector(tree.branch(i), v));
      auto perp = semtree::orthogonal_branch(tree, i);
      CHECK(std::abs(semtree::dot(perp, tree.alpha())) <=
            1e-9 * semtree::norm(perp) * semtree::norm(tree.alpha()) + 1e-300);
    }

    // permutation invariance
    auto shuffled = support;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto alpha2 = semtree::root(shuffled);
    CHECK(max_abs_diff(alpha, alpha2) <= 1e-9 * semtree::norm(alpha));
  }
}

TEST_CASE("branch and root predicates agree on arbitrary vectors") {
  // beta = v - a is a sub-vector of v exactly when a is (algebraically).
  std::mt19937_64 rng(5);
  int agree = 0, total = 0;
  for (int t = 0; t < 2000; ++t) {
    auto v = fixtures::gaussian(rng, 7);
    auto a = fixtures::gaussian(rng, 7, 0.0, 0.5);
    const double m = semtree::subvector_margin(a, v);
    if (std::abs(m) < 1e-9) continue;  // rounding may split exact boundary cases
    ++total;
    agree += semtree::is_subvector(a, v) == semtree::is_subvector(semtree::sub(v, a), v);
  }
  CHECK(agree == total);
}

TEST_CASE("support vectors are children of their root") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<std::string, std::vector<double>>> rows;
    for (int i = 0; i < 15; ++i) rows.emplace_back("w" + std::to_string(i), fixtures::gaussian(rng, 10));
    auto common = fixtures::gaussian(rng, 10);
    for (int i = 0; i < 4; ++i) {
      auto v = fixtures::gaussian(rng, 10, 0.0, 0.5);
      for (int j = 0; j < 10; ++j) v[j] += common[j];
      rows.emplace_back("s" + std::to_string(i), v);
    }
    auto s = fixtures::space(rows);
    std::vector<std::string> names{"s0", "s1", "s2", "s3"};
    semtree::SemanticTree tree = [&] {
      try {
        return semtree::build_tree(s, names);
      } catch (const Error&) {
        return semtree::build_tree(s, {"s0", "s0"});
      }
    }();
    auto ch = semtree::children(s, tree.alpha());
    for (std::size_t i = 0; i < tree.size(); ++i) {
      CHECK(std::any_of(ch.children.begin(), ch.children.end(),
                        [&](const auto& c) { return c.word == tree.token(i); }));
    }
  }
}

TEST_CASE("residual and scale split") {
  Vector v{2.0, -1.0, 4.0};
  CHECK(semtree::norm(semtree::residual(v, std::vector<Vector>{v})) == 0.0);

  auto [a, b] = semtree::scale_split(v, 0.6);
  CHECK(a == semtree::scale(v, 0.6));
  CHECK(semtree::is_subvector(a, v));
  CHECK(semtree::is_subvector(b, v));
  CHECK(semtree::add(a, b) == v);

  auto [z0, z1] = semtree::scale_split(v, 0.0);
  CHECK(z0 == Vector{0, 0, 0});
  CHECK(z1 == v);
  auto [o0, o1] = semtree::scale_split(v, 1.0);
  CHECK(o0 == v);
  CHECK(o1 == Vector{0, 0, 0});

  CHECK(error_of([&] { semtree::scale_split(v, 1.01); }) == Errc::ScaleOutOfRange);
  CHECK(error_of([&] { semtree::scale_split(v, -0.1); }) == Errc::ScaleOutOfRange);
}

TEST_CASE("scale split components are sub-vectors and children shrink monotonically") {
  // ch(c v) grows as c shrinks: every child of the full vector is a child of
  // any fraction of it.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto s = fixtures::random_space(100 + t, 30, 5);
    auto v = oracle::row(s, 0);
    std::uniform_real_distribution<double> cd(0.0, 1.0);
    const double c = cd(rng);
    auto [part, rest] = semtree::scale_split(v, c);
    CHECK(semtree::is_subvector(part, v));
    CHECK(semtree::is_subvector(rest, v));
    if (c == 0.0) continue;
    auto full = semtree::children(s, v);
    auto frac = semtree::children(s, part);
    for (const auto& ch : full.children) {
      CHECK(std::any_of(frac.children.begin(), frac.children.end(),
                        [&](const auto& x) { return x.word == ch.word; }));
    }
  }
}

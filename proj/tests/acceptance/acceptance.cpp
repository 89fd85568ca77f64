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

// Acceptance runner: one line per criterion.
//
//   acceptance [--criterion N]
//
// Exit status is 0 when every selected criterion passes, 1 on any failure and
// 77 when everything selected was skipped for lack of pretrained vectors.
// Pretrained inputs come from the environment:
//   SEMTREE_GLOVE            GloVe text file
//   SEMTREE_WORD2VEC         GoogleNews word2vec binary file
//   SEMTREE_ANALOGY_MAX_VOCAB  vocabulary cap for the analogy runs (default 50000, 0 = none)
//   SEMTREE_GOLDENS_INFORMATIVE  report qualitative goldens without gating

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "semtree/semtree.hpp"

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Result {
  Outcome outcome = Outcome::Pass;
  std::string summary;
  std::vector<std::string> notes;
};

// Collects failures; keeps the first few messages.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 8) messages_.push_back(what);
  }
  std::size_t total() const { return total_; }
  std::size_t failed() const { return failed_; }
  void into(Result& r) const {
    if (failed_ > 0) r.outcome = Outcome::Fail;
    for (const auto& m : messages_) r.notes.push_back("failed: " + m);
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> messages_;
};

std::string fmt(double v, int prec = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

using semtree::Vector;
using Rows = std::vector<std::pair<std::string, std::vector<double>>>;

// ---------------------------------------------------------------------------
// 1: properties over random trees

Result criterion_properties() {
  Result r;
  Checks c;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // scaling law
  for (int i = 0; i < 3000; ++i) {
    const std::size_t dim = std::array<std::size_t, 3>{3, 10, 300}[i % 3];
    auto v = fixtures::gaussian(rng, dim);
    double k = -1.0 + 3.0 * unit(rng);
    if (i % 50 == 0) k = 0.0;
    if (i % 50 == 1) k = 1.0;
    const bool inside = k >= 0.0 && k <= 1.0;
    c.expect(semtree::is_subvector(semtree::scale(v, k), v) == inside,
             "scaling law at c=" + fmt(k, 6));
  }

  const std::size_t kTrees = 1000;
  std::size_t degenerate_draws = 0;
  std::size_t built = 0;
  for (std::size_t t = 0; built < kTrees; ++t) {
    const std::size_t dim = std::array<std::size_t, 3>{3, 10, 300}[built % 3];
    const std::size_t n = 2 + rng() % 5;
    auto centre = fixtures::gaussian(rng, dim);
    Rows rows;
    for (std::size_t i = 0; i < n; ++i) {
      auto v = fixtures::gaussian(rng, dim, 0.0, 0.9);
      for (std::size_t j = 0; j < dim; ++j) v[j] += centre[j];
      rows.emplace_back("s" + std::to_string(i), v);
    }
    std::vector<std::pair<std::string, Vector>> named(rows.begin(), rows.end());
    std::optional<semtree::SemanticTree> tree;
    try {
      tree = semtree::SemanticTree::build(named);
    } catch (const semtree::Error& e) {
      if (e.code() != semtree::Errc::DegenerateSupportSet) throw;
      ++degenerate_draws;
      continue;
    }
    ++built;
    const std::string tag = "tree " + std::to_string(built) + " dim " + std::to_string(dim);
    const auto& alpha = tree->alpha();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = tree->support(i);
      const auto& b = tree->branch(i);
      const double rel =
          semtree::norm(semtree::sub(semtree::add(alpha, b), v)) / semtree::norm(v);
      c.expect(rel <= 1e-9, tag + " decomposition " + std::to_string(rel));
      c.expect(semtree::is_subvector(alpha, v), tag + " root is a sub-vector");
      c.expect(semtree::is_subvector(b, v), tag + " branch is a sub-vector");
      const auto perp = semtree::orthogonal_branch(*tree, i);
      c.expect(std::abs(semtree::dot(perp, alpha)) <=
                   1e-9 * semtree::norm(perp) * semtree::norm(alpha) + 1e-300,
               tag + " orthogonal branch");
    }

    // every support is a child of the root
    Rows space_rows = rows;
    for (int d = 0; d < 20; ++d) {
      space_rows.emplace_back("d" + std::to_string(d), fixtures::gaussian(rng, dim, 0.0, 1.5));
    }
    auto space = fixtures::space(space_rows);
    std::set<std::string> kids;
    for (const auto& ch : semtree::children(space, alpha).children) kids.insert(ch.word);
    for (const auto& [w, v] : rows) c.expect(kids.count(w) == 1, tag + " support " + w + " in ch");

    // permutation invariance
    std::vector<Vector> sup;
    for (const auto& [w, v] : rows) sup.push_back(v);
    auto perm = sup;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r1 = semtree::root(sup);
    const auto r2 = semtree::root(perm);
    c.expect(semtree::norm(semtree::sub(r1, r2)) <= 1e-9 * semtree::norm(r1),
             tag + " permutation");

    // equal-norm pair: antipodal branches orthogonal to the root
    auto v1 = rows[0].second;
    auto v2 = semtree::scale(rows[1].second, semtree::norm(v1) / semtree::norm(rows[1].second));
    auto pair = semtree::SemanticTree::build({{"a", v1}, {"b", v2}});
    const auto& b1 = pair.branch(0);
    const auto& b2 = pair.branch(1);
    const double scale = std::max(1.0, semtree::norm(v1));
    c.expect(semtree::norm(semtree::add(b1, b2)) <= 1e-9 * scale, tag + " antipodal branches");
    c.expect(std::abs(semtree::dot(pair.alpha(), b1)) <=
                 1e-9 * semtree::norm(pair.alpha()) * semtree::norm(b1) + 1e-300,
             tag + " root orthogonal to branch");
    (void)t;
  }
  c.into(r);
  r.summary = std::to_string(kTrees) + " random trees over dims 3/10/300, " +
              std::to_string(c.total()) + " checks, " + std::to_string(c.failed()) +
              " failed (" + std::to_string(degenerate_draws) + " degenerate draws redrawn)";
  return r;
}

// ---------------------------------------------------------------------------
// 2: optimized paths against exhaustive recomputation

Rows planted_rows(std::mt19937_64& rng, std::size_t dim, std::size_t pairs, double noise) {
  auto offset = fixtures::gaussian(rng, dim);
  auto base = fixtures::gaussian(rng, dim);
  Rows rows;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto x = fixtures::gaussian(rng, dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] += base[j];
    auto y = x;
    auto e = fixtures::gaussian(rng, dim, 0.0, noise);
    for (std::size_t j = 0; j < dim; ++j) y[j] += offset[j] + e[j];
    rows.emplace_back("x" + std::to_string(i), x);
    rows.emplace_back("y" + std::to_string(i), y);
  }
  while (rows.size() < 20) {
    rows.emplace_back("z" + std::to_string(rows.size()), fixtures::gaussian(rng, dim, 0.0, 1.5));
  }
  return rows;
}

// Chosen word, or "degenerate" when the support sets admit no root.
std::string outcome(const std::function<std::string()>& solve) {
  try {
    return solve();
  } catch (const oracle::Degenerate&) {
    return "degenerate";
  } catch (const semtree::Error& e) {
    if (e.code() == semtree::Errc::DegenerateSupportSet) return "degenerate";
    throw;
  }
}

Result criterion_oracle() {
  Result r;
  Checks c;
  std::mt19937_64 rng(77);
  std::size_t spaces = 0, queries = 0, degenerate = 0;
  for (int round = 0; round < 60; ++round) {
    const std::size_t dim = std::array<std::size_t, 3>{3, 8, 25}[round % 3];
    const std::size_t pairs = 3 + round % 4;
    auto space = fixtures::space(planted_rows(rng, dim, pairs, 0.3 + 0.1 * (round % 7)));
    ++spaces;
    const std::string tag = "space " + std::to_string(round);

    // children of roots of random subsets and of random probes
    for (int q = 0; q < 10; ++q) {
      Vector delta;
      if (q % 2 == 0) {
        std::vector<Vector> sup;
        for (std::size_t i = 0; i < space.size(); ++i) {
          if (rng() % 3 == 0) sup.push_back(oracle::row(space, i));
        }
        if (sup.empty()) sup.push_back(oracle::row(space, 0));
        try {
          delta = semtree::root(sup);
        } catch (const semtree::Error&) {
          continue;
        }
      } else {
        delta = semtree::scale(fixtures::gaussian(rng, dim), 0.3);
      }
      auto got = semtree::children(space, delta).children;
      auto want = oracle::children(space, delta);
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i].word == want[i].first;
      c.expect(same, tag + " children");
      ++queries;
    }

    // cosine neighbors, every k
    for (int q = 0; q < 5; ++q) {
      auto probe = fixtures::gaussian(rng, dim);
      auto want = oracle::ranking(space, probe);
      for (std::size_t k = 1; k <= space.size(); k += 3) {
        auto got = semtree::cosine_neighbors(space, probe, k);
        bool same = got.size() == k;
        for (std::size_t i = 0; same && i < k; ++i) same = got[i].word == want[i].first;
        c.expect(same, tag + " neighbors k=" + std::to_string(k));
        ++queries;
      }
    }

    // analogy methods
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < pairs; ++i) xs.push_back("x" + std::to_string(i));
    for (std::size_t a = 0; a < pairs; ++a) {
      for (std::size_t b = 0; b < pairs; ++b) {
        if (a == b) continue;
        const auto x1 = "x" + std::to_string(a), y1 = "y" + std::to_string(a);
        const auto x2 = "x" + std::to_string(b);
        std::vector<std::string> ys;
        std::vector<std::pair<std::string, std::string>> pl;
        for (std::size_t i = 0; i < pairs; ++i) {
          if (i == b) continue;
          ys.push_back("y" + std::to_string(i));
          pl.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
        }
        c.expect(semtree::vec_of_add(space, x1, y1, x2).word == oracle::add(space, x1, y1, x2),
                 tag + " VecOfAdd");
        c.expect(semtree::vec_of_mul(space, x1, y1, x2).word == oracle::mul(space, x1, y1, x2),
                 tag + " VecOfMul");
        c.expect(semtree::vec_of_avr(space, pl, x2).word == oracle::avr(space, pl, x2),
                 tag + " VecOfAvr");
        c.expect(outcome([&] { return semtree::ssn_branch(space, xs, ys, x2).word; }) ==
                     outcome([&] { return oracle::branch(space, xs, ys, x2); }),
                 tag + " SSNbranch");
        c.expect(outcome([&] { return semtree::ssn_filter(space, xs, ys, x2).word; }) ==
                     outcome([&] { return oracle::filter(space, xs, ys, x2); }),
                 tag + " SSNfilter");
        queries += 5;
        degenerate += outcome([&] { return oracle::branch(space, xs, ys, x2); }) == "degenerate";
      }
    }
  }
  c.into(r);
  r.summary = std::to_string(spaces) + " spaces of 20 words, " + std::to_string(queries) +
              " queries (" + std::to_string(degenerate) +
              " with degenerate sets), " + std::to_string(c.failed()) + " mismatches";
  return r;
}

// ---------------------------------------------------------------------------
// pretrained data helpers

std::string data_path(const std::string& name) {
  return std::string(SEMTREE_DATA_DIR) + "/" + name;
}

std::optional<std::size_t> analogy_cap() {
  const char* v = env("SEMTREE_ANALOGY_MAX_VOCAB");
  if (!v) return 50000;
  const auto n = std::stoull(v);
  if (n == 0) return std::nullopt;
  return n;
}

semtree::EmbeddingSpace load(const std::string& path, bool glove, std::optional<std::size_t> cap,
                             bool drop_multiword) {
  semtree::VocabFilter f;
  f.max_vocab = cap;
  f.drop_multiword = drop_multiword;
  f.lowercase_fallback = glove;  // GloVe vocabularies are lowercase
  return glove ? semtree::load_glove_text(path, f) : semtree::load_word2vec_binary(path, f);
}

// ---------------------------------------------------------------------------
// 3: analogy table

struct Expected {
  const char* embedding;
  const char* env_var;
  bool glove;
  std::array<double, 5> accuracy;  // add, mul, avr, branch, filter
};

Result criterion_analogy_table() {
  Result r;
  const std::array<Expected, 2> rows{{
      {"GloVe", "SEMTREE_GLOVE", true, {.717, .725, .754, .620, .797}},
      {"word2vec", "SEMTREE_WORD2VEC", false, {.726, .739, .740, .588, .781}},
  }};
  const auto corpus = semtree::parse_google_analogy(data_path("questions-words.txt"));
  const auto& methods = semtree::all_analogy_methods();
  bool any_missing = false;
  Checks c;
  for (const auto& e : rows) {
    const char* path = env(e.env_var);
    if (!path) {
      any_missing = true;
      r.notes.push_back(std::string(e.embedding) + ": " + e.env_var + " not set");
      continue;
    }
    auto space = load(path, e.glove, analogy_cap(), false);
    std::vector<double> acc;
    std::string line = std::string(e.embedding) + " (" + space.source_tag() + "):";
    for (std::size_t m = 0; m < methods.size(); ++m) {
      auto rep = semtree::run_analogy_benchmark(space, corpus, methods[m]);
      const double a = rep.accuracy().value_or(0.0);
      acc.push_back(a);
      line += " " + semtree::method_name(methods[m]) + "=" + fmt(a) + " (target " +
              fmt(e.accuracy[m]) + ")";
      if (m == 0) line += " coverage=" + fmt(rep.coverage());
      c.expect(std::abs(a - e.accuracy[m]) <= 0.05,
               std::string(e.embedding) + " " + semtree::method_name(methods[m]) + " " +
                   fmt(a) + " vs " + fmt(e.accuracy[m]));
    }
    r.notes.push_back(line);
    // add, mul, avr, branch, filter
    c.expect(acc[4] > acc[2], std::string(e.embedding) + " SSNfilter > VecOfAvr");
    c.expect(acc[2] >= acc[1], std::string(e.embedding) + " VecOfAvr >= VecOfMul");
    c.expect(acc[1] >= acc[0], std::string(e.embedding) + " VecOfMul >= VecOfAdd");
    c.expect(acc[0] > acc[3], std::string(e.embedding) + " VecOfAdd > SSNbranch");
  }
  c.into(r);
  if (r.outcome == Outcome::Pass && any_missing) r.outcome = Outcome::Skip;
  r.summary = "analogy accuracy table, " + std::to_string(c.total()) + " checks, " +
              std::to_string(c.failed()) + " failed";
  return r;
}

// ---------------------------------------------------------------------------
// synthetic space over every bundled corpus token

semtree::EmbeddingSpace corpus_space(const semtree::AnalogyCorpus& analogies,
                                     const semtree::CategoryCorpus& closed) {
  std::mt19937_64 rng(404);
  const std::size_t dim = 32;
  std::map<std::string, std::vector<std::string>> groups;  // token -> group names
  std::vector<std::string> order;
  auto note = [&](const std::string& w, const std::string& g) {
    auto [it, fresh] = groups.try_emplace(w);
    if (fresh) order.push_back(w);
    it->second.push_back(g);
  };
  for (const auto& c : closed.categories) {
    for (const auto& w : c.members) note(w, "closed/" + c.name);
  }
  for (const auto& c : semtree::analogy_sections_to_categories(analogies).categories) {
    for (const auto& w : c.members) note(w, c.name);
  }
  std::map<std::string, Vector> centres;
  Rows rows;
  for (const auto& w : order) {
    auto v = fixtures::gaussian(rng, dim, 0.0, 0.6);
    for (const auto& g : groups[w]) {
      auto [it, fresh] = centres.try_emplace(g);
      if (fresh) it->second = fixtures::gaussian(rng, dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] += it->second[j];
    }
    rows.emplace_back(w, v);
  }
  for (int i = 0; i < 600; ++i) {
    rows.emplace_back("filler" + std::to_string(i), fixtures::gaussian(rng, dim, 0.0, 1.2));
  }
  return fixtures::space(rows);
}

// ---------------------------------------------------------------------------
// 4: category completion table

Result criterion_category_table() {
  Result r;
  Checks c;
  const auto analogies = semtree::parse_google_analogy(data_path("questions-words.txt"));
  const auto closed = semtree::load_category_corpus(data_path("closed_categories.json"));

  auto baseline_closed_form = [&](const semtree::CategoryEvalReport& rep, const std::string& tag) {
    std::size_t checked = 0;
    for (const auto& s : rep.scores) {
      if (s.method != semtree::CategoryMethod::Baseline) continue;
      const double k = static_cast<double>(s.n_examples);
      const double n = static_cast<double>(s.n_members);
      const double f = k / n;
      const double closed_form = 2.0 * f / (1.0 + f);
      for (double x : s.run_f1) {
        c.expect(std::abs(x - closed_form) <= 1e-12 * closed_form,
                 tag + " baseline " + s.category + " " + fmt(x, 6) + " vs " + fmt(closed_form, 6));
        ++checked;
      }
    }
    return checked;
  };

  {
    auto space = corpus_space(analogies, closed);
    semtree::CategoryBenchmarkOptions o;
    o.methods = {semtree::CategoryMethod::Baseline};
    std::size_t n = 0;
    n += baseline_closed_form(semtree::run_category_benchmark(space, closed, o), "closed");
    n += baseline_closed_form(
        semtree::run_category_benchmark(
            space, semtree::analogy_sections_to_categories(analogies), o),
        "analogy");
    r.notes.push_back("baseline closed form checked on " + std::to_string(n) +
                      " runs over a synthetic space covering every corpus token");
  }

  const char* glove = env("SEMTREE_GLOVE");
  if (!glove) {
    r.notes.push_back("SSN table: SEMTREE_GLOVE not set");
  } else {
    auto space = load(glove, true, 50000, false);
    semtree::CategoryBenchmarkOptions o;  // 10-40%, all methods, 5 runs
    auto rep = semtree::run_category_benchmark(space, closed, o);
    baseline_closed_form(rep, "glove");
    const std::array<double, 4> target{.349, .494, .646, .678};
    using M = semtree::CategoryMethod;
    for (std::size_t i = 0; i < o.fractions.size(); ++i) {
      const double fr = o.fractions[i];
      const double ssn = rep.mean_f1(fr, M::Ssn);
      const double base = rep.mean_f1(fr, M::Baseline);
      const double svm100 = rep.mean_f1(fr, M::Svm100);
      const double svm500 = rep.mean_f1(fr, M::Svm500);
      r.notes.push_back("GloVe " + fmt(100 * fr, 0) + "%: baseline=" + fmt(base) +
                        " SSN=" + fmt(ssn) + " (target " + fmt(target[i]) + ") SVM100=" +
                        fmt(svm100) + " SVM500=" + fmt(svm500));
      c.expect(std::abs(ssn - target[i]) <= 0.08,
               "SSN at " + fmt(fr, 1) + " " + fmt(ssn) + " vs " + fmt(target[i]));
      c.expect(ssn > base, "SSN > baseline at " + fmt(fr, 1));
      if (fr >= 0.3) c.expect(ssn >= svm500, "SSN >= SVM500 at " + fmt(fr, 1));
    }
    r.notes.push_back("closed corpus coverage: " + std::to_string(rep.skipped.size()) +
                      " categories skipped, " + std::to_string(rep.ssn_fallbacks) +
                      " SSN fallbacks");
  }
  c.into(r);
  if (r.outcome == Outcome::Pass && !glove) r.outcome = Outcome::Skip;
  r.summary = "category completion table, " + std::to_string(c.total()) + " checks, " +
              std::to_string(c.failed()) + " failed";
  return r;
}

// ---------------------------------------------------------------------------
// 5: qualitative goldens

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& w : v) out += (out.empty() ? "" : ",") + w;
  return out;
}

Result criterion_goldens() {
  Result r;
  const char* w2v = env("SEMTREE_WORD2VEC");
  if (!w2v) {
    r.outcome = Outcome::Skip;
    r.summary = "word2vec goldens";
    r.notes.push_back("SEMTREE_WORD2VEC not set");
    return r;
  }
  Checks c;
  auto space = load(w2v, false, 11000, true);
  auto words_of = [](const semtree::SubVectorReport& rep) {
    std::vector<std::string> out;
    for (const auto& ch : rep.children) out.push_back(ch.word);
    return out;
  };

  {
    std::vector<Vector> sup;
    for (const char* w : {"November", "December", "September", "May"}) {
      auto row = space.lookup(w);
      sup.emplace_back(row.begin(), row.end());
    }
    auto got = words_of(semtree::children(space, semtree::root(sup)));
    std::vector<std::string> months{"January", "February", "March",     "April",
                                    "May",     "June",     "July",      "August",
                                    "September", "October", "November", "December"};
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    std::sort(months.begin(), months.end());
    r.notes.push_back("ch(root(November,December,September,May)) = [" + joined(got) + "]");
    c.expect(sorted == months, "month children");
  }
  {
    auto ssn = semtree::binary_tree(space, {"father", "mother", "brother", "sister"});
    auto got = words_of(semtree::children(space, ssn.c()));
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    r.notes.push_back("ch(c) = [" + joined(got) + "]");
    c.expect(sorted == std::vector<std::string>{"brother", "sister"}, "binary tree node c");
  }
  {
    std::vector<Vector> sup;
    for (const char* w : {"director", "chairman", "head", "executive", "president", "speaker"}) {
      auto row = space.lookup(w);
      sup.emplace_back(row.begin(), row.end());
    }
    auto q = semtree::residual(space.lookup("chair"), sup);
    auto hits = semtree::cosine_neighbors(space, q, 10);
    std::vector<std::string> got;
    for (const auto& h : hits) got.push_back(h.word);
    r.notes.push_back("neighbors(chair - root) = [" + joined(got) + "]");
    auto has = [&](const char* w) { return std::find(got.begin(), got.end(), w) != got.end(); };
    c.expect(has("sofa") && has("couch"), "sofa and couch among the residual neighbors");
  }
  c.into(r);
  if (r.outcome == Outcome::Fail && env("SEMTREE_GOLDENS_INFORMATIVE")) {
    r.outcome = Outcome::Pass;
    r.notes.push_back("informative mode: differences reported, not gated");
  }
  r.summary = "word2vec-11k goldens, " + std::to_string(c.total()) + " checks, " +
              std::to_string(c.failed()) + " failed";
  return r;
}

// ---------------------------------------------------------------------------
// 6: determinism

Result criterion_determinism() {
  Result r;
  Checks c;
  const auto analogies = semtree::parse_google_analogy(data_path("questions-words.txt"));
  const auto closed = semtree::load_category_corpus(data_path("closed_categories.json"));
  const auto derived = semtree::analogy_sections_to_categories(analogies);
  const auto space = corpus_space(analogies, closed);
  const std::size_t wide = std::max<std::size_t>(4, std::thread::hardware_concurrency());

  auto category_run = [&](const semtree::CategoryCorpus& corpus, std::uint64_t seed) {
    semtree::CategoryBenchmarkOptions o;
    o.base_seed = seed;
    o.n_runs = 3;
    auto rep = semtree::run_category_benchmark(space, corpus, o);
    return semtree::to_json(rep).dump() + semtree::to_tsv(rep);
  };
  auto analogy_run = [&]() {
    std::vector<semtree::AnalogyReport> reps;
    std::string out;
    for (auto m : semtree::all_analogy_methods()) {
      reps.push_back(semtree::run_analogy_benchmark(space, analogies, m));
      out += semtree::to_json(reps.back()).dump();
    }
    return out + semtree::to_tsv(reps);
  };

  std::map<std::size_t, std::vector<std::string>> outputs;
  for (std::size_t threads : {std::size_t{1}, wide, std::size_t{1}, wide}) {
    semtree::set_num_threads(threads);
    outputs[threads].push_back(category_run(closed, 11) + category_run(derived, 11) +
                               analogy_run());
  }
  semtree::set_num_threads(0);
  const auto& ref = outputs[1][0];
  c.expect(outputs[1][1] == ref, "repeat with 1 thread");
  c.expect(outputs[wide][0] == ref, "1 vs " + std::to_string(wide) + " threads");
  c.expect(outputs[wide][1] == ref, "repeat with " + std::to_string(wide) + " threads");
  semtree::set_num_threads(1);
  c.expect(category_run(closed, 12) != category_run(closed, 11), "seed changes the sampled splits");
  semtree::set_num_threads(0);
  c.into(r);
  r.summary = "category and analogy reports byte-identical across runs and thread counts {1, " +
              std::to_string(wide) + "} (" + std::to_string(ref.size()) + " bytes)";
  return r;
}

const char* label(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semtree acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-6)")->check(CLI::Range(1, 6));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Result()>> criteria{
      criterion_properties,     criterion_oracle,   criterion_analogy_table,
      criterion_category_table, criterion_goldens,  criterion_determinism,
  };
  bool failed = false;
  bool ran = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = criteria[i]();
    } catch (const std::exception& e) {
      res.outcome = Outcome::Fail;
      res.summary = std::string("aborted: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& n : res.notes) std::cout << "  " << n << "\n";
    std::cout << "criterion " << i + 1 << ": " << label(res.outcome) << "  " << res.summary
              << " [" << fmt(secs, 1) << "s]" << std::endl;
    failed |= res.outcome == Outcome::Fail;
    ran |= res.outcome == Outcome::Pass;
  }
  if (failed) return 1;
  return ran ? 0 : 77;
}

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

#include "semtree/analogy.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "semtree/decomp.hpp"
#include "semtree/error.hpp"
#include "semtree/runtime.hpp"

namespace semtree {

namespace {

using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

Vector row_copy(const EmbeddingSpace& space, std::size_t i) {
  auto r = space.row(i);
  return Vector(r.begin(), r.end());
}

std::vector<std::size_t> resolve_unique(const EmbeddingSpace& space,
                                        const std::vector<std::string>& words) {
  std::vector<std::size_t> out;
  for (const auto& w : words) {
    const std::size_t i = space.require(w);
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  return out;
}

Vector root_of_rows(const EmbeddingSpace& space,
                    const std::vector<std::size_t>& rows) {
  std::vector<Vector> support;
  support.reserve(rows.size());
  for (std::size_t i : rows) support.push_back(row_copy(space, i));
  return root(support);
}

Vector add_query(const EmbeddingSpace& space, std::size_t x1, std::size_t y1,
                 std::size_t x2) {
  Vector q = sub(space.row(y1), space.row(x1));
  axpy(1.0, space.row(x2), q);
  return q;
}

Vector avr_query(const EmbeddingSpace& space, const IndexPairs& pairs,
                 std::size_t x2) {
  if (pairs.empty()) throw Error(Errc::EmptyPairs, "vec_of_avr needs pairs");
  Vector offset(space.dim(), 0.0);
  for (const auto& [x, y] : pairs) {
    axpy(1.0, space.row(y), offset);
    axpy(-1.0, space.row(x), offset);
  }
  Vector q = row_copy(space, x2);
  axpy(1.0 / static_cast<double>(pairs.size()), offset, q);
  return q;
}

void check_sets(const std::vector<std::size_t>& xs,
                const std::vector<std::size_t>& ys, std::size_t x2) {
  if (xs.size() < 2) throw Error(Errc::InvalidArgument, "X needs >= 2 words");
  if (ys.empty()) throw Error(Errc::InvalidArgument, "Y needs >= 1 word");
  if (std::find(xs.begin(), xs.end(), x2) == xs.end()) {
    throw Error(Errc::InvalidArgument, "x2 must belong to X");
  }
}

Vector branch_query(const EmbeddingSpace& space, const std::vector<std::size_t>& xs,
                    const std::vector<std::size_t>& ys, std::size_t x2) {
  check_sets(xs, ys, x2);
  Vector q = sub(space.row(x2), root_of_rows(space, xs));
  axpy(1.0, root_of_rows(space, ys), q);
  return q;
}

FilterQuery filter_query(const EmbeddingSpace& space,
                         const std::vector<std::size_t>& xs,
                         const std::vector<std::size_t>& ys, std::size_t x2) {
  check_sets(xs, ys, x2);
  const Vector target = row_copy(space, x2);
  std::vector<Vector> branches;
  for (std::size_t xi : xs) {
    if (xi == x2) continue;
    try {
      auto tree = SemanticTree::build(
          {{space.word(x2), target}, {space.word(xi), row_copy(space, xi)}});
      branches.push_back(tree.branch(0));
    } catch (const Error& e) {
      // A pair without a positive shared root contributes no branch.
      if (e.code() != Errc::DegenerateSupportSet && e.code() != Errc::ZeroSum) {
        throw;
      }
    }
  }

  FilterQuery out;
  try {
    if (branches.empty()) {
      throw Error(Errc::DegenerateSupportSet, "no usable branches");
    }
    out.y_hat = root(branches);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateSupportSet && e.code() != Errc::ZeroSum) {
      throw;
    }
    out.fell_back = true;
    out.y_hat = branch_query(space, xs, ys, x2);
    return out;
  }
  axpy(1.0, root_of_rows(space, ys), out.y_hat);
  return out;
}

std::vector<std::size_t> union_of(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

AnalogyAnswer mul_answer(const EmbeddingSpace& space, std::size_t x1,
                         std::size_t y1, std::size_t x2, double epsilon,
                         const std::vector<std::size_t>& exclude) {
  if (!(epsilon > 0.0)) {
    throw Error(Errc::InvalidArgument, "epsilon must be positive");
  }
  std::vector<char> skip(space.size(), 0);
  for (std::size_t i : exclude) skip[i] = 1;

  auto shifted = [&](std::size_t cue, std::size_t cand) {
    return (1.0 + cosine(space.row(cue), space.row_norm(cue), space.row(cand),
                         space.row_norm(cand))) /
           2.0;
  };
  std::optional<AnalogyAnswer> best;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (skip[i]) continue;
    const double score =
        shifted(y1, i) * shifted(x2, i) / (shifted(x1, i) + epsilon);
    if (!best || score > best->score ||
        (score == best->score && space.word(i) < best->word)) {
      best = AnalogyAnswer{space.word(i), i, score};
    }
  }
  if (!best) throw Error(Errc::EmptyVocabulary, "every candidate excluded");
  return *best;
}

std::vector<std::size_t> inputs_of(bool exclude, std::initializer_list<std::size_t> ids) {
  if (!exclude) return {};
  return std::vector<std::size_t>(ids);
}

}  // namespace

std::string method_name(AnalogyMethod m) {
  switch (m) {
    case AnalogyMethod::VecOfAdd: return "VecOfAdd";
    case AnalogyMethod::VecOfMul: return "VecOfMul";
    case AnalogyMethod::VecOfAvr: return "VecOfAvr";
    case AnalogyMethod::SsnBranch: return "SSNbranch";
    case AnalogyMethod::SsnFilter: return "SSNfilter";
  }
  return "unknown";
}

const std::vector<AnalogyMethod>& all_analogy_methods() {
  static const std::vector<AnalogyMethod> kAll{
      AnalogyMethod::VecOfAdd, AnalogyMethod::VecOfMul, AnalogyMethod::VecOfAvr,
      AnalogyMethod::SsnBranch, AnalogyMethod::SsnFilter};
  return kAll;
}

AnalogyMethod parse_analogy_method(const std::string& name) {
  const std::string key = ascii_lower(name);
  for (auto m : all_analogy_methods()) {
    if (ascii_lower(method_name(m)) == key) return m;
  }
  static const std::unordered_map<std::string, AnalogyMethod> kShort{
      {"add", AnalogyMethod::VecOfAdd},       {"mul", AnalogyMethod::VecOfMul},
      {"avr", AnalogyMethod::VecOfAvr},       {"branch", AnalogyMethod::SsnBranch},
      {"filter", AnalogyMethod::SsnFilter}};
  if (auto it = kShort.find(key); it != kShort.end()) return it->second;
  throw Error(Errc::InvalidArgument, "unknown analogy method '" + name + "'");
}

AnalogyAnswer argmax_cosine(const EmbeddingSpace& space, VectorView q,
                            const std::vector<std::size_t>& exclude) {
  auto top = cosine_neighbors_by_index(space, q, 1, exclude);
  if (top.empty()) throw Error(Errc::EmptyVocabulary, "every candidate excluded");
  return {top.front().word, top.front().index, top.front().score};
}

Vector vec_of_add_query(const EmbeddingSpace& space, const std::string& x1,
                        const std::string& y1, const std::string& x2) {
  return add_query(space, space.require(x1), space.require(y1), space.require(x2));
}

Vector vec_of_avr_query(const EmbeddingSpace& space,
                        const std::vector<std::pair<std::string, std::string>>& pairs,
                        const std::string& x2) {
  IndexPairs idx;
  for (const auto& [x, y] : pairs) idx.emplace_back(space.require(x), space.require(y));
  return avr_query(space, idx, space.require(x2));
}

Vector ssn_branch_query(const EmbeddingSpace& space,
                        const std::vector<std::string>& xs,
                        const std::vector<std::string>& ys, const std::string& x2) {
  return branch_query(space, resolve_unique(space, xs), resolve_unique(space, ys),
                      space.require(x2));
}

FilterQuery ssn_filter_query(const EmbeddingSpace& space,
                             const std::vector<std::string>& xs,
                             const std::vector<std::string>& ys,
                             const std::string& x2) {
  return filter_query(space, resolve_unique(space, xs), resolve_unique(space, ys),
                      space.require(x2));
}

AnalogyAnswer vec_of_add(const EmbeddingSpace& space, const std::string& x1,
                         const std::string& y1, const std::string& x2,
                         bool exclude_inputs) {
  const auto a = space.require(x1), b = space.require(y1), c = space.require(x2);
  return argmax_cosine(space, add_query(space, a, b, c),
                       inputs_of(exclude_inputs, {a, b, c}));
}

AnalogyAnswer vec_of_mul(const EmbeddingSpace& space, const std::string& x1,
                         const std::string& y1, const std::string& x2,
                         double epsilon, bool exclude_inputs) {
  const auto a = space.require(x1), b = space.require(y1), c = space.require(x2);
  return mul_answer(space, a, b, c, epsilon, inputs_of(exclude_inputs, {a, b, c}));
}

AnalogyAnswer vec_of_avr(const EmbeddingSpace& space,
                         const std::vector<std::pair<std::string, std::string>>& pairs,
                         const std::string& x2) {
  IndexPairs idx;
  std::vector<std::size_t> exclude{space.require(x2)};
  for (const auto& [x, y] : pairs) {
    idx.emplace_back(space.require(x), space.require(y));
    exclude.push_back(idx.back().first);
    exclude.push_back(idx.back().second);
  }
  return argmax_cosine(space, avr_query(space, idx, exclude.front()), exclude);
}

AnalogyAnswer ssn_branch(const EmbeddingSpace& space,
                         const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys, const std::string& x2) {
  const auto xi = resolve_unique(space, xs);
  const auto yi = resolve_unique(space, ys);
  return argmax_cosine(space, branch_query(space, xi, yi, space.require(x2)),
                       union_of(xi, yi));
}

AnalogyAnswer ssn_filter(const EmbeddingSpace& space,
                         const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys, const std::string& x2) {
  const auto xi = resolve_unique(space, xs);
  const auto yi = resolve_unique(space, ys);
  auto q = filter_query(space, xi, yi, space.require(x2));
  auto answer = argmax_cosine(space, q.y_hat, union_of(xi, yi));
  answer.fell_back = q.fell_back;
  return answer;
}

std::optional<double> SectionScore::accuracy() const {
  if (answered == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(answered);
}

std::optional<double> AnalogyReport::accuracy() const {
  if (answered == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(answered);
}

double AnalogyReport::coverage() const {
  return total ? static_cast<double>(answered) / static_cast<double>(total) : 0.0;
}

namespace {

struct ResolvedSection {
  IndexPairs pairs;  // both words in vocabulary
};

enum class Outcome : char { Skipped, Wrong, Correct };

struct QuestionResult {
  Outcome outcome = Outcome::Skipped;
  bool error = false;
  bool fell_back = false;
};

}  // namespace

AnalogyReport run_analogy_benchmark(const EmbeddingSpace& space,
                                    const AnalogyCorpus& corpus,
                                    AnalogyMethod method,
                                    const AnalogyOptions& options) {
  AnalogyReport report;
  report.method = method;
  report.source_tag = space.source_tag();
  report.vocab_size = space.size();
  report.options = options;

  std::unordered_map<std::string, std::size_t> section_index;
  std::vector<ResolvedSection> resolved(corpus.sections.size());
  for (std::size_t s = 0; s < corpus.sections.size(); ++s) {
    const auto& sec = corpus.sections[s];
    section_index.emplace(sec.name, s);
    report.sections.push_back({sec.name});
    for (const auto& [x, y] : sec.pairs) {
      auto xi = space.resolve(x);
      auto yi = space.resolve(y);
      if (xi && yi) resolved[s].pairs.emplace_back(*xi, *yi);
    }
  }

  const auto& questions = corpus.questions;
  std::vector<QuestionResult> results(questions.size());
  parallel_for(questions.size(), [&](std::size_t qi) {
    const auto& q = questions[qi];
    auto a = space.resolve(q.x1), b = space.resolve(q.y1);
    auto c = space.resolve(q.x2), d = space.resolve(q.y2);
    if (!a || !b || !c || !d) return;

    QuestionResult& r = results[qi];
    r.outcome = Outcome::Wrong;
    try {
      const auto& pairs = resolved.at(section_index.at(q.section)).pairs;
      IndexPairs kept;
      std::vector<std::size_t> xs, ys;
      for (const auto& [x, y] : pairs) {
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        if (y == *d) continue;
        kept.emplace_back(x, y);
        if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
      }

      std::size_t answer = 0;
      switch (method) {
        case AnalogyMethod::VecOfAdd:
          answer = argmax_cosine(space, add_query(space, *a, *b, *c),
                                 inputs_of(options.exclude_inputs, {*a, *b, *c}))
                       .index;
          break;
        case AnalogyMethod::VecOfMul:
          answer = mul_answer(space, *a, *b, *c, options.epsilon,
                              inputs_of(options.exclude_inputs, {*a, *b, *c}))
                       .index;
          break;
        case AnalogyMethod::VecOfAvr: {
          std::vector<std::size_t> exclude{*c};
          for (const auto& [x, y] : kept) {
            exclude.push_back(x);
            exclude.push_back(y);
          }
          answer = argmax_cosine(space, avr_query(space, kept, *c), exclude).index;
          break;
        }
        case AnalogyMethod::SsnBranch:
          answer = argmax_cosine(space, branch_query(space, xs, ys, *c),
                                 union_of(xs, ys))
                       .index;
          break;
        case AnalogyMethod::SsnFilter: {
          auto fq = filter_query(space, xs, ys, *c);
          r.fell_back = fq.fell_back;
          answer = argmax_cosine(space, fq.y_hat, union_of(xs, ys)).index;
          break;
        }
      }
      if (answer == *d) r.outcome = Outcome::Correct;
    } catch (const Error&) {
      r.error = true;
    }
  });

  for (std::size_t qi = 0; qi < questions.size(); ++qi) {
    auto& sec = report.sections[section_index.at(questions[qi].section)];
    const auto& r = results[qi];
    ++sec.total;
    if (r.outcome != Outcome::Skipped) ++sec.answered;
    if (r.outcome == Outcome::Correct) ++sec.correct;
    if (r.error) ++sec.errors;
    if (r.fell_back) ++sec.fallbacks;
  }
  for (const auto& sec : report.sections) {
    report.total += sec.total;
    report.answered += sec.answered;
    report.correct += sec.correct;
  }
  return report;
}

nlohmann::ordered_json to_json(const AnalogyReport& report) {
  using json = nlohmann::ordered_json;
  auto opt = [](std::optional<double> v) { return v ? json(*v) : json(nullptr); };
  json j;
  j["method"] = method_name(report.method);
  j["metadata"] = {{"source_tag", report.source_tag},
                   {"vocab_size", report.vocab_size},
                   {"exclude_inputs", report.options.exclude_inputs},
                   {"epsilon", report.options.epsilon},
                   {"leakage_rule", "y2 removed from Y and from the pair list"}};
  j["overall"] = {{"accuracy", opt(report.accuracy())},
                  {"coverage", report.coverage()},
                  {"total", report.total},
                  {"answered", report.answered},
                  {"correct", report.correct}};
  auto& secs = j["sections"] = json::array();
  for (const auto& s : report.sections) {
    secs.push_back({{"name", s.name},
                    {"accuracy", opt(s.accuracy())},
                    {"total", s.total},
                    {"answered", s.answered},
                    {"correct", s.correct},
                    {"errors", s.errors},
                    {"fallbacks", s.fallbacks}});
  }
  return j;
}

std::string to_tsv(const std::vector<AnalogyReport>& reports) {
  std::vector<std::string> sources;
  std::vector<AnalogyMethod> methods;
  for (const auto& r : reports) {
    if (std::find(sources.begin(), sources.end(), r.source_tag) == sources.end()) {
      sources.push_back(r.source_tag);
    }
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
  }
  std::string out = "method";
  for (const auto& s : sources) out += "\t" + s;
  out += "\n";
  char buf[32];
  for (auto m : methods) {
    out += method_name(m);
    for (const auto& s : sources) {
      auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) {
        return r.method == m && r.source_tag == s;
      });
      if (it == reports.end() || !it->accuracy()) {
        out += "\tNA";
      } else {
        std::snprintf(buf, sizeof(buf), "\t%.4f", *it->accuracy());
        out += buf;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace semtree

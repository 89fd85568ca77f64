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

#include "semtree/categorize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "semtree/decomp.hpp"
#include "semtree/error.hpp"
#include "semtree/runtime.hpp"

namespace semtree {

std::size_t example_count(std::size_t members, double fraction) {
  const auto k = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(members)));
  return std::clamp<std::size_t>(k, 1, std::max<std::size_t>(members, 1));
}

Split sample_split(const std::vector<std::string>& members, double fraction,
                   std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(Errc::InvalidArgument,
                "fraction must be in (0, 1], got " + std::to_string(fraction));
  }
  if (members.empty()) throw Error(Errc::EmptyAfterVocabFilter, "no members");

  Rng rng(seed);
  auto picked = rng.sample(members.size(), example_count(members.size(), fraction));
  std::vector<char> chosen(members.size(), 0);
  for (std::size_t i : picked) chosen[i] = 1;

  Split s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    (chosen[i] ? s.examples : s.held_out).push_back(members[i]);
  }
  return s;
}

Completion complete_category(const EmbeddingSpace& space,
                             const std::vector<std::string>& examples) {
  if (examples.empty()) {
    throw Error(Errc::InvalidArgument, "category completion needs examples");
  }
  std::vector<Vector> support;
  std::set<std::string> out;
  for (const auto& w : examples) {
    const std::size_t i = space.require(w);
    auto r = space.row(i);
    support.emplace_back(r.begin(), r.end());
    out.insert(space.word(i));
  }

  Completion c;
  try {
    auto alpha = root(support);
    for (const auto& child : children(space, alpha).children) {
      out.insert(child.word);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateSupportSet && e.code() != Errc::ZeroSum &&
        e.code() != Errc::ZeroDelta) {
      throw;
    }
    c.fell_back = true;
  }
  c.tokens.assign(out.begin(), out.end());
  return c;
}

double f1_set(const std::vector<std::string>& predicted,
              const std::vector<std::string>& gold) {
  std::unordered_set<std::string> g(gold.begin(), gold.end());
  if (g.empty()) throw Error(Errc::EmptyGold, "f1 against an empty gold set");
  std::unordered_set<std::string> p(predicted.begin(), predicted.end());
  if (p.empty()) return 0.0;

  std::size_t hit = 0;
  for (const auto& w : p) hit += g.contains(w) ? 1 : 0;
  if (hit == 0) return 0.0;
  const double precision = static_cast<double>(hit) / static_cast<double>(p.size());
  const double recall = static_cast<double>(hit) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

double LinearModel::decision(VectorView x) const {
  return dot(weights, x) + bias;
}

LinearModel train_linear_svm(const std::vector<Vector>& positives,
                             const std::vector<Vector>& negatives,
                             const SvmParams& params) {
  if (positives.empty() || negatives.empty()) {
    throw Error(Errc::EmptyClass, "svm needs both positive and negative samples");
  }
  if (!(params.lambda > 0.0)) {
    throw Error(Errc::InvalidArgument, "svm lambda must be positive");
  }
  const std::size_t dim = positives.front().size();
  std::vector<const Vector*> xs;
  std::vector<double> ys;
  for (const auto& v : positives) xs.push_back(&v), ys.push_back(1.0);
  for (const auto& v : negatives) xs.push_back(&v), ys.push_back(-1.0);
  for (const auto* v : xs) require_same_dim(positives.front(), *v);

  Vector w(dim, 0.0);
  double b = 0.0;
  const double radius = 1.0 / std::sqrt(params.lambda);
  Rng rng(params.seed);
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (params.lambda * static_cast<double>(t));
      const Vector& x = *xs[i];
      const double y = ys[i];
      const double score = dot(w, x) + b;
      const double shrink = 1.0 - eta * params.lambda;
      for (double& wj : w) wj *= shrink;
      b *= shrink;
      if (y * score < 1.0) {
        axpy(eta * y, x, w);
        b += eta * y;
      }
      const double n = std::sqrt(squared_norm(w) + b * b);
      if (n > radius) {
        const double s = radius / n;
        for (double& wj : w) wj *= s;
        b *= s;
      }
    }
  }
  return {std::move(w), b};
}

std::vector<std::string> svm_complete_category(
    const EmbeddingSpace& space, const std::vector<std::string>& examples,
    std::size_t n_negatives, const SvmParams& params) {
  if (examples.empty()) {
    throw Error(Errc::EmptyClass, "svm completion needs examples");
  }
  std::vector<char> is_example(space.size(), 0);
  std::vector<Vector> positives;
  std::set<std::string> out;
  for (const auto& w : examples) {
    const std::size_t i = space.require(w);
    if (is_example[i]) continue;
    is_example[i] = 1;
    auto r = space.row(i);
    positives.emplace_back(r.begin(), r.end());
    out.insert(space.word(i));
  }

  std::vector<std::size_t> pool;
  pool.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!is_example[i]) pool.push_back(i);
  }
  Rng rng(derive_seed(params.seed, "negatives", 0));
  std::vector<Vector> negatives;
  for (std::size_t k : rng.sample(pool.size(), n_negatives)) {
    auto r = space.row(pool[k]);
    negatives.emplace_back(r.begin(), r.end());
  }

  SvmParams train = params;
  train.seed = derive_seed(params.seed, "pegasos", 0);
  const auto model = train_linear_svm(positives, negatives, train);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (model.classify(space.row(i))) out.insert(space.word(i));
  }
  return {out.begin(), out.end()};
}

std::string method_name(CategoryMethod m) {
  switch (m) {
    case CategoryMethod::Baseline: return "baseline";
    case CategoryMethod::Ssn: return "ssn";
    case CategoryMethod::Svm100: return "svm100";
    case CategoryMethod::Svm500: return "svm500";
  }
  return "unknown";
}

CategoryMethod parse_category_method(const std::string& name) {
  for (auto m : {CategoryMethod::Baseline, CategoryMethod::Ssn,
                 CategoryMethod::Svm100, CategoryMethod::Svm500}) {
    if (method_name(m) == name) return m;
  }
  throw Error(Errc::InvalidArgument, "unknown category method '" + name + "'");
}

double CategoryEvalReport::mean_f1(double fraction, CategoryMethod method) const {
  double total = 0.0;
  std::size_t n = 0;
  for (const auto& s : scores) {
    if (s.fraction == fraction && s.method == method) {
      total += s.mean_f1;
      ++n;
    }
  }
  return n ? total / static_cast<double>(n) : 0.0;
}

CategoryEvalReport run_category_benchmark(const EmbeddingSpace& space,
                                          const CategoryCorpus& corpus,
                                          const CategoryBenchmarkOptions& opts) {
  if (opts.n_runs == 0) throw Error(Errc::InvalidArgument, "n_runs must be >= 1");
  CategoryEvalReport report;
  report.corpus = corpus.name;
  report.source_tag = space.source_tag();
  report.vocab_size = space.size();
  report.options = opts;

  // Gold sets are the vocabulary forms of the members that resolve.
  std::vector<Category> cats;
  for (const auto& c : corpus.categories) {
    Category resolved{c.name, {}};
    std::unordered_set<std::string> seen;
    std::size_t dropped = 0;
    for (const auto& m : c.members) {
      if (auto i = space.resolve(m)) {
        if (seen.insert(space.word(*i)).second) {
          resolved.members.push_back(space.word(*i));
        }
      } else {
        ++dropped;
      }
    }
    if (dropped) report.dropped_members[c.name] = dropped;
    if (resolved.members.empty()) {
      report.skipped.push_back(c.name);
    } else {
      cats.push_back(std::move(resolved));
    }
  }

  const std::size_t n_methods = opts.methods.size();
  const std::size_t per_fraction = cats.size() * opts.n_runs;
  const std::size_t n_units = opts.fractions.size() * per_fraction;
  std::vector<double> f1(n_units * n_methods, 0.0);
  std::vector<char> fell_back(n_units, 0);

  parallel_for(n_units, [&](std::size_t unit) {
    const std::size_t fi = unit / per_fraction;
    const std::size_t ci = (unit % per_fraction) / opts.n_runs;
    const std::size_t run = unit % opts.n_runs;
    const auto& cat = cats[ci];
    const std::uint64_t seed = derive_seed(opts.base_seed, cat.name, run);
    const auto split = sample_split(cat.members, opts.fractions[fi], seed);

    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      const auto method = opts.methods[mi];
      std::vector<std::string> predicted;
      switch (method) {
        case CategoryMethod::Baseline:
          predicted = split.examples;
          break;
        case CategoryMethod::Ssn: {
          auto c = complete_category(space, split.examples);
          fell_back[unit] = c.fell_back ? 1 : 0;
          predicted = std::move(c.tokens);
          break;
        }
        case CategoryMethod::Svm100:
        case CategoryMethod::Svm500: {
          SvmParams p{opts.svm_lambda, opts.svm_epochs,
                      derive_seed(seed, method_name(method), 0)};
          predicted = svm_complete_category(
              space, split.examples,
              method == CategoryMethod::Svm100 ? 100 : 500, p);
          break;
        }
      }
      f1[unit * n_methods + mi] = f1_set(predicted, cat.members);
    }
  });

  for (std::size_t fi = 0; fi < opts.fractions.size(); ++fi) {
    for (std::size_t ci = 0; ci < cats.size(); ++ci) {
      for (std::size_t mi = 0; mi < n_methods; ++mi) {
        CategoryScore s{opts.fractions[fi],
                        cats[ci].name,
                        opts.methods[mi],
                        example_count(cats[ci].members.size(), opts.fractions[fi]),
                        cats[ci].members.size(),
                        0.0,
                        {}};
        double total = 0.0;
        for (std::size_t run = 0; run < opts.n_runs; ++run) {
          const std::size_t unit = fi * per_fraction + ci * opts.n_runs + run;
          s.run_f1.push_back(f1[unit * n_methods + mi]);
          total += s.run_f1.back();
        }
        s.mean_f1 = total / static_cast<double>(opts.n_runs);
        report.scores.push_back(std::move(s));
      }
    }
  }
  for (char fb : fell_back) report.ssn_fallbacks += fb ? 1 : 0;
  return report;
}

namespace {

std::string percent_label(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", fraction * 100.0);
  return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const CategoryEvalReport& report) {
  using json = nlohmann::ordered_json;
  const auto& o = report.options;
  json j;
  json meta;
  meta["corpus"] = report.corpus;
  meta["source_tag"] = report.source_tag;
  meta["vocab_size"] = report.vocab_size;
  meta["n_runs"] = o.n_runs;
  meta["base_seed"] = o.base_seed;
  meta["fractions"] = o.fractions;
  auto& methods = meta["methods"] = json::array();
  for (auto m : o.methods) methods.push_back(method_name(m));
  meta["svm"] = {{"lambda", o.svm_lambda},
                 {"epochs", o.svm_epochs},
                 {"kernel", "linear"},
                 {"inputs", "raw"},
                 {"negatives_from", "vocabulary minus examples"}};
  meta["skipped_categories"] = report.skipped;
  meta["dropped_members"] = report.dropped_members;
  meta["ssn_fallbacks"] = report.ssn_fallbacks;
  j["metadata"] = std::move(meta);

  json summary = json::object();
  for (auto m : o.methods) {
    json row = json::object();
    for (double f : o.fractions) row[percent_label(f)] = report.mean_f1(f, m);
    summary[method_name(m)] = std::move(row);
  }
  j["summary"] = std::move(summary);

  auto& scores = j["scores"] = json::array();
  for (const auto& s : report.scores) {
    scores.push_back({{"fraction", s.fraction},
                      {"category", s.category},
                      {"method", method_name(s.method)},
                      {"n_examples", s.n_examples},
                      {"n_members", s.n_members},
                      {"mean_f1", s.mean_f1},
                      {"run_f1", s.run_f1}});
  }
  return j;
}

std::string to_tsv(const CategoryEvalReport& report) {
  std::string out = "method";
  for (double f : report.options.fractions) out += "\t" + percent_label(f);
  out += "\n";
  char buf[32];
  for (auto m : report.options.methods) {
    out += method_name(m);
    for (double f : report.options.fractions) {
      std::snprintf(buf, sizeof(buf), "\t%.4f", report.mean_f1(f, m));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace semtree

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

// semtree: sub-vector queries and evaluation harnesses over pretrained
// word embeddings. Reports go to stdout (or --out), diagnostics to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semtree/semtree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string embeddings;
  std::string format = "glove";
  std::size_t max_vocab = 0;
  bool drop_multiword = false;
  bool lowercase_fallback = false;
  std::string output = "json";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

semtree::EmbeddingSpace load_space(const RunConfig& cfg) {
  if (cfg.embeddings.empty()) throw UsageError("--embeddings is required");
  semtree::VocabFilter filter;
  if (cfg.max_vocab > 0) filter.max_vocab = cfg.max_vocab;
  filter.drop_multiword = cfg.drop_multiword;
  filter.lowercase_fallback = cfg.lowercase_fallback;
  if (cfg.format == "word2vec") {
    return semtree::load_word2vec_binary(cfg.embeddings, filter);
  }
  return semtree::load_glove_text(cfg.embeddings, filter);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw semtree::Error(semtree::Errc::Io, "cannot write " + cfg.out);
  f << text;
  if (!f) throw semtree::Error(semtree::Errc::Io, "write failed: " + cfg.out);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void require_count(const std::vector<std::string>& words, std::size_t lo,
                   const std::string& what) {
  if (words.size() < lo) {
    throw semtree::Error(semtree::Errc::ArityMismatch,
                         what + " needs at least " + std::to_string(lo) +
                             " words, got " + std::to_string(words.size()));
  }
}

void cmd_children(const RunConfig& cfg, const std::vector<std::string>& words,
                  std::size_t k_cap) {
  require_count(words, 1, "children");
  auto space = load_space(cfg);
  std::vector<semtree::Vector> support;
  for (const auto& w : words) {
    auto r = space.lookup(w);
    support.emplace_back(r.begin(), r.end());
  }
  auto root = semtree::compute_root(support);
  auto report = semtree::children(space, root.alpha);
  const std::size_t count = report.count();
  if (k_cap > 0 && report.children.size() > k_cap) report.children.resize(k_cap);

  if (cfg.output == "tsv") {
    std::string out = "# root_norm\t" + fmt(semtree::norm(root.alpha)) +
                      "\n# count\t" + std::to_string(count) + "\nword\tmargin\n";
    for (const auto& c : report.children) out += c.word + "\t" + fmt(c.margin) + "\n";
    emit(cfg, out);
    return;
  }
  json j;
  j["words"] = words;
  j["root_norm"] = semtree::norm(root.alpha);
  j["v_min"] = root.v_min;
  j["count"] = count;
  auto& kids = j["children"] = json::array();
  for (const auto& c : report.children) {
    kids.push_back({{"word", c.word}, {"margin", c.margin}});
  }
  emit(cfg, dump(j));
}

std::vector<semtree::NamedVector> tree_nodes(const semtree::SemanticTree& t) {
  std::vector<semtree::NamedVector> nodes{{"alpha", t.alpha()}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    nodes.push_back({"beta_" + t.token(i), t.branch(i)});
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    nodes.push_back({"beta_perp_" + t.token(i), semtree::orthogonal_branch(t, i)});
  }
  return nodes;
}

void cmd_ssn(const RunConfig& cfg, const std::string& shape,
             const std::vector<std::string>& words, std::size_t k_cap) {
  std::vector<semtree::NamedVector> nodes;
  auto arity = [&](std::size_t n) {
    if (words.size() != n) {
      throw semtree::Error(semtree::Errc::ArityMismatch,
                           shape + " needs " + std::to_string(n) + " words, got " +
                               std::to_string(words.size()));
    }
  };
  if (shape == "tree") {
    require_count(words, 2, "tree");
  } else if (shape == "binary" || shape == "quad") {
    arity(4);
  } else if (shape == "ternary") {
    arity(3);
  }
  auto space = load_space(cfg);
  if (shape == "tree") {
    nodes = tree_nodes(semtree::build_tree(space, words));
  } else if (shape == "binary") {
    nodes = semtree::binary_tree(space, words).nodes();
  } else if (shape == "ternary") {
    nodes = semtree::ternary_tree(space, words).nodes();
  } else {
    nodes = semtree::quad_relation(space, words).nodes();
  }
  auto report = semtree::describe(nodes, space, k_cap);
  report.shape = shape;
  report.words = words;

  if (cfg.output == "tsv") {
    std::string out = "node\tnorm\tcount\tchildren\n";
    for (const auto& n : report.nodes) {
      out += n.name + "\t" + fmt(n.norm) + "\t" + std::to_string(n.total_children) + "\t";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        out += (i ? "," : "") + n.children[i].word;
      }
      out += "\n";
    }
    emit(cfg, out);
    return;
  }
  emit(cfg, dump(semtree::to_json(report)));
}

void cmd_neighbors(const RunConfig& cfg, const std::string& word,
                   const std::vector<std::string>& minus_root, std::size_t k) {
  auto space = load_space(cfg);
  auto row = space.lookup(word);
  semtree::Vector q(row.begin(), row.end());
  if (!minus_root.empty()) {
    std::vector<semtree::Vector> support;
    for (const auto& w : minus_root) {
      auto r = space.lookup(w);
      support.emplace_back(r.begin(), r.end());
    }
    q = semtree::residual(q, support);
  }
  auto hits = semtree::cosine_neighbors(space, q, k);
  if (cfg.output == "tsv") {
    std::string out = "word\tcosine\n";
    for (const auto& h : hits) out += h.word + "\t" + fmt(h.score) + "\n";
    emit(cfg, out);
    return;
  }
  json j;
  j["word"] = word;
  j["minus_root"] = minus_root;
  j["query_norm"] = semtree::norm(q);
  auto& arr = j["neighbors"] = json::array();
  for (const auto& h : hits) arr.push_back({{"word", h.word}, {"cosine", h.score}});
  emit(cfg, dump(j));
}

void cmd_eval_category(const RunConfig& cfg, const std::string& corpus_path,
                       const std::string& analogy_path,
                       const std::vector<double>& fractions,
                       const std::vector<std::string>& methods, std::size_t runs) {
  if (corpus_path.empty() == analogy_path.empty()) {
    throw UsageError("give exactly one of --corpus or --analogy-corpus");
  }
  semtree::CategoryBenchmarkOptions opts;
  opts.fractions = fractions;
  opts.n_runs = runs;
  opts.base_seed = cfg.seed;
  opts.methods.clear();
  for (const auto& m : methods) opts.methods.push_back(semtree::parse_category_method(m));

  auto corpus = corpus_path.empty()
                    ? semtree::analogy_sections_to_categories(
                          semtree::parse_google_analogy(analogy_path))
                    : semtree::load_category_corpus(corpus_path);
  auto space = load_space(cfg);
  auto report = semtree::run_category_benchmark(space, corpus, opts);
  if (!report.skipped.empty()) {
    std::cerr << "skipped " << report.skipped.size()
              << " categories with no in-vocabulary members\n";
  }
  emit(cfg, cfg.output == "tsv" ? semtree::to_tsv(report)
                                : dump(semtree::to_json(report)));
}

void cmd_eval_analogy(const RunConfig& cfg, const std::string& corpus_path,
                      const std::vector<std::string>& methods, double epsilon,
                      bool keep_inputs) {
  std::vector<semtree::AnalogyMethod> parsed;
  for (const auto& m : methods) parsed.push_back(semtree::parse_analogy_method(m));
  if (parsed.empty()) parsed = semtree::all_analogy_methods();

  auto corpus = semtree::parse_google_analogy(corpus_path);
  auto space = load_space(cfg);
  semtree::AnalogyOptions opts;
  opts.epsilon = epsilon;
  opts.exclude_inputs = !keep_inputs;

  std::vector<semtree::AnalogyReport> reports;
  for (auto m : parsed) {
    reports.push_back(semtree::run_analogy_benchmark(space, corpus, m, opts));
  }
  if (cfg.output == "tsv") {
    emit(cfg, semtree::to_tsv(reports));
    return;
  }
  json j = json::array();
  for (const auto& r : reports) j.push_back(semtree::to_json(r));
  emit(cfg, dump(j));
}

int exit_code_for(semtree::Errc code) {
  switch (code) {
    case semtree::Errc::Io: return kExitIo;
    case semtree::Errc::ArityMismatch:
    case semtree::Errc::InvalidArgument: return kExitUsage;
    default: return kExitData;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-vector decomposition of word embeddings"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--embeddings", cfg.embeddings, "Embedding file");
  app.add_option("--format", cfg.format, "Embedding file format")
      ->check(CLI::IsMember({"glove", "word2vec"}));
  app.add_option("--max-vocab", cfg.max_vocab, "Keep the N most frequent entries")
      ->check(CLI::PositiveNumber);
  app.add_flag("--drop-multiword", cfg.drop_multiword,
               "Skip tokens containing '_' or ' '");
  app.add_flag("--lowercase-fallback", cfg.lowercase_fallback,
               "Retry lookups in lowercase");
  app.add_option("--output", cfg.output, "Report format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", cfg.out, "Write the report here instead of stdout");
  app.add_option("--seed", cfg.seed, "Base seed for sampled benchmarks");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> words;
  std::size_t k_cap = 0;
  auto* children = app.add_subcommand("children", "Root of the words and its children");
  children->add_option("--words", words, "Support words")->delimiter(',')->required();
  children->add_option("--k-cap", k_cap, "Limit listed children (0 = all)");

  std::string shape = "tree";
  std::size_t ssn_cap = 10;
  auto* ssn = app.add_subcommand("ssn", "Semantic tree or network report");
  ssn->add_option("--shape", shape, "Network shape")
      ->check(CLI::IsMember({"tree", "binary", "ternary", "quad"}));
  ssn->add_option("--words", words, "Words in shape order")->delimiter(',')->required();
  ssn->add_option("--k-cap", ssn_cap, "Children listed per node");

  auto* tree = app.add_subcommand("tree", "Semantic tree report (ssn --shape tree)");
  tree->add_option("--words", words, "Support words")->delimiter(',')->required();
  tree->add_option("--k-cap", ssn_cap, "Children listed per node");

  std::string word;
  std::vector<std::string> minus_root;
  std::size_t k = 10;
  auto* neighbors = app.add_subcommand("neighbors", "Cosine neighbors of a word or residual");
  neighbors->add_option("--word", word, "Query word")->required();
  neighbors->add_option("--minus-root", minus_root, "Subtract the root of these words")
      ->delimiter(',');
  neighbors->add_option("--k", k, "Number of neighbors")->check(CLI::PositiveNumber);

  std::string corpus_path, analogy_path;
  std::vector<double> fractions{0.1, 0.2, 0.3, 0.4};
  std::vector<std::string> methods;
  std::size_t runs = 5;
  auto* eval_cat = app.add_subcommand("eval-category", "Category completion benchmark");
  eval_cat->add_option("--corpus", corpus_path, "Closed-set category JSON");
  eval_cat->add_option("--analogy-corpus", analogy_path,
                       "Derive 28 categories from a Google analogy file");
  eval_cat->add_option("--fractions", fractions, "Example fractions")->delimiter(',');
  eval_cat->add_option("--methods", methods, "baseline,ssn,svm100,svm500")->delimiter(',');
  eval_cat->add_option("--runs", runs, "Runs per category")->check(CLI::PositiveNumber);

  double epsilon = 1e-3;
  bool keep_inputs = false;
  auto* eval_ana = app.add_subcommand("eval-analogy", "Google analogy benchmark");
  eval_ana->add_option("--corpus", corpus_path, "questions-words.txt")->required();
  eval_ana->add_option("--methods", methods,
                       "VecOfAdd,VecOfMul,VecOfAvr,SSNbranch,SSNfilter")
      ->delimiter(',');
  eval_ana->add_option("--epsilon", epsilon, "VecOfMul denominator offset");
  eval_ana->add_flag("--keep-inputs", keep_inputs,
                     "Allow x1, y1, x2 as answers for VecOfAdd/VecOfMul");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    semtree::set_num_threads(cfg.threads);
    if (*children) {
      cmd_children(cfg, words, k_cap);
    } else if (*ssn) {
      cmd_ssn(cfg, shape, words, ssn_cap);
    } else if (*tree) {
      cmd_ssn(cfg, "tree", words, ssn_cap);
    } else if (*neighbors) {
      cmd_neighbors(cfg, word, minus_root, k);
    } else if (*eval_cat) {
      if (methods.empty()) methods = {"baseline", "ssn", "svm100", "svm500"};
      cmd_eval_category(cfg, corpus_path, analogy_path, fractions, methods, runs);
    } else if (*eval_ana) {
      cmd_eval_analogy(cfg, corpus_path, methods, epsilon, keep_inputs);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const semtree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

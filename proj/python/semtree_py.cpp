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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "semtree/semtree.hpp"

namespace py = pybind11;

namespace {

semtree::VocabFilter make_filter(std::optional<std::size_t> max_vocab, bool drop_multiword,
                                 bool lowercase_fallback) {
  semtree::VocabFilter f;
  f.max_vocab = max_vocab;
  f.drop_multiword = drop_multiword;
  f.lowercase_fallback = lowercase_fallback;
  return f;
}

semtree::EmbeddingSpace from_rows(std::vector<std::string> words,
                                  const std::vector<std::vector<double>>& rows,
                                  std::string source_tag, bool lowercase_fallback) {
  if (rows.empty()) throw semtree::Error(semtree::Errc::EmptyVocabulary, "no rows");
  const std::size_t dim = rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw semtree::Error(semtree::Errc::InconsistentDimension, "rows differ in length");
    }
    data.insert(data.end(), r.begin(), r.end());
  }
  return semtree::EmbeddingSpace(std::move(words), std::move(data), dim,
                                 std::move(source_tag), lowercase_fallback);
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<semtree::NamedVector> ssn_nodes(const semtree::EmbeddingSpace& space,
                                            const std::string& shape,
                                            const std::vector<std::string>& words) {
  if (shape == "binary") return semtree::binary_tree(space, words).nodes();
  if (shape == "ternary") return semtree::ternary_tree(space, words).nodes();
  if (shape == "quad") return semtree::quad_relation(space, words).nodes();
  throw semtree::Error(semtree::Errc::InvalidArgument, "unknown shape " + shape);
}

py::tuple answer(const semtree::AnalogyAnswer& a) {
  return py::make_tuple(a.word, a.score);
}

}  // namespace

PYBIND11_MODULE(_semtree, m) {
  m.doc() = "Sub-vector decomposition of word embeddings";

  py::register_exception<semtree::Error>(m, "SemtreeError", PyExc_ValueError);

  py::class_<semtree::EmbeddingSpace>(m, "EmbeddingSpace")
      .def(py::init(&from_rows), py::arg("words"), py::arg("rows"),
           py::arg("source_tag") = "memory", py::arg("lowercase_fallback") = false)
      .def("__len__", &semtree::EmbeddingSpace::size)
      .def_property_readonly("dim", &semtree::EmbeddingSpace::dim)
      .def_property_readonly("source_tag", &semtree::EmbeddingSpace::source_tag)
      .def_property_readonly("words", &semtree::EmbeddingSpace::words)
      .def("__contains__",
           [](const semtree::EmbeddingSpace& s, const std::string& w) {
             return s.resolve(w).has_value();
           })
      .def("vector", [](const semtree::EmbeddingSpace& s, const std::string& w) {
        auto r = s.lookup(w);
        return std::vector<double>(r.begin(), r.end());
      });

  m.def(
      "load_glove",
      [](const std::filesystem::path& p, std::optional<std::size_t> max_vocab,
         bool drop_multiword, bool lowercase_fallback) {
        py::gil_scoped_release release;
        return semtree::load_glove_text(p, make_filter(max_vocab, drop_multiword,
                                                       lowercase_fallback));
      },
      py::arg("path"), py::arg("max_vocab") = py::none(), py::arg("drop_multiword") = false,
      py::arg("lowercase_fallback") = false);
  m.def(
      "load_word2vec",
      [](const std::filesystem::path& p, std::optional<std::size_t> max_vocab,
         bool drop_multiword, bool lowercase_fallback) {
        py::gil_scoped_release release;
        return semtree::load_word2vec_binary(p, make_filter(max_vocab, drop_multiword,
                                                            lowercase_fallback));
      },
      py::arg("path"), py::arg("max_vocab") = py::none(), py::arg("drop_multiword") = false,
      py::arg("lowercase_fallback") = false);
  m.def("write_glove", &semtree::write_glove_text, py::arg("path"), py::arg("space"));
  m.def("write_word2vec", &semtree::write_word2vec_binary, py::arg("path"), py::arg("space"));

  m.def("is_subvector", [](const semtree::Vector& d, const semtree::Vector& v) {
    return semtree::is_subvector(d, v);
  });
  m.def("root", [](const std::vector<semtree::Vector>& s) { return semtree::root(s); },
        py::arg("support"));
  m.def(
      "children",
      [](const semtree::EmbeddingSpace& space, const semtree::Vector& delta) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& c : semtree::children(space, delta).children) {
          out.emplace_back(c.word, c.margin);
        }
        return out;
      },
      py::arg("space"), py::arg("delta"));
  m.def(
      "cosine_neighbors",
      [](const semtree::EmbeddingSpace& space, const semtree::Vector& q, std::size_t k,
         const std::vector<std::string>& exclude) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& n : semtree::cosine_neighbors(
                 space, q, k, std::unordered_set<std::string>(exclude.begin(), exclude.end()))) {
          out.emplace_back(n.word, n.score);
        }
        return out;
      },
      py::arg("space"), py::arg("query"), py::arg("k") = 10,
      py::arg("exclude") = std::vector<std::string>{});
  m.def("residual",
        [](const semtree::Vector& v, const std::vector<semtree::Vector>& s) {
          return semtree::residual(v, s);
        },
        py::arg("v"), py::arg("support"));

  py::class_<semtree::SemanticTree>(m, "SemanticTree")
      .def("__len__", &semtree::SemanticTree::size)
      .def_property_readonly("tokens",
                             [](const semtree::SemanticTree& t) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.token(i));
                               return out;
                             })
      .def_property_readonly("alpha", &semtree::SemanticTree::alpha)
      .def_property_readonly("v_min", &semtree::SemanticTree::v_min)
      .def_property_readonly("branches", &semtree::SemanticTree::branches)
      .def("orthogonal_branch", &semtree::orthogonal_branch, py::arg("i"))
      .def("offset", &semtree::SemanticTree::offset, py::arg("i"), py::arg("j"));
  m.def("build_tree", &semtree::build_tree, py::arg("space"), py::arg("words"));
  m.def(
      "ssn_report",
      [](const semtree::EmbeddingSpace& space, const std::string& shape,
         const std::vector<std::string>& words, std::size_t k_cap) {
        auto report = semtree::describe(ssn_nodes(space, shape, words), space, k_cap);
        report.shape = shape;
        report.words = words;
        return json_to_py(semtree::to_json(report));
      },
      py::arg("space"), py::arg("shape"), py::arg("words"), py::arg("k_cap") = 10);

  m.def(
      "vec_of_add",
      [](const semtree::EmbeddingSpace& s, const std::string& x1, const std::string& y1,
         const std::string& x2) { return answer(semtree::vec_of_add(s, x1, y1, x2)); },
      py::arg("space"), py::arg("x1"), py::arg("y1"), py::arg("x2"));
  m.def(
      "vec_of_mul",
      [](const semtree::EmbeddingSpace& s, const std::string& x1, const std::string& y1,
         const std::string& x2, double eps) {
        return answer(semtree::vec_of_mul(s, x1, y1, x2, eps));
      },
      py::arg("space"), py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("epsilon") = 1e-3);
  m.def(
      "vec_of_avr",
      [](const semtree::EmbeddingSpace& s,
         const std::vector<std::pair<std::string, std::string>>& pairs, const std::string& x2) {
        return answer(semtree::vec_of_avr(s, pairs, x2));
      },
      py::arg("space"), py::arg("pairs"), py::arg("x2"));
  m.def(
      "ssn_branch",
      [](const semtree::EmbeddingSpace& s, const std::vector<std::string>& xs,
         const std::vector<std::string>& ys, const std::string& x2) {
        return answer(semtree::ssn_branch(s, xs, ys, x2));
      },
      py::arg("space"), py::arg("xs"), py::arg("ys"), py::arg("x2"));
  m.def(
      "ssn_filter",
      [](const semtree::EmbeddingSpace& s, const std::vector<std::string>& xs,
         const std::vector<std::string>& ys, const std::string& x2) {
        return answer(semtree::ssn_filter(s, xs, ys, x2));
      },
      py::arg("space"), py::arg("xs"), py::arg("ys"), py::arg("x2"));

  m.def(
      "complete_category",
      [](const semtree::EmbeddingSpace& s, const std::vector<std::string>& examples) {
        auto c = semtree::complete_category(s, examples);
        return py::make_tuple(c.tokens, c.fell_back);
      },
      py::arg("space"), py::arg("examples"));
  m.def("f1", &semtree::f1_set, py::arg("predicted"), py::arg("gold"));

  m.def(
      "eval_analogy",
      [](const semtree::EmbeddingSpace& s, const std::filesystem::path& corpus,
         const std::string& method) {
        semtree::AnalogyReport rep;
        {
          py::gil_scoped_release release;
          rep = semtree::run_analogy_benchmark(s, semtree::parse_google_analogy(corpus),
                                               semtree::parse_analogy_method(method));
        }
        return json_to_py(semtree::to_json(rep));
      },
      py::arg("space"), py::arg("corpus"), py::arg("method"));
  m.def(
      "eval_category",
      [](const semtree::EmbeddingSpace& s, const std::filesystem::path& corpus,
         std::vector<double> fractions, std::vector<std::string> methods, std::size_t runs,
         std::uint64_t seed) {
        semtree::CategoryBenchmarkOptions o;
        o.fractions = std::move(fractions);
        o.methods.clear();
        for (const auto& name : methods) o.methods.push_back(semtree::parse_category_method(name));
        o.n_runs = runs;
        o.base_seed = seed;
        semtree::CategoryEvalReport rep;
        {
          py::gil_scoped_release release;
          rep = semtree::run_category_benchmark(s, semtree::load_category_corpus(corpus), o);
        }
        return json_to_py(semtree::to_json(rep));
      },
      py::arg("space"), py::arg("corpus"),
      py::arg("fractions") = std::vector<double>{0.1, 0.2, 0.3, 0.4},
      py::arg("methods") = std::vector<std::string>{"baseline", "ssn", "svm100", "svm500"},
      py::arg("runs") = 5, py::arg("seed") = 0);
  m.def("set_num_threads", &semtree::set_num_threads, py::arg("n"));
}

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

#include "semtree/corpora.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "semtree/error.hpp"

namespace semtree {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void append_unique(std::vector<std::string>& out,
                   std::unordered_set<std::string>& seen, const std::string& w) {
  if (seen.insert(w).second) out.push_back(w);
}

}  // namespace

std::size_t CategoryCorpus::total_members() const {
  std::size_t n = 0;
  for (const auto& c : categories) n += c.members.size();
  return n;
}

const Category* CategoryCorpus::find(const std::string& name) const {
  for (const auto& c : categories) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const AnalogySection* AnalogyCorpus::find(const std::string& name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::size_t AnalogyCorpus::pair_slot_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += 2 * s.pairs.size();
  return n;
}

AnalogyCorpus parse_google_analogy(std::istream& in) {
  AnalogyCorpus corpus;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    if (line.rfind(": ", 0) == 0) {
      std::istringstream hs(line.substr(2));
      std::string name;
      hs >> name;
      if (name.empty()) {
        throw Error(Errc::MalformedLine,
                    "line " + std::to_string(lineno) + ": empty section name");
      }
      corpus.sections.push_back({name, {}});
      seen.clear();
      continue;
    }

    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.size() != 4) {
      throw Error(Errc::MalformedLine, "line " + std::to_string(lineno) + ": " +
                                           std::to_string(tok.size()) +
                                           " tokens");
    }
    if (corpus.sections.empty()) {
      throw Error(Errc::MalformedLine,
                  "line " + std::to_string(lineno) + ": question before header");
    }
    auto& section = corpus.sections.back();
    for (int k : {0, 2}) {
      std::pair<std::string, std::string> p{tok[k], tok[k + 1]};
      if (seen.insert(p).second) section.pairs.push_back(std::move(p));
    }
    corpus.questions.push_back({tok[0], tok[1], tok[2], tok[3], section.name});
  }
  std::erase_if(corpus.sections,
                [](const AnalogySection& s) { return s.pairs.empty(); });
  if (corpus.sections.empty()) throw Error(Errc::NoSections, "no questions");
  return corpus;
}

AnalogyCorpus parse_google_analogy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return parse_google_analogy(in);
}

std::string format_google_analogy(const AnalogyCorpus& corpus) {
  std::string out;
  const std::string* current = nullptr;
  for (const auto& q : corpus.questions) {
    if (!current || *current != q.section) {
      out += ": " + q.section + "\n";
      current = &q.section;
    }
    out += q.x1 + " " + q.y1 + " " + q.x2 + " " + q.y2 + "\n";
  }
  return out;
}

CategoryCorpus analogy_sections_to_categories(const AnalogyCorpus& corpus) {
  CategoryCorpus out;
  out.name = "google_analogy_categories";
  for (const auto& s : corpus.sections) {
    Category xs{s.name + "/x", {}};
    Category ys{s.name + "/y", {}};
    std::unordered_set<std::string> seen_x, seen_y;
    for (const auto& [x, y] : s.pairs) {
      append_unique(xs.members, seen_x, x);
      append_unique(ys.members, seen_y, y);
    }
    out.categories.push_back(std::move(xs));
    out.categories.push_back(std::move(ys));
  }
  return out;
}

CategoryCorpus parse_category_corpus(const std::string& json_text) {
  using json = nlohmann::ordered_json;

  // The parser keeps only the last of duplicated object keys, so category
  // names are checked while parsing.
  std::vector<std::string> keys;
  std::string duplicate;
  json::parser_callback_t cb = [&](int depth, json::parse_event_t event,
                                   json& parsed) {
    if (event == json::parse_event_t::key && depth == 2 &&
        parsed.is_string()) {
      auto name = parsed.get<std::string>();
      for (const auto& k : keys) {
        if (k == name && duplicate.empty()) duplicate = name;
      }
      keys.push_back(name);
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(json_text, cb);
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaViolation, e.what());
  }
  if (!duplicate.empty()) throw Error(Errc::DuplicateCategory, duplicate);
  if (!doc.is_object() || !doc.contains("categories") ||
      !doc["categories"].is_object()) {
    throw Error(Errc::SchemaViolation, "expected an object with 'categories'");
  }

  CategoryCorpus corpus;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw Error(Errc::SchemaViolation, "'name' must be a string");
    }
    corpus.name = doc["name"].get<std::string>();
  }
  for (const auto& [name, members] : doc["categories"].items()) {
    if (!members.is_array()) {
      throw Error(Errc::SchemaViolation, name + ": members must be an array");
    }
    Category cat{name, {}};
    std::unordered_set<std::string> seen;
    for (const auto& m : members) {
      if (!m.is_string()) {
        throw Error(Errc::SchemaViolation, name + ": members must be strings");
      }
      append_unique(cat.members, seen, m.get<std::string>());
    }
    if (cat.members.empty()) throw Error(Errc::EmptyCategory, name);
    corpus.categories.push_back(std::move(cat));
  }
  return corpus;
}

CategoryCorpus load_category_corpus(const std::filesystem::path& path) {
  return parse_category_corpus(read_file(path));
}

std::string format_category_corpus(const CategoryCorpus& corpus) {
  nlohmann::ordered_json doc;
  doc["name"] = corpus.name;
  auto& cats = doc["categories"] = nlohmann::ordered_json::object();
  for (const auto& c : corpus.categories) cats[c.name] = c.members;
  return doc.dump(2) + "\n";
}

}  // namespace semtree

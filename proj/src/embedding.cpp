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

#include "semtree/embedding.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "semtree/error.hpp"

namespace semtree {

namespace {

bool is_multiword(std::string_view token) {
  return token.find('_') != std::string_view::npos ||
         token.find(' ') != std::string_view::npos;
}

// Accumulates kept entries and applies the filter's retention rules.
class SpaceBuilder {
 public:
  SpaceBuilder(const VocabFilter& filter, std::size_t dim)
      : filter_(filter), dim_(dim) {}

  bool full() const {
    return filter_.max_vocab && words_.size() >= *filter_.max_vocab;
  }

  // Returns true when the entry is kept; values must hold dim_ entries.
  bool offer(std::string token, const std::vector<double>& values) {
    if (full()) return false;
    if (filter_.drop_multiword && is_multiword(token)) return false;
    if (seen_.contains(token)) return false;
    for (double v : values) {
      if (!std::isfinite(v)) throw Error(Errc::NonFiniteValue, token);
    }
    seen_.insert(token);
    words_.push_back(std::move(token));
    matrix_.insert(matrix_.end(), values.begin(), values.end());
    return true;
  }

  EmbeddingSpace finish(std::string source_tag) && {
    if (words_.empty()) throw Error(Errc::EmptyVocabulary, source_tag);
    return EmbeddingSpace(std::move(words_), std::move(matrix_), dim_,
                          std::move(source_tag), filter_.lowercase_fallback);
  }

 private:
  const VocabFilter& filter_;
  std::size_t dim_;
  std::vector<std::string> words_;
  std::vector<double> matrix_;
  std::unordered_set<std::string> seen_;
};

std::string describe_source(const std::filesystem::path& path,
                            const VocabFilter& filter, std::string_view kind) {
  std::string tag = std::string(kind) + ":" + path.filename().string();
  if (filter.max_vocab) tag += ":max_vocab=" + std::to_string(*filter.max_vocab);
  if (filter.drop_multiword) tag += ":drop_multiword";
  return tag;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

float float_from_le(const unsigned char* p) {
  std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                       (static_cast<std::uint32_t>(p[1]) << 8) |
                       (static_cast<std::uint32_t>(p[2]) << 16) |
                       (static_cast<std::uint32_t>(p[3]) << 24);
  return std::bit_cast<float>(bits);
}

void float_to_le(float f, unsigned char* p) {
  auto bits = std::bit_cast<std::uint32_t>(f);
  p[0] = static_cast<unsigned char>(bits & 0xFF);
  p[1] = static_cast<unsigned char>((bits >> 8) & 0xFF);
  p[2] = static_cast<unsigned char>((bits >> 16) & 0xFF);
  p[3] = static_cast<unsigned char>((bits >> 24) & 0xFF);
}

std::ifstream open_input(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return in;
}

}  // namespace

void VocabFilter::validate() const {
  if (max_vocab && *max_vocab == 0) {
    throw Error(Errc::InvalidArgument, "max_vocab must be >= 1");
  }
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

EmbeddingSpace::EmbeddingSpace(std::vector<std::string> words,
                               std::vector<double> matrix, std::size_t dim,
                               std::string source_tag, bool lowercase_fallback)
    : words_(std::move(words)),
      matrix_(std::move(matrix)),
      dim_(dim),
      source_tag_(std::move(source_tag)),
      lowercase_fallback_(lowercase_fallback) {
  if (dim_ == 0) throw Error(Errc::InvalidArgument, "dim must be positive");
  if (words_.empty()) throw Error(Errc::EmptyVocabulary, source_tag_);
  if (matrix_.size() != words_.size() * dim_) {
    throw Error(Errc::DimensionMismatch,
                "matrix holds " + std::to_string(matrix_.size()) +
                    " values for " + std::to_string(words_.size()) + " x " +
                    std::to_string(dim_));
  }
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], i).second) {
      throw Error(Errc::InvalidArgument, "duplicate token " + words_[i]);
    }
  }
  norms_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!std::isfinite(matrix_[i * dim_ + j])) {
        throw Error(Errc::NonFiniteValue, words_[i]);
      }
    }
    norms_[i] = norm(row(i));
  }
}

VectorView EmbeddingSpace::row(std::size_t i) const {
  if (i >= words_.size()) {
    throw Error(Errc::IndexOutOfRange, "row " + std::to_string(i));
  }
  return VectorView(matrix_.data() + i * dim_, dim_);
}

std::optional<std::size_t> EmbeddingSpace::index_of(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EmbeddingSpace::resolve(std::string_view word) const {
  if (auto i = index_of(word)) return i;
  if (lowercase_fallback_) return index_of(ascii_lower(word));
  return std::nullopt;
}

std::size_t EmbeddingSpace::require(std::string_view word) const {
  if (auto i = resolve(word)) return *i;
  throw Error(Errc::OutOfVocabulary, std::string(word));
}

EmbeddingSpace load_word2vec_binary(const std::filesystem::path& path,
                                    const VocabFilter& filter) {
  filter.validate();
  auto in = open_input(path, true);

  std::string header;
  if (!std::getline(in, header)) {
    throw Error(Errc::MalformedHeader, "missing header in " + path.string());
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  auto space_at = header.find(' ');
  std::size_t count = 0;
  std::size_t dim = 0;
  if (space_at == std::string::npos ||
      !parse_number(std::string_view(header).substr(0, space_at), count) ||
      !parse_number(std::string_view(header).substr(space_at + 1), dim) ||
      dim == 0) {
    throw Error(Errc::MalformedHeader, "'" + header + "'");
  }

  SpaceBuilder builder(filter, dim);
  std::vector<unsigned char> raw(dim * sizeof(float));
  std::vector<double> values(dim);
  std::string token;
  for (std::size_t entry = 0; entry < count && !builder.full(); ++entry) {
    token.clear();
    int c = in.get();
    while (c == '\n') c = in.get();
    while (c != std::char_traits<char>::eof() && c != ' ') {
      token.push_back(static_cast<char>(c));
      c = in.get();
    }
    if (c == std::char_traits<char>::eof()) {
      throw Error(Errc::TruncatedRecord,
                  "entry " + std::to_string(entry) + " ('" + token + "')");
    }
    if (!in.read(reinterpret_cast<char*>(raw.data()),
                 static_cast<std::streamsize>(raw.size()))) {
      throw Error(Errc::TruncatedRecord,
                  "entry " + std::to_string(entry) + " ('" + token + "')");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      values[j] = static_cast<double>(float_from_le(raw.data() + 4 * j));
    }
    builder.offer(token, values);
  }
  return std::move(builder).finish(describe_source(path, filter, "word2vec"));
}

EmbeddingSpace load_glove_text(const std::filesystem::path& path,
                               const VocabFilter& filter) {
  filter.validate();
  auto in = open_input(path, false);

  std::optional<SpaceBuilder> builder;
  std::size_t dim = 0;
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::string_view rest(line);
    auto cut = rest.find(' ');
    if (cut == std::string_view::npos) {
      throw Error(Errc::InconsistentDimension,
                  "line " + std::to_string(lineno) + ": no values");
    }
    std::string token(rest.substr(0, cut));
    rest.remove_prefix(cut + 1);

    values.clear();
    while (!rest.empty()) {
      auto next = rest.find(' ');
      auto field = rest.substr(0, next);
      double v = 0.0;
      if (!parse_number(field, v)) {
        throw Error(Errc::UnparsableNumber, "line " + std::to_string(lineno) +
                                                ": '" + std::string(field) + "'");
      }
      values.push_back(v);
      if (next == std::string_view::npos) break;
      rest.remove_prefix(next + 1);
    }

    if (!builder) {
      dim = values.size();
      if (dim == 0) {
        throw Error(Errc::InconsistentDimension,
                    "line " + std::to_string(lineno) + ": no values");
      }
      builder.emplace(filter, dim);
    } else if (values.size() != dim) {
      throw Error(Errc::InconsistentDimension,
                  "line " + std::to_string(lineno) + ": " +
                      std::to_string(values.size()) + " values, expected " +
                      std::to_string(dim));
    }
    builder->offer(std::move(token), values);
    if (builder->full()) break;
  }
  if (!builder) throw Error(Errc::EmptyVocabulary, path.string());
  return std::move(*builder).finish(describe_source(path, filter, "glove"));
}

void write_word2vec_binary(const std::filesystem::path& path,
                           const EmbeddingSpace& space) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << space.size() << ' ' << space.dim() << '\n';
  std::vector<unsigned char> raw(space.dim() * sizeof(float));
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << space.word(i) << ' ';
    auto r = space.row(i);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      float_to_le(static_cast<float>(r[j]), raw.data() + 4 * j);
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    out << '\n';
  }
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

void write_glove_text(const std::filesystem::path& path,
                      const EmbeddingSpace& space) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  char buf[64];
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << space.word(i);
    for (double v : space.row(i)) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), static_cast<float>(v));
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

std::vector<Neighbor> cosine_neighbors_by_index(
    const EmbeddingSpace& space, VectorView q, std::size_t k,
    const std::vector<std::size_t>& exclude) {
  if (q.size() != space.dim()) {
    throw Error(Errc::DimensionMismatch, "query has dim " +
                                             std::to_string(q.size()) +
                                             ", space has " +
                                             std::to_string(space.dim()));
  }
  const double qn = norm(q);
  if (qn == 0.0) throw Error(Errc::ZeroQueryVector, "cosine_neighbors");

  std::vector<char> skip(space.size(), 0);
  for (std::size_t i : exclude) {
    if (i < skip.size()) skip[i] = 1;
  }
  std::vector<std::size_t> order;
  std::vector<double> scores(space.size());
  order.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (skip[i]) continue;
    scores[i] = cosine(q, qn, space.row(i), space.row_norm(i));
    order.push_back(i);
  }
  auto better = [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return space.word(a) < space.word(b);
  };
  k = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), better);

  std::vector<Neighbor> out;
  out.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    out.push_back({space.word(order[r]), order[r], scores[order[r]]});
  }
  return out;
}

std::vector<Neighbor> cosine_neighbors(
    const EmbeddingSpace& space, VectorView q, std::size_t k,
    const std::unordered_set<std::string>& exclude) {
  std::vector<std::size_t> idx;
  for (const auto& w : exclude) {
    if (auto i = space.index_of(w)) idx.push_back(*i);
  }
  return cosine_neighbors_by_index(space, q, k, idx);
}

}  // namespace semtree

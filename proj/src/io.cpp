// Copyright 2026 The Amity Authors
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

#include "amity/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "amity/errors.hpp"
#include "amity/generators.hpp"

namespace amity {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_number(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string edge_text(std::uint64_t u, std::uint64_t v) {
  return std::to_string(u) + " " + std::to_string(v);
}

}  // namespace

std::string serialize_edge_list(const Digraph& g) {
  std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += edge_text(u, v) + "\n";
  return out;
}

std::string serialize_document(const GraphDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "# name: " + doc.name + "\n";
  for (const auto& [key, value] : doc.metadata) out += "# " + key + ": " + value + "\n";
  return out + serialize_edge_list(doc.graph);
}

GraphDocument parse_document(std::string_view text) {
  GraphDocument doc;
  auto lines = split_lines(text);
  std::optional<std::uint64_t> n, m;
  std::size_t header_line = 0;
  std::vector<std::vector<VertexId>> adjacency;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::size_t edges = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      auto colon = body.find(':');
      if (colon != std::string_view::npos && colon > 0 && body.substr(0, colon).find(' ') == std::string_view::npos) {
        std::string key(trim(body.substr(0, colon)));
        std::string value(trim(body.substr(colon + 1)));
        if (key == "name") {
          doc.name = value;
        } else {
          doc.metadata.emplace_back(std::move(key), std::move(value));
        }
      }
      continue;
    }
    auto parts = fields(line);
    if (parts.size() != 2) throw ParseError(line_no, "expected two integers, got \"" + std::string(line) + "\"");
    auto a = to_number(parts[0]);
    auto b = to_number(parts[1]);
    if (!a || !b) throw ParseError(line_no, "expected two non-negative integers, got \"" + std::string(line) + "\"");
    if (!n) {
      n = a;
      m = b;
      header_line = line_no;
      adjacency.resize(*n);
      continue;
    }
    if (edges == *m) throw ParseError(line_no, "more edges than the " + std::to_string(*m) + " declared");
    if (*a >= *n || *b >= *n) {
      throw ParseError(line_no, "edge " + edge_text(*a, *b) + " has a vertex out of range [0, " + std::to_string(*n) + ")");
    }
    if (*a == *b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*a));
    if (!seen.insert({*a, *b}).second) throw ParseError(line_no, "duplicate edge " + edge_text(*a, *b));
    adjacency[*a].push_back(*b);
    ++edges;
  }
  if (!n) throw ParseError(lines.size() + 1, "missing \"n m\" header");
  if (edges != *m) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(*m) + " edges after line " +
                                           std::to_string(header_line) + ", found " + std::to_string(edges));
  }
  doc.graph = Digraph(adjacency);
  return doc;
}

Digraph parse_edge_list(std::string_view text) { return parse_document(text).graph; }

Digraph parse_dot(std::string_view text) {
  // Tokens: identifiers/numbers, "->", "{", "}", ";" and line breaks.
  struct Token {
    std::string text;
    std::size_t line;
  };
  std::vector<Token> tokens;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == '\n') {
      tokens.push_back({";", line});
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({"->", line});
      i += 2;
    } else if (c == '{' || c == '}' || c == ';') {
      tokens.push_back({std::string(1, c), line});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tokens.push_back({std::string(text.substr(i, j - i)), line});
      i = j;
    } else {
      throw ParseError(line, std::string("unsupported character '") + c + "' in DOT input");
    }
  }

  std::size_t pos = 0;
  auto skip_breaks = [&]() {
    while (pos < tokens.size() && tokens[pos].text == ";") ++pos;
  };
  skip_breaks();
  if (pos >= tokens.size() || tokens[pos].text != "digraph") throw ParseError(1, "expected 'digraph'");
  ++pos;
  if (pos < tokens.size() && tokens[pos].text != "{" && tokens[pos].text != ";") ++pos;  // graph name
  skip_breaks();
  if (pos >= tokens.size() || tokens[pos].text != "{") throw ParseError(line, "expected '{'");
  ++pos;

  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_lines;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };
  bool closed = false;
  while (pos < tokens.size()) {
    const Token& tok = tokens[pos];
    if (tok.text == ";") {
      ++pos;
      continue;
    }
    if (tok.text == "}") {
      closed = true;
      ++pos;
      break;
    }
    if (tok.text == "->" || tok.text == "{") throw ParseError(tok.line, "unexpected '" + tok.text + "'");
    std::size_t prev = vertex(tok.text);
    ++pos;
    while (pos < tokens.size() && tokens[pos].text == "->") {
      ++pos;
      if (pos >= tokens.size() || tokens[pos].text == ";" || tokens[pos].text == "}" || tokens[pos].text == "->") {
        throw ParseError(tokens[pos - 1].line, "edge without a head");
      }
      std::size_t next = vertex(tokens[pos].text);
      edges.emplace_back(prev, next);
      edge_lines.push_back(tokens[pos].line);
      prev = next;
      ++pos;
    }
  }
  if (!closed) throw ParseError(line, "missing '}'");
  skip_breaks();
  if (pos < tokens.size()) throw ParseError(tokens[pos].line, "content after the digraph block");

  bool numeric = !names.empty() && std::all_of(names.begin(), names.end(), [](const std::string& s) {
    return to_number(s).has_value();
  });
  std::vector<VertexId> id(names.size());
  std::size_t n = names.size();
  if (numeric) {
    n = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      id[i] = *to_number(names[i]);
      n = std::max<std::size_t>(n, id[i] + 1);
    }
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) id[i] = i;
  }
  std::vector<std::vector<VertexId>> adjacency(n);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    VertexId a = id[edges[e].first];
    VertexId b = id[edges[e].second];
    if (a == b) throw ParseError(edge_lines[e], "self-loop at " + names[edges[e].first]);
    if (!seen.insert({a, b}).second) {
      throw ParseError(edge_lines[e], "duplicate edge " + names[edges[e].first] + " -> " + names[edges[e].second]);
    }
    adjacency[a].push_back(b);
  }
  return Digraph(adjacency);
}

std::string serialize_partition(const Partition& p) {
  std::string out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    out += static_cast<char>('0' + p.block(v));
    out += '\n';
  }
  return out;
}

Partition parse_partition(std::string_view text, std::optional<std::size_t> n) {
  std::vector<std::uint8_t> blocks;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (line != "0" && line != "1") throw ParseError(i + 1, "partition lines must be 0 or 1");
    blocks.push_back(static_cast<std::uint8_t>(line[0] - '0'));
  }
  if (n && blocks.size() != *n) {
    throw ParseError(lines.size() + 1, "partition has " + std::to_string(blocks.size()) + " entries, expected " +
                                           std::to_string(*n));
  }
  return Partition(std::move(blocks));
}

std::vector<VertexId> parse_vertex_list(std::string_view text) {
  std::vector<VertexId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto value = to_number(trim(text.substr(start, end - start)));
    if (!value) throw ParseError(1, "bad vertex list \"" + std::string(text) + "\"");
    out.push_back(*value);
    start = end + 1;
  }
  return out;
}

// --- generator specs ---------------------------------------------------------

namespace {

struct SpecNode {
  std::string name;
  bool is_number = false;
  std::uint64_t number = 0;
  std::vector<SpecNode> args;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SpecNode parse() {
    SpecNode node = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(1, "generator spec \"" + std::string(text_) + "\": " + why);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  SpecNode term() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name or number");
    SpecNode node;
    node.name = std::string(text_.substr(start, pos_ - start));
    if (auto value = to_number(node.name)) {
      node.is_number = true;
      node.number = *value;
      return node;
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return node;
      }
      while (true) {
        node.args.push_back(term());
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Digraph build(const SpecNode& node, std::uint64_t seed) {
  auto numbers = [&](std::size_t min_count, std::size_t max_count) {
    if (node.args.size() < min_count || node.args.size() > max_count) {
      throw PreconditionError("generator " + node.name + " takes " + std::to_string(min_count) +
                              (min_count == max_count ? "" : "+") + " integer arguments");
    }
    std::vector<std::size_t> values;
    for (const auto& a : node.args) {
      if (!a.is_number) throw PreconditionError("generator " + node.name + " takes integer arguments");
      values.push_back(a.number);
    }
    return values;
  };
  const std::string& k = node.name;
  if (node.is_number) throw PreconditionError("a number is not a generator spec");
  if (k == "cycle") return directed_cycle(numbers(1, 1)[0]);
  if (k == "complete") return complete_digraph(numbers(1, 1)[0]);
  if (k == "circulant") {
    auto a = numbers(2, 1000);
    return circulant(a[0], std::vector<std::size_t>(a.begin() + 1, a.end()));
  }
  if (k == "random_d_out") {
    auto a = numbers(2, 2);
    return random_d_out(a[0], a[1], seed);
  }
  if (k == "random_regular") {
    auto a = numbers(2, 2);
    return random_regular(a[0], a[1], seed);
  }
  if (k == "random_layered") {
    auto a = numbers(3, 3);
    return random_layered(a[0], a[1], a[2], seed);
  }
  if (k == "dominated_cubic_same" || k == "lemma46_left") {
    numbers(0, 0);
    return dominated_cubic_same_orientation();
  }
  if (k == "dominated_cubic_opposite" || k == "lemma46_right") {
    numbers(0, 0);
    return dominated_cubic_opposite_orientation();
  }
  if (k == "disjoint_union" || k == "union") {
    if (node.args.size() < 2) throw PreconditionError("disjoint_union needs at least two digraphs");
    Digraph g = build(node.args[0], seed);
    for (std::size_t i = 1; i < node.args.size(); ++i) g = disjoint_union(g, build(node.args[i], seed + i));
    return g;
  }
  throw PreconditionError("unknown generator kind \"" + k + "\"");
}

}  // namespace

Digraph generate(std::string_view spec, std::uint64_t seed) { return build(SpecParser(spec).parse(), seed); }

std::vector<std::string> generator_kinds() {
  return {"cycle(n)",
          "complete(n)",
          "circulant(n,s1,s2,...)",
          "random_d_out(n,d)",
          "random_regular(n,d)",
          "random_layered(n,d,layers)",
          "disjoint_union(a,b,...)",
          "dominated_cubic_same",
          "dominated_cubic_opposite",
          "lemma46_left",
          "lemma46_right"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io_error", "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Digraph load_graph(const std::string& source, std::uint64_t seed) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::string text = read_file(source);
    std::string_view body = trim(text);
    while (!body.empty() && (body.front() == '#' || body.substr(0, 2) == "//")) {
      auto next = body.find('\n');
      body = next == std::string_view::npos ? std::string_view() : trim(body.substr(next + 1));
    }
    if (body.substr(0, 7) == "digraph") return parse_dot(text);
    return parse_edge_list(text);
  }
  return generate(source, seed);
}

std::string digest(const Digraph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_edge_list(g)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace amity

// Copyright 2026 The distgi Authors.
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

#include "distgi/graph_io.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace distgi {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_graph6_byte(char c) {
  const int b = static_cast<unsigned char>(c);
  return b >= kBias && b <= kMaxByte;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

// Reads `count` 6-bit groups as a big-endian integer.
std::int64_t read_size_groups(std::string_view s, size_t pos, int count) {
  if (pos + count > s.size()) throw ParseError("graph6: truncated size field");
  std::int64_t v = 0;
  for (int i = 0; i < count; ++i) {
    const char c = s[pos + i];
    if (!is_graph6_byte(c)) throw ParseError("graph6: illegal byte in size");
    v = (v << 6) | (static_cast<unsigned char>(c) - kBias);
  }
  return v;
}

void append_size(std::string& out, std::int64_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  if (n >= 258048) {
    out.push_back(static_cast<char>(kMaxByte));
    groups = 6;
  }
  out.push_back(static_cast<char>(kMaxByte));
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char c : line) {
    if (!is_graph6_byte(c)) {
      throw ParseError("graph6: illegal byte " +
                       std::to_string(static_cast<unsigned char>(c)));
    }
  }

  std::int64_t n = 0;
  size_t pos = 0;
  if (static_cast<unsigned char>(line[0]) != kMaxByte) {
    n = static_cast<unsigned char>(line[0]) - kBias;
    pos = 1;
  } else if (line.size() >= 2 &&
             static_cast<unsigned char>(line[1]) == kMaxByte) {
    n = read_size_groups(line, 2, 6);
    pos = 8;
    if (n < 258048) throw ParseError("graph6: non-canonical size prefix");
  } else {
    n = read_size_groups(line, 1, 3);
    pos = 4;
    if (n < 63) throw ParseError("graph6: non-canonical size prefix");
  }
  if (n > (std::int64_t{1} << 31) - 1) {
    throw ParseError("graph6: vertex count too large");
  }

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t bytes = (bits + 5) / 6;
  if (static_cast<std::int64_t>(line.size() - pos) != bytes) {
    throw ParseError(static_cast<std::int64_t>(line.size() - pos) < bytes
                         ? "graph6: truncated adjacency bits"
                         : "graph6: trailing bytes after adjacency bits");
  }

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[pos + k / 6]) - kBias;
      if (byte & (0x20 >> (k % 6))) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0) {
    const int last = static_cast<unsigned char>(line.back()) - kBias;
    const int used = static_cast<int>(bits - (bytes - 1) * 6);
    if (last & ((1 << (6 - used)) - 1)) {
      throw ParseError("graph6: non-zero padding bits");
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::int64_t n = g.num_vertices();
  std::string out;
  append_size(out, n);
  const std::int64_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const auto& [i, j] : g.edges()) {
    // Column-major upper triangle: bit index j(j-1)/2 + i for i < j.
    const std::int64_t k = static_cast<std::int64_t>(j) * (j - 1) / 2 + i;
    packed[k / 6] |= static_cast<unsigned char>(0x20 >> (k % 6));
  }
  for (unsigned char b : packed) out.push_back(static_cast<char>(b + kBias));
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    std::istringstream ls{std::string(t)};
    std::string tag;
    ls >> tag;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (tag == "p") {
      if (n >= 0) throw ParseError("dimacs: duplicate header" + where);
      std::string kind;
      long long nn = -1, mm = -1;
      if (!(ls >> kind >> nn >> mm) || (kind != "edge" && kind != "col") ||
          nn < 0 || mm < 0) {
        throw ParseError("dimacs: malformed header" + where);
      }
      n = static_cast<int>(nn);
    } else if (tag == "e") {
      if (n < 0) throw ParseError("dimacs: edge before header" + where);
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError("dimacs: malformed edge" + where);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError("dimacs: vertex index out of range" + where);
      }
      if (u == v) throw ParseError("dimacs: self-loop" + where);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError("dimacs: unknown line type '" + tag + "'" + where);
    }
  }
  if (n < 0) throw ParseError("dimacs: missing 'p edge' header");
  return Graph(n, edges);
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) {
    os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  }
  return os.str();
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "dimacs") return GraphFormat::kDimacs;
  throw PreconditionError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat sniff_format(std::string_view path, std::string_view contents) {
  if (path.ends_with(".g6") || path.ends_with(".graph6")) {
    return GraphFormat::kGraph6;
  }
  if (path.ends_with(".dimacs") || path.ends_with(".col") ||
      path.ends_with(".dim")) {
    return GraphFormat::kDimacs;
  }
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.starts_with(kHeader)) return GraphFormat::kGraph6;
    for (char c : t) {
      if (!is_graph6_byte(c)) return GraphFormat::kDimacs;
    }
    return GraphFormat::kGraph6;
  }
  return GraphFormat::kDimacs;
}

Graph parse_graph(std::string_view contents, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = sniff_format("", contents);
  if (format == GraphFormat::kDimacs) return parse_dimacs(contents);
  // First non-blank line.
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (!t.empty()) return parse_graph6(t);
  }
  throw ParseError("graph6: empty input");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  const std::string contents = read_file(path);
  if (format == GraphFormat::kAuto) format = sniff_format(path, contents);
  return parse_graph(contents, format);
}

}  // namespace distgi

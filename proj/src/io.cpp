#include "coedge/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace coedge {

namespace {

std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

int sextet(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw ParseError("graph6 byte " + std::to_string(v) + " at offset " + std::to_string(pos) + " is out of range");
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  if (s.empty()) throw ParseError("empty graph6 record");

  std::size_t pos = 0;
  long long n = 0;
  const int first = sextet(s[0], 0);
  if (first < 63) {
    n = first;
    pos = 1;
  } else if (s.size() >= 2 && sextet(s[1], 1) == 63) {
    if (s.size() < 8) throw ParseError("truncated graph6 size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(s[i], i);
    pos = 8;
    if (n < 258048) throw ParseError("graph6 size header is not minimal");
  } else {
    if (s.size() < 4) throw ParseError("truncated graph6 size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(s[i], i);
    pos = 4;
    if (n < 63) throw ParseError("graph6 size header is not minimal");
  }
  if (n > 100000) throw ParseError("graph6 order " + std::to_string(n) + " is too large");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - pos < bytes) throw ParseError("graph6 data too short");
  if (s.size() - pos > bytes) throw ParseError("trailing characters after graph6 data");

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(s[pos + k / 6], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (; k < bytes * 6; ++k)
    if ((sextet(s[pos + k / 6], pos + k / 6) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero padding bits in graph6 data");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> tokens;
  std::size_t line = 1;
  std::vector<std::size_t> token_line;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' && text[j] != '\n') ++j;
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
      if (ec != std::errc() || ptr != text.data() + j)
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(text.substr(i, j - i)) +
                         "' is not an integer");
      tokens.push_back(v);
      token_line.push_back(line);
      i = j;
    }
  }
  if (tokens.size() < 2) throw ParseError("edge list needs a header 'n m'");
  const long long n = tokens[0], m = tokens[1];
  if (n < 0 || m < 0) throw ParseError("edge list header has a negative count");
  if (n > 100000) throw ParseError("edge list order is too large");
  if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
    throw ParseError("edge list declares " + std::to_string(m) + " edges but holds " +
                     std::to_string((tokens.size() - 2) / 2) + (tokens.size() % 2 ? " and a half" : ""));
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    const long long u = tokens[2 + 2 * e], v = tokens[3 + 2 * e];
    const std::string where = "line " + std::to_string(token_line[2 + 2 * e]) + ": ";
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(where + "vertex index out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(where + "self-loop at " + std::to_string(u));
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second)
      throw ParseError(where + "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    edges.push_back(key);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<Graph> read_graphs(std::string_view text, const std::string& format) {
  std::vector<Graph> out;
  if (format == "edgelist") {
    out.push_back(parse_edge_list(text));
  } else if (format == "graph6") {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view line = trim(text.substr(start, end - start));
      if (!line.empty()) out.push_back(parse_graph6(line));
      start = end + 1;
    }
    if (out.empty()) throw ParseError("no graph6 records in input");
  } else {
    throw Error("unknown format '" + format + "' (expected graph6 or edgelist)");
  }
  return out;
}

}  // namespace coedge

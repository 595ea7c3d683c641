#include "gks/hypercube.hpp"

#include <algorithm>

#include "gks/errors.hpp"

namespace gks {

HypercubeSubgraph::HypercubeSubgraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw InputError("dimension must be in 1.." + std::to_string(kMaxDimension));
  }
  const Vertex limit = Vertex{1} << n;
  for (Edge& e : edges) {
    if (e.direction < 0 || e.direction >= n || e.lower >= limit) {
      throw InputError("edge outside the " + std::to_string(n) + "-cube");
    }
    e = make_edge(e.lower, e.direction);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool HypercubeSubgraph::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int HypercubeSubgraph::degree(Vertex v) const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += has_edge(v, i) ? 1 : 0;
  return d;
}

HypercubeSubgraph HypercubeSubgraph::without(Edge e) const {
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  for (const Edge& f : edges_) {
    if (f != e) rest.push_back(f);
  }
  return HypercubeSubgraph(n_, std::move(rest));
}

HypercubeSubgraph HypercubeSubgraph::with(Edge e) const {
  std::vector<Edge> more(edges_);
  more.push_back(e);
  return HypercubeSubgraph(n_, std::move(more));
}

bool HypercubeSubgraph::is_subgraph_of(const HypercubeSubgraph& other) const {
  return n_ == other.n_ && std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

int max_degree(const HypercubeSubgraph& g) {
  std::vector<int> deg(std::size_t{1} << g.n(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.lower];
    ++deg[e.lower | (Vertex{1} << e.direction)];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

HypercubeSubgraph full_cube(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
    for (int i = 0; i < n; ++i) {
      if (!(v >> i & 1)) edges.push_back({v, i});
    }
  }
  return HypercubeSubgraph(n, std::move(edges));
}

std::string star_token(Edge e, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (i == e.direction) {
      s[static_cast<std::size_t>(i)] = '*';
    } else if (e.lower >> i & 1) {
      s[static_cast<std::size_t>(i)] = '1';
    }
  }
  return s;
}

Edge parse_star_token(std::string_view token) {
  if (token.empty()) throw ParseError("empty edge token");
  if (token.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw ParseError("edge token longer than " + std::to_string(kMaxDimension));
  }
  Edge e{0, -1};
  for (std::size_t i = 0; i < token.size(); ++i) {
    const char c = token[i];
    if (c == '*') {
      if (e.direction >= 0) throw ParseError("edge '" + std::string(token) + "' has more than one '*'");
      e.direction = static_cast<int>(i);
    } else if (c == '1') {
      e.lower |= Vertex{1} << i;
    } else if (c != '0') {
      throw ParseError("edge '" + std::string(token) + "' must be over {0,1,*}");
    }
  }
  if (e.direction < 0) throw ParseError("edge '" + std::string(token) + "' has no '*'");
  return e;
}

HypercubeSubgraph parse_star_edges(std::string_view text) {
  std::vector<Edge> edges;
  int n = 0;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (start == i) break;
    std::string_view token = text.substr(start, i - start);
    const int len = static_cast<int>(token.size());
    if (n == 0) {
      n = len;
    } else if (len != n) {
      throw ParseError("edge '" + std::string(token) + "' has length " + std::to_string(len) +
                       ", expected " + std::to_string(n));
    }
    edges.push_back(parse_star_token(token));
  }
  if (edges.empty()) throw ParseError("no edges given");
  return HypercubeSubgraph(n, std::move(edges));
}

std::string format_star_edges(const HypercubeSubgraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += star_token(e, g.n());
  }
  return out;
}

}  // namespace gks

#pragma once

// Subgraphs of the n-cube.
//
// Vertex bit i is coordinate i, and coordinate i is character i of the
// star notation, so "10*" is the edge {001, 101} read as bit strings
// printed coordinate 0 first. Game positions map to coordinates one to one.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gks {

using Vertex = std::uint32_t;

inline constexpr int kMaxDimension = 16;

/// An edge keyed by its endpoint with a 0 in the edge direction.
struct Edge {
  Vertex lower = 0;
  int direction = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The edge {v, v ^ e_direction}, whichever endpoint is given.
constexpr Edge make_edge(Vertex v, int direction) {
  return Edge{v & ~(Vertex{1} << direction), direction};
}

class HypercubeSubgraph {
 public:
  HypercubeSubgraph() = default;
  /// Normalizes each edge to its lower endpoint and drops duplicates.
  /// Throws InputError for n outside 1..kMaxDimension or out-of-range edges.
  HypercubeSubgraph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  /// Sorted by (lower, direction).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  bool contains(Edge e) const;
  bool has_edge(Vertex v, int direction) const { return contains(make_edge(v, direction)); }
  int degree(Vertex v) const;

  HypercubeSubgraph without(Edge e) const;
  HypercubeSubgraph with(Edge e) const;
  /// Every edge of *this is an edge of `other` (same n).
  bool is_subgraph_of(const HypercubeSubgraph& other) const;

  friend bool operator==(const HypercubeSubgraph&, const HypercubeSubgraph&) = default;
  friend auto operator<=>(const HypercubeSubgraph&, const HypercubeSubgraph&) = default;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
};

int max_degree(const HypercubeSubgraph& g);

/// The full n-cube.
HypercubeSubgraph full_cube(int n);

std::string star_token(Edge e, int n);
Edge parse_star_token(std::string_view token);

/// Tokens separated by commas and/or whitespace, e.g. "*0, 0*".
/// Throws ParseError on a token without exactly one '*', on characters
/// outside {0,1,*} and on ragged lengths.
HypercubeSubgraph parse_star_edges(std::string_view text);
/// Comma-separated tokens in edge order.
std::string format_star_edges(const HypercubeSubgraph& g);

}  // namespace gks

#pragma once

// Aut(Q_n): a coordinate permutation followed by a complement mask.

#include <vector>

#include "gks/hypercube.hpp"

namespace gks {

inline constexpr int kMaxAutomorphismDimension = 5;

struct CubeAutomorphism {
  /// Coordinate i moves to coordinate permutation[i].
  std::vector<int> permutation;
  Vertex complement = 0;

  Vertex apply(Vertex v) const;
  Edge apply(Edge e) const;
};

/// All 2^n * n! automorphisms with precomputed vertex tables, n <= 5.
class AutomorphismGroup {
 public:
  /// Shared instance; throws InputError for n outside 1..5.
  static const AutomorphismGroup& of(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return directions_.size(); }
  CubeAutomorphism element(std::size_t index) const;
  HypercubeSubgraph apply(std::size_t index, const HypercubeSubgraph& g) const;
  /// Image edges of g under element `index`, sorted.
  void image_edges(std::size_t index, const std::vector<Edge>& edges, std::vector<Edge>& out) const;

  explicit AutomorphismGroup(int n);

 private:
  int n_;
  std::vector<std::vector<int>> directions_;  // per element: permutation
  std::vector<Vertex> complements_;
  std::vector<std::vector<Vertex>> vertex_maps_;
};

HypercubeSubgraph apply(const CubeAutomorphism& a, const HypercubeSubgraph& g);

/// Lexicographically least image (sorted edge lists compared
/// lexicographically) over the whole group. Requires n <= 5.
HypercubeSubgraph canonical_form(const HypercubeSubgraph& g);

/// Distinct images of g, sorted. Requires n <= 5.
std::vector<HypercubeSubgraph> orbit(const HypercubeSubgraph& g);

}  // namespace gks

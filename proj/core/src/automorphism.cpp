#include "gks/automorphism.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>

#include "gks/errors.hpp"

namespace gks {

Vertex CubeAutomorphism::apply(Vertex v) const {
  Vertex w = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (v >> i & 1u) w |= Vertex{1} << permutation[i];
  }
  return w ^ complement;
}

Edge CubeAutomorphism::apply(Edge e) const {
  return make_edge(apply(e.lower), permutation[static_cast<std::size_t>(e.direction)]);
}

HypercubeSubgraph apply(const CubeAutomorphism& a, const HypercubeSubgraph& g) {
  if (a.permutation.size() != static_cast<std::size_t>(g.n())) {
    throw InputError("automorphism and subgraph dimensions differ");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back(a.apply(e));
  return HypercubeSubgraph(g.n(), std::move(edges));
}

AutomorphismGroup::AutomorphismGroup(int n) : n_(n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (Vertex c = 0; c < (Vertex{1} << n); ++c) {
      CubeAutomorphism a{perm, c};
      std::vector<Vertex> table(std::size_t{1} << n);
      for (Vertex v = 0; v < table.size(); ++v) table[v] = a.apply(v);
      directions_.push_back(perm);
      complements_.push_back(c);
      vertex_maps_.push_back(std::move(table));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

const AutomorphismGroup& AutomorphismGroup::of(int n) {
  if (n < 1 || n > kMaxAutomorphismDimension) {
    throw InputError("automorphism tables limited to n <= " + std::to_string(kMaxAutomorphismDimension));
  }
  static const auto groups = [] {
    std::array<std::unique_ptr<AutomorphismGroup>, kMaxAutomorphismDimension + 1> g;
    for (int d = 1; d <= kMaxAutomorphismDimension; ++d) g[static_cast<std::size_t>(d)] = std::make_unique<AutomorphismGroup>(d);
    return g;
  }();
  return *groups[static_cast<std::size_t>(n)];
}

CubeAutomorphism AutomorphismGroup::element(std::size_t index) const {
  return CubeAutomorphism{directions_.at(index), complements_.at(index)};
}

void AutomorphismGroup::image_edges(std::size_t index, const std::vector<Edge>& edges,
                                    std::vector<Edge>& out) const {
  const auto& vmap = vertex_maps_[index];
  const auto& dmap = directions_[index];
  out.clear();
  for (const Edge& e : edges) {
    out.push_back(make_edge(vmap[e.lower], dmap[static_cast<std::size_t>(e.direction)]));
  }
  std::sort(out.begin(), out.end());
}

HypercubeSubgraph AutomorphismGroup::apply(std::size_t index, const HypercubeSubgraph& g) const {
  std::vector<Edge> out;
  image_edges(index, g.edges(), out);
  return HypercubeSubgraph(g.n(), std::move(out));
}

HypercubeSubgraph canonical_form(const HypercubeSubgraph& g) {
  const auto& group = AutomorphismGroup::of(g.n());
  std::vector<Edge> best = g.edges();
  std::vector<Edge> image;
  for (std::size_t i = 0; i < group.size(); ++i) {
    group.image_edges(i, g.edges(), image);
    if (image < best) best = image;
  }
  return HypercubeSubgraph(g.n(), std::move(best));
}

std::vector<HypercubeSubgraph> orbit(const HypercubeSubgraph& g) {
  const auto& group = AutomorphismGroup::of(g.n());
  std::vector<HypercubeSubgraph> out;
  out.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) out.push_back(group.apply(i, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gks

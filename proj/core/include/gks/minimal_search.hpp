#pragma once

#include <cstdint>
#include <vector>

#include "gks/hypercube.hpp"

namespace gks {

inline constexpr int kMaxMinimalSearchDimension = 5;

struct MinimalSearchStats {
  std::uint64_t branches = 0;  // candidate unions explored
  std::uint64_t leaves = 0;    // complete unions reaching the minimality check
  std::uint64_t minimal = 0;   // leaves that passed it
};

/// Edge-minimal winning subgraphs of Q_n with maximum degree <= k, one
/// canonical representative per automorphism class, sorted.
///
/// A minimal winning G is the union, over coordinates i, of a minimal
/// winning subgraph of one facet x_i = b_i, so candidates are built from the
/// (n-1)-dimensional classes. Every returned graph has passed
/// minimality_check. Throws InputError for n outside 1..5.
std::vector<HypercubeSubgraph> minimal_winning_subgraphs(int n, int k, MinimalSearchStats* stats = nullptr);

}  // namespace gks

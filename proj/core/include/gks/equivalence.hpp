#pragma once

// A (k,n) strategy and a winning subgraph of Q_n with maximum degree <= k
// carry the same information: Merlin is the Divider, Alice the Chooser, and
// the two possible final arrays are the endpoints of an edge.

#include "gks/game.hpp"
#include "gks/hypercube.hpp"

namespace gks {

inline constexpr int kMaxRunEnumerationDimension = 8;

/// Alice answers with the side that keeps the Chooser winning (0 on ties);
/// Bob names the directions of G's edges at the outcome. Declared
/// (max_degree(g), n), no Alice-mode. Throws InputError when g is losing
/// or n > kMaxSolverDimension.
StrategyPtr strategy_from_subgraph(const HypercubeSubgraph& g);

/// Edges {outcome with b = 0, outcome with b = 1} over every full request
/// order. Throws InputError when n > kMaxRunEnumerationDimension.
HypercubeSubgraph subgraph_from_strategy(const Strategy& strategy);

}  // namespace gks

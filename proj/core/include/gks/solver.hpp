#pragma once

// The Divider-Chooser game on a subgraph G of the n-cube. The Divider names
// a free coordinate, the Chooser fixes it to 0 or 1; after n-1 rounds the
// Chooser wins iff the two remaining vertices form an edge of G.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gks/game.hpp"
#include "gks/hypercube.hpp"

namespace gks {

inline constexpr int kMaxSolverDimension = 10;

/// Per-coordinate value in {0, 1, free}.
class GameState {
 public:
  static GameState initial(int n);

  int n() const noexcept { return n_; }
  std::uint32_t free_mask() const noexcept { return free_; }
  /// Fixed coordinate values; 0 on free coordinates.
  Vertex values() const noexcept { return values_; }
  bool is_free(int coordinate) const { return free_ >> coordinate & 1u; }
  int free_count() const;

  GameState fix(int coordinate, Bit side) const;
  /// "0*1": coordinate 0 first, '*' for free.
  std::string to_string() const;

 private:
  GameState(int n, std::uint32_t free, Vertex values) : n_(n), free_(free), values_(values) {}

  int n_;
  std::uint32_t free_;
  Vertex values_;
};

/// Memoized over the 3^n states. Not safe for concurrent use.
class ChooserSolver {
 public:
  /// Throws InputError when g.n() > kMaxSolverDimension.
  explicit ChooserSolver(const HypercubeSubgraph& g);

  int n() const noexcept { return n_; }
  bool wins(const GameState& state) const;
  bool is_winning() const { return wins(GameState::initial(n_)); }
  /// The side that keeps the Chooser winning after `coordinate` is named,
  /// preferring 0. Empty when neither does.
  std::optional<Bit> winning_side(const GameState& state, int coordinate) const;

 private:
  bool solve(std::uint32_t free, Vertex values, std::size_t index) const;

  int n_;
  std::vector<std::uint8_t> edge_;  // lower * n + direction
  std::vector<std::size_t> pow3_;
  mutable std::vector<std::int8_t> memo_;
};

bool is_winning(const HypercubeSubgraph& g);

/// is_winning(g) and every single-edge deletion loses.
bool minimality_check(const HypercubeSubgraph& g);

}  // namespace gks

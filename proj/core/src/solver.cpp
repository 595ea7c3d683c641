#include "gks/solver.hpp"

#include <bit>

#include "gks/errors.hpp"

namespace gks {

GameState GameState::initial(int n) {
  if (n < 1 || n > kMaxDimension) throw InputError("dimension must be in 1.." + std::to_string(kMaxDimension));
  return GameState(n, (std::uint32_t{1} << n) - 1, 0);
}

int GameState::free_count() const { return std::popcount(free_); }

GameState GameState::fix(int coordinate, Bit side) const {
  if (coordinate < 0 || coordinate >= n_ || !is_free(coordinate)) {
    throw InputError("coordinate " + std::to_string(coordinate + 1) + " is not free");
  }
  return GameState(n_, free_ & ~(std::uint32_t{1} << coordinate),
                   values_ | (static_cast<Vertex>(side & 1u) << coordinate));
}

std::string GameState::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) s += is_free(i) ? '*' : static_cast<char>('0' + (values_ >> i & 1u));
  return s;
}

ChooserSolver::ChooserSolver(const HypercubeSubgraph& g) : n_(g.n()) {
  if (n_ > kMaxSolverDimension) {
    throw InputError("solver limited to n <= " + std::to_string(kMaxSolverDimension));
  }
  edge_.assign((std::size_t{1} << n_) * static_cast<std::size_t>(n_), 0);
  for (const Edge& e : g.edges()) edge_[e.lower * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.direction)] = 1;
  pow3_.resize(static_cast<std::size_t>(n_) + 1);
  pow3_[0] = 1;
  for (int i = 1; i <= n_; ++i) pow3_[static_cast<std::size_t>(i)] = pow3_[static_cast<std::size_t>(i - 1)] * 3;
  memo_.assign(pow3_[static_cast<std::size_t>(n_)], -1);
}

// Ternary index: digit i is the value of coordinate i, 2 when free.
bool ChooserSolver::solve(std::uint32_t free, Vertex values, std::size_t index) const {
  if (std::has_single_bit(free)) {
    const int d = std::countr_zero(free);
    return edge_[values * static_cast<std::size_t>(n_) + static_cast<std::size_t>(d)] != 0;
  }
  auto& slot = memo_[index];
  if (slot >= 0) return slot != 0;
  bool result = true;
  for (std::uint32_t rest = free; rest != 0 && result; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const std::uint32_t child_free = free & ~(std::uint32_t{1} << i);
    const std::size_t base = index - 2 * pow3_[static_cast<std::size_t>(i)];
    result = solve(child_free, values, base) ||
             solve(child_free, values | (Vertex{1} << i), base + pow3_[static_cast<std::size_t>(i)]);
  }
  slot = result ? 1 : 0;
  return result;
}

bool ChooserSolver::wins(const GameState& state) const {
  if (state.n() != n_) throw InputError("state dimension differs from the subgraph");
  if (state.free_mask() == 0) throw InputError("state has no free coordinate");
  std::size_t index = 0;
  for (int i = 0; i < n_; ++i) {
    index += (state.is_free(i) ? 2u : (state.values() >> i & 1u)) * pow3_[static_cast<std::size_t>(i)];
  }
  return solve(state.free_mask(), state.values(), index);
}

std::optional<Bit> ChooserSolver::winning_side(const GameState& state, int coordinate) const {
  for (Bit b = 0; b <= 1; ++b) {
    if (wins(state.fix(coordinate, b))) return b;
  }
  return std::nullopt;
}

bool is_winning(const HypercubeSubgraph& g) { return ChooserSolver(g).is_winning(); }

bool minimality_check(const HypercubeSubgraph& g) {
  if (!is_winning(g)) return false;
  for (const Edge& e : g.edges()) {
    if (is_winning(g.without(e))) return false;
  }
  return true;
}

}  // namespace gks

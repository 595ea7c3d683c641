#include "gks/equivalence.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gks/errors.hpp"
#include "gks/solver.hpp"

namespace gks {

namespace {

class SubgraphStrategy final : public Strategy {
 public:
  SubgraphStrategy(const HypercubeSubgraph& g, std::string description)
      : Strategy({g.n(), max_degree(g), std::nullopt}, std::move(description)), graph_(g), solver_(g) {}

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    if (mode == PlayMode::alice) throw UnsupportedOperation(description() + " has no Alice-mode");
    std::lock_guard lock(mutex_);  // the solver memo is shared
    auto state = GameState::initial(n());
    for (Position r : requests) {
      // Losing states are unreachable from a winning start; answer 0 there.
      const Bit b = solver_.winning_side(state, r).value_or(0);
      values[static_cast<std::size_t>(r)] = b;
      state = state.fix(r, b);
    }
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    Vertex v = 0;
    for (std::size_t i = 0; i < outcome.size(); ++i) v |= static_cast<Vertex>(outcome[i] & 1u) << i;
    for (int i = 0; i < n(); ++i) {
      if (graph_.has_edge(v, i)) out.push_back(i + offset);
    }
  }

 private:
  HypercubeSubgraph graph_;
  ChooserSolver solver_;
  mutable std::mutex mutex_;
};

}  // namespace

StrategyPtr strategy_from_subgraph(const HypercubeSubgraph& g) {
  if (!is_winning(g)) throw InputError("subgraph is losing for the Chooser; no strategy");
  return std::make_shared<SubgraphStrategy>(g, "subgraph(" + format_star_edges(g) + ")");
}

HypercubeSubgraph subgraph_from_strategy(const Strategy& strategy) {
  const int n = strategy.n();
  if (n > kMaxRunEnumerationDimension) {
    throw InputError("run enumeration limited to n <= " + std::to_string(kMaxRunEnumerationDimension));
  }
  std::vector<Position> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Bit> values(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  do {
    std::fill(values.begin(), values.end(), Bit{0});
    strategy.assign(std::span<const Position>(order).first(order.size() - 1), PlayMode::normal, values);
    Vertex v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<Vertex>(values[static_cast<std::size_t>(i)] & 1u) << i;
    edges.push_back(make_edge(v, order.back()));
  } while (std::next_permutation(order.begin(), order.end()));
  return HypercubeSubgraph(n, std::move(edges));
}

}  // namespace gks

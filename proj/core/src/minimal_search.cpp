#include "gks/minimal_search.hpp"

#include <array>
#include <set>

#include "gks/automorphism.hpp"
#include "gks/errors.hpp"
#include "gks/solver.hpp"

namespace gks {

namespace {

// Edge sets of Q_n, n <= 5, indexed lower * n + direction.
struct EdgeBits {
  std::array<std::uint64_t, 3> w{};

  bool test(int i) const { return w[static_cast<std::size_t>(i >> 6)] >> (i & 63) & 1u; }
  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
};

Edge embed(Edge e, int coordinate, int side) {
  auto lift = [&](Vertex u) {
    const Vertex low = u & ((Vertex{1} << coordinate) - 1);
    const Vertex high = (u >> coordinate) << (coordinate + 1);
    return high | low | (static_cast<Vertex>(side) << coordinate);
  };
  return Edge{lift(e.lower), e.direction < coordinate ? e.direction : e.direction + 1};
}

struct Option {
  std::vector<Edge> edges;
};

class UnionSearch {
 public:
  UnionSearch(int n, int k, std::vector<std::vector<Option>> options, MinimalSearchStats& stats)
      : n_(n), k_(k), options_(std::move(options)), stats_(stats) {}

  std::set<HypercubeSubgraph> run() {
    descend(0);
    return found_;
  }

 private:
  int index(const Edge& e) const { return static_cast<int>(e.lower) * n_ + e.direction; }

  HypercubeSubgraph current() const { return HypercubeSubgraph(n_, edges_); }

  bool facet_won(const HypercubeSubgraph& g, int coordinate) const {
    ChooserSolver solver(g);
    const auto start = GameState::initial(n_);
    return solver.wins(start.fix(coordinate, 0)) || solver.wins(start.fix(coordinate, 1));
  }

  void descend(int coordinate) {
    ++stats_.branches;
    if (coordinate == n_) {
      ++stats_.leaves;
      HypercubeSubgraph g = current();
      if (minimality_check(g)) {
        ++stats_.minimal;
        found_.insert(canonical_form(g));
      }
      return;
    }
    if (coordinate > 0 && facet_won(current(), coordinate)) {
      descend(coordinate + 1);
      return;
    }
    for (const Option& opt : options_[static_cast<std::size_t>(coordinate)]) {
      const std::size_t mark = edges_.size();
      bool fits = true;
      for (const Edge& e : opt.edges) {
        const int i = index(e);
        if (bits_.test(i)) continue;
        const Vertex upper = e.lower | (Vertex{1} << e.direction);
        const int du = ++degree_[e.lower];
        const int dv = ++degree_[upper];
        if (du > k_ || dv > k_) fits = false;
        bits_.set(i);
        edges_.push_back(e);
        if (!fits) break;
      }
      if (fits) descend(coordinate + 1);
      while (edges_.size() > mark) {
        const Edge e = edges_.back();
        edges_.pop_back();
        const int i = index(e);
        bits_.w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
        --degree_[e.lower];
        --degree_[e.lower | (Vertex{1} << e.direction)];
      }
    }
  }

  int n_;
  int k_;
  std::vector<std::vector<Option>> options_;
  MinimalSearchStats& stats_;
  EdgeBits bits_;
  std::array<int, 32> degree_{};
  std::vector<Edge> edges_;
  std::set<HypercubeSubgraph> found_;
};

}  // namespace

std::vector<HypercubeSubgraph> minimal_winning_subgraphs(int n, int k, MinimalSearchStats* stats) {
  if (n < 1 || n > kMaxMinimalSearchDimension) {
    throw InputError("minimal subgraph search limited to n in 1.." +
                     std::to_string(kMaxMinimalSearchDimension));
  }
  MinimalSearchStats local;
  MinimalSearchStats& st = stats ? *stats : local;
  if (k < 1) return {};
  if (n == 1) {
    st.leaves = st.minimal = 1;
    return {HypercubeSubgraph(1, {Edge{0, 0}})};
  }

  const auto classes = minimal_winning_subgraphs(n - 1, k, stats);
  if (classes.empty()) return {};

  std::set<HypercubeSubgraph> labeled;
  for (const auto& c : classes) {
    auto o = orbit(c);
    labeled.insert(o.begin(), o.end());
  }

  auto embedded = [&](const HypercubeSubgraph& w, int coordinate, int side) {
    Option opt;
    for (const Edge& e : w.edges()) opt.edges.push_back(embed(e, coordinate, side));
    return opt;
  };

  // Up to symmetry, coordinate 0 uses side 0 and a class representative.
  std::vector<std::vector<Option>> options(static_cast<std::size_t>(n));
  for (const auto& c : classes) options[0].push_back(embedded(c, 0, 0));
  for (int i = 1; i < n; ++i) {
    for (int side = 0; side <= 1; ++side) {
      for (const auto& w : labeled) options[static_cast<std::size_t>(i)].push_back(embedded(w, i, side));
    }
  }

  auto found = UnionSearch(n, k, std::move(options), st).run();
  return {found.begin(), found.end()};
}

}  // namespace gks

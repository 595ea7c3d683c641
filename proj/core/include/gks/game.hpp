#pragma once

// Semantics of the Alice/Merlin/Bob communication game.
//
// Positions are 0-based everywhere inside the library. Text formats convert
// to 1-based at the boundary. An outcome prints position 1 first.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gks {

using Bit = std::uint8_t;
using Position = int;

/// Sorted, duplicate-free set of 0-based positions.
using PositionSet = std::vector<Position>;

enum class PlayMode : std::uint8_t { normal, alice };

/// The array A after Phase 1.
class Outcome {
 public:
  Outcome() = default;
  explicit Outcome(std::vector<Bit> bits);

  /// Parses "0101"; the first character is position 1.
  static Outcome from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  std::span<const Bit> bits() const noexcept { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome&, const Outcome&) = default;

 private:
  std::vector<Bit> bits_;
};

/// Merlin's request sequence: a permutation of [n] or a prefix of one.
class RequestOrder {
 public:
  /// Throws InputError unless entries are distinct and inside [0, n).
  RequestOrder(std::vector<Position> positions, int n);

  static RequestOrder from_one_based(const std::vector<int>& positions, int n);

  std::span<const Position> positions() const noexcept { return positions_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool is_full() const noexcept { return positions_.size() == static_cast<std::size_t>(n_); }
  std::vector<int> to_one_based() const;

 private:
  std::vector<Position> positions_;
  int n_;
};

struct StrategyParams {
  int n = 0;
  int k = 0;
  /// Answer bound on Alice-mode outcomes; present iff Alice-mode is supported.
  std::optional<int> k_alice;

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;
};

std::string to_string(const StrategyParams& params);

/// One reachable final array. Normal-mode entries list every Merlin position
/// that can produce these bits; Alice-mode entries list none.
struct ReachableOutcome {
  std::vector<Bit> bits;
  PositionSet merlin_positions;
  PlayMode mode = PlayMode::normal;
};

/// Return false to stop the enumeration early.
using OutcomeVisitor = std::function<bool(const ReachableOutcome&)>;

/// An Alice/Bob strategy pair with its declared (k, k_A, n) parameters.
///
/// Implementations are immutable after construction. The virtual hooks are
/// unchecked: callers pass distinct in-range positions, at most n-1 of them
/// in normal mode and exactly n in Alice-mode.
class Strategy {
 public:
  Strategy(StrategyParams params, std::string description);
  virtual ~Strategy() = default;

  Strategy(const Strategy&) = delete;
  Strategy& operator=(const Strategy&) = delete;

  int n() const noexcept { return params_.n; }
  int k() const noexcept { return params_.k; }
  std::optional<int> k_alice() const noexcept { return params_.k_alice; }
  bool supports_alice_mode() const noexcept { return params_.k_alice.has_value(); }
  const StrategyParams& params() const noexcept { return params_; }

  /// Text form of the construction, e.g. "amc(code6)".
  const std::string& description() const noexcept { return description_; }

  /// Writes Alice's answer for every requested position into `values`.
  /// Entries of `values` at unrequested positions are left untouched.
  virtual void assign(std::span<const Position> requests, PlayMode mode,
                      std::span<Bit> values) const = 0;

  /// Bob: appends his candidate set for `outcome`, shifted by `offset`,
  /// in increasing order.
  virtual void answer_into(std::span<const Bit> outcome, Position offset,
                           PositionSet& out) const = 0;

  /// Membership in the Alice-mode outcome set. False when Alice-mode is
  /// unsupported.
  virtual bool in_alice_outcomes(std::span<const Bit> outcome) const;

  virtual bool has_enumerator() const { return false; }

  /// Visits every reachable (outcome, Merlin positions, mode) triple.
  /// Returns the number of triples visited.
  virtual std::uint64_t enumerate(const OutcomeVisitor& visit) const;

  /// S(pi_1 .. pi_i): the bit Alice gives the last requested position.
  Bit alice(std::span<const Position> prefix) const;
  /// Alice's bit for the final position of a full order in Alice-mode.
  Bit alice_mode_final(std::span<const Position> order) const;
  /// T(outcome).
  PositionSet answer(std::span<const Bit> outcome) const;

 private:
  StrategyParams params_;
  std::string description_;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

/// Alice answers every request but the last; Merlin sets the last one.
Outcome run_game(const Strategy& strategy, const RequestOrder& order, Bit merlin_bit);

/// Alice sets all n entries. Throws UnsupportedOperation without Alice-mode.
Outcome run_game_alice_mode(const Strategy& strategy, const RequestOrder& order);

/// Building blocks for ad-hoc strategies (tests, sabotaged variants).
struct FunctionStrategyParts {
  StrategyParams params;
  std::string description = "function";
  /// Bit for prefix.back(), given the whole prefix.
  std::function<Bit(std::span<const Position>)> alice;
  /// Alice-mode bit for order.back(). Required iff params.k_alice is set.
  std::function<Bit(std::span<const Position>)> alice_final;
  std::function<PositionSet(std::span<const Bit>)> bob;
  std::function<bool(std::span<const Bit>)> in_alice_outcomes;
};

StrategyPtr make_function_strategy(FunctionStrategyParts parts);

/// "{1,4}" style rendering of a 0-based set, printed 1-based.
std::string format_positions(const PositionSet& positions);

}  // namespace gks

#include "gks/game.hpp"

#include <algorithm>
#include <utility>

#include "gks/errors.hpp"

namespace gks {

Outcome::Outcome(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) {
    if (b > 1) throw InputError("outcome entries must be 0 or 1");
  }
}

Outcome Outcome::from_string(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("outcome must be a string over {0,1}: '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return Outcome(std::move(bits));
}

std::string Outcome::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

RequestOrder::RequestOrder(std::vector<Position> positions, int n)
    : positions_(std::move(positions)), n_(n) {
  if (n_ < 1) throw InputError("request order needs n >= 1");
  if (positions_.size() > static_cast<std::size_t>(n_)) {
    throw InputError("request order is longer than n");
  }
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (Position p : positions_) {
    if (p < 0 || p >= n_) {
      throw InputError("request position " + std::to_string(p + 1) + " outside 1.." +
                       std::to_string(n_));
    }
    if (seen[static_cast<std::size_t>(p)]) {
      throw InputError("request position " + std::to_string(p + 1) + " repeated");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
}

RequestOrder RequestOrder::from_one_based(const std::vector<int>& positions, int n) {
  std::vector<Position> zero_based;
  zero_based.reserve(positions.size());
  for (int p : positions) zero_based.push_back(p - 1);
  return RequestOrder(std::move(zero_based), n);
}

std::vector<int> RequestOrder::to_one_based() const {
  std::vector<int> out;
  out.reserve(positions_.size());
  for (Position p : positions_) out.push_back(p + 1);
  return out;
}

std::string to_string(const StrategyParams& params) {
  std::string s = "(" + std::to_string(params.k);
  if (params.k_alice) s += "," + std::to_string(*params.k_alice);
  s += "," + std::to_string(params.n) + ")";
  return s;
}

Strategy::Strategy(StrategyParams params, std::string description)
    : params_(params), description_(std::move(description)) {
  if (params_.n < 1) throw InputError("strategy needs n >= 1");
  if (params_.k < 1) throw InputError("strategy needs k >= 1");
  if (params_.k_alice && *params_.k_alice < 1) throw InputError("strategy needs k_A >= 1");
}

bool Strategy::in_alice_outcomes(std::span<const Bit>) const { return false; }

std::uint64_t Strategy::enumerate(const OutcomeVisitor&) const {
  throw UnsupportedOperation(description_ + " has no outcome enumerator");
}

Bit Strategy::alice(std::span<const Position> prefix) const {
  if (prefix.empty() || prefix.size() >= static_cast<std::size_t>(n())) {
    throw InputError("Alice answers prefixes of length 1..n-1");
  }
  std::vector<Bit> values(static_cast<std::size_t>(n()), 0);
  assign(prefix, PlayMode::normal, values);
  return values[static_cast<std::size_t>(prefix.back())];
}

Bit Strategy::alice_mode_final(std::span<const Position> order) const {
  if (!supports_alice_mode()) {
    throw UnsupportedOperation(description_ + " has no Alice-mode");
  }
  std::vector<Bit> values(static_cast<std::size_t>(n()), 0);
  assign(order, PlayMode::alice, values);
  return values[static_cast<std::size_t>(order.back())];
}

PositionSet Strategy::answer(std::span<const Bit> outcome) const {
  if (outcome.size() != static_cast<std::size_t>(n())) {
    throw InputError("outcome length " + std::to_string(outcome.size()) +
                     " does not match n = " + std::to_string(n()));
  }
  PositionSet out;
  answer_into(outcome, 0, out);
  return out;
}

Outcome run_game(const Strategy& strategy, const RequestOrder& order, Bit merlin_bit) {
  if (order.n() != strategy.n() || !order.is_full()) {
    throw InputError("run_game needs a full permutation of 1.." + std::to_string(strategy.n()));
  }
  if (merlin_bit > 1) throw InputError("Merlin's bit must be 0 or 1");
  auto positions = order.positions();
  std::vector<Bit> values(positions.size(), 0);
  strategy.assign(positions.first(positions.size() - 1), PlayMode::normal, values);
  values[static_cast<std::size_t>(positions.back())] = merlin_bit;
  return Outcome(std::move(values));
}

Outcome run_game_alice_mode(const Strategy& strategy, const RequestOrder& order) {
  if (!strategy.supports_alice_mode()) {
    throw UnsupportedOperation(strategy.description() + " has no Alice-mode");
  }
  if (order.n() != strategy.n() || !order.is_full()) {
    throw InputError("run_game_alice_mode needs a full permutation of 1.." +
                     std::to_string(strategy.n()));
  }
  std::vector<Bit> values(order.size(), 0);
  strategy.assign(order.positions(), PlayMode::alice, values);
  return Outcome(std::move(values));
}

namespace {

class FunctionStrategy final : public Strategy {
 public:
  explicit FunctionStrategy(FunctionStrategyParts parts)
      : Strategy(parts.params, parts.description), parts_(std::move(parts)) {
    if (!parts_.alice || !parts_.bob) {
      throw InputError("function strategy needs alice and bob functions");
    }
    if (parts_.params.k_alice && (!parts_.alice_final || !parts_.in_alice_outcomes)) {
      throw InputError("Alice-mode needs alice_final and in_alice_outcomes");
    }
  }

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    std::size_t alice_steps = requests.size();
    if (mode == PlayMode::alice) --alice_steps;
    for (std::size_t i = 0; i < alice_steps; ++i) {
      values[static_cast<std::size_t>(requests[i])] = parts_.alice(requests.first(i + 1));
    }
    if (mode == PlayMode::alice) {
      values[static_cast<std::size_t>(requests.back())] = parts_.alice_final(requests);
    }
  }

  void answer_into(std::span<const Bit> outcome, Position offset,
                   PositionSet& out) const override {
    PositionSet local = parts_.bob(outcome);
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    for (Position p : local) out.push_back(p + offset);
  }

  bool in_alice_outcomes(std::span<const Bit> outcome) const override {
    return parts_.in_alice_outcomes && parts_.in_alice_outcomes(outcome);
  }

 private:
  FunctionStrategyParts parts_;
};

}  // namespace

StrategyPtr make_function_strategy(FunctionStrategyParts parts) {
  return std::make_shared<FunctionStrategy>(std::move(parts));
}

std::string format_positions(const PositionSet& positions) {
  std::string s = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(positions[i] + 1);
  }
  return s + "}";
}

}  // namespace gks

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gks/game.hpp"

namespace gks {

enum class VerificationMode : std::uint8_t { exhaustive, structured, sampled };

/// The validity clause a run violated.
enum class Clause : std::uint8_t {
  merlin_not_covered,         // Merlin's position missing from Bob's answer
  answer_exceeds_k,           // |T(A)| > k
  alice_outcome_outside_set,  // an Alice-mode run left the declared O_A
  answer_exceeds_k_alice,     // an O_A outcome got more than k_A candidates
};

std::string_view to_string(VerificationMode mode);
std::string_view to_string(Clause clause);
VerificationMode parse_verification_mode(std::string_view text);

struct VerificationFailure {
  /// Full request order, when the failing run came from one.
  std::optional<std::vector<Position>> order;
  /// The Merlin position that went uncovered (normal mode only).
  std::optional<Position> merlin_position;
  std::optional<Bit> merlin_bit;
  PlayMode mode = PlayMode::normal;
  Outcome outcome;
  PositionSet answer;
  Clause clause = Clause::merlin_not_covered;
};

struct VerificationReport {
  bool valid = true;
  VerificationMode mode = VerificationMode::exhaustive;
  std::uint64_t runs_checked = 0;
  std::optional<VerificationFailure> first_failure;
};

/// Line-oriented "key: value" rendering.
std::string to_text(const VerificationReport& report);
/// JSON document with fields mode, valid, runs_checked, failure.
std::string to_json(const VerificationReport& report);

inline constexpr int kMaxExhaustiveN = 10;

struct ExhaustiveOptions {
  /// Worker threads; permutations are sharded by their first entry.
  unsigned workers = 1;
};

/// Checks every permutation and Merlin bit, plus every Alice-mode run when
/// k_A is declared. The first failure is the lexicographically least
/// (order, run) pair, with runs ordered b=0, b=1, Alice-mode.
/// Throws InputError when n > kMaxExhaustiveN.
VerificationReport verify_exhaustive(const Strategy& strategy, ExhaustiveOptions options = {});

/// Same clauses, checked over the strategy's outcome enumerator.
/// Throws UnsupportedOperation when the strategy has none.
VerificationReport verify_structured(const Strategy& strategy);

struct SamplingOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

/// Uniform random permutations, both Merlin bits each (and an Alice-mode
/// run when supported). A clean report is evidence, not proof.
VerificationReport verify_sampled(const Strategy& strategy, SamplingOptions options = {});

}  // namespace gks

#include "gks/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gks/errors.hpp"
#include "random.hpp"

namespace gks {

std::string_view to_string(VerificationMode mode) {
  switch (mode) {
    case VerificationMode::exhaustive: return "exhaustive";
    case VerificationMode::structured: return "structured";
    case VerificationMode::sampled: return "sampled";
  }
  return "?";
}

std::string_view to_string(Clause clause) {
  switch (clause) {
    case Clause::merlin_not_covered: return "merlin-not-covered";
    case Clause::answer_exceeds_k: return "answer-exceeds-k";
    case Clause::alice_outcome_outside_set: return "alice-outcome-outside-set";
    case Clause::answer_exceeds_k_alice: return "answer-exceeds-k-alice";
  }
  return "?";
}

VerificationMode parse_verification_mode(std::string_view text) {
  if (text == "exhaustive") return VerificationMode::exhaustive;
  if (text == "structured") return VerificationMode::structured;
  if (text == "sampled") return VerificationMode::sampled;
  throw InputError("unknown verification mode '" + std::string(text) +
                   "' (expected exhaustive, structured or sampled)");
}

namespace {

struct Violation {
  Clause clause;
  std::optional<Position> merlin_position;
};

// Clauses (a)-(c) for one run. `merlin` is empty for Alice-mode runs.
std::optional<Violation> check_run(const Strategy& s, PlayMode mode,
                                   std::span<const Position> merlin,
                                   const PositionSet& answer, bool in_alice_set) {
  for (Position p : merlin) {
    if (!std::binary_search(answer.begin(), answer.end(), p)) {
      return Violation{Clause::merlin_not_covered, p};
    }
  }
  if (answer.size() > static_cast<std::size_t>(s.k())) {
    return Violation{Clause::answer_exceeds_k, std::nullopt};
  }
  if (s.supports_alice_mode()) {
    if (mode == PlayMode::alice && !in_alice_set) {
      return Violation{Clause::alice_outcome_outside_set, std::nullopt};
    }
    if (in_alice_set && answer.size() > static_cast<std::size_t>(*s.k_alice())) {
      return Violation{Clause::answer_exceeds_k_alice, std::nullopt};
    }
  }
  return std::nullopt;
}

// Memoizes Bob and O_A membership per packed outcome (n <= kMaxExhaustiveN).
class AnswerCache {
 public:
  explicit AnswerCache(const Strategy& s)
      : strategy_(s), entries_(std::size_t{1} << s.n()) {}

  struct Entry {
    bool ready = false;
    bool in_alice_set = false;
    PositionSet answer;
  };

  const Entry& lookup(std::span<const Bit> bits) {
    std::size_t key = 0;
    for (Bit b : bits) key = (key << 1) | b;
    Entry& e = entries_[key];
    if (!e.ready) {
      strategy_.answer_into(bits, 0, e.answer);
      e.in_alice_set = strategy_.supports_alice_mode() && strategy_.in_alice_outcomes(bits);
      e.ready = true;
    }
    return e;
  }

 private:
  const Strategy& strategy_;
  std::vector<Entry> entries_;
};

struct ShardResult {
  std::uint64_t runs = 0;
  std::optional<VerificationFailure> failure;
};

VerificationFailure make_failure(std::span<const Position> order, PlayMode mode,
                                 std::optional<Bit> bit, std::span<const Bit> bits,
                                 const PositionSet& answer, const Violation& v) {
  VerificationFailure f;
  f.order = std::vector<Position>(order.begin(), order.end());
  f.merlin_position = v.merlin_position;
  f.merlin_bit = bit;
  f.mode = mode;
  f.outcome = Outcome(std::vector<Bit>(bits.begin(), bits.end()));
  f.answer = answer;
  f.clause = v.clause;
  return f;
}

// All permutations whose first entry is `first`, in lexicographic order.
ShardResult run_shard(const Strategy& s, Position first) {
  const int n = s.n();
  ShardResult result;
  AnswerCache cache(s);
  std::vector<Position> order(static_cast<std::size_t>(n));
  order[0] = first;
  {
    std::size_t at = 1;
    for (Position p = 0; p < n; ++p) {
      if (p != first) order[at++] = p;
    }
  }
  std::vector<Bit> values(static_cast<std::size_t>(n), 0);
  std::span<const Position> full(order);
  do {
    std::fill(values.begin(), values.end(), Bit{0});
    s.assign(full.first(full.size() - 1), PlayMode::normal, values);
    const Position last = order.back();
    for (Bit b = 0; b <= 1; ++b) {
      values[static_cast<std::size_t>(last)] = b;
      const auto& e = cache.lookup(values);
      ++result.runs;
      Position merlin[1] = {last};
      if (auto v = check_run(s, PlayMode::normal, merlin, e.answer, e.in_alice_set)) {
        result.failure = make_failure(order, PlayMode::normal, b, values, e.answer, *v);
        return result;
      }
    }
    if (s.supports_alice_mode()) {
      std::fill(values.begin(), values.end(), Bit{0});
      s.assign(full, PlayMode::alice, values);
      const auto& e = cache.lookup(values);
      ++result.runs;
      if (auto v = check_run(s, PlayMode::alice, {}, e.answer, e.in_alice_set)) {
        result.failure = make_failure(order, PlayMode::alice, std::nullopt, values, e.answer, *v);
        return result;
      }
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return result;
}

}  // namespace

VerificationReport verify_exhaustive(const Strategy& strategy, ExhaustiveOptions options) {
  const int n = strategy.n();
  if (n > kMaxExhaustiveN) {
    throw InputError("exhaustive verification is limited to n <= " +
                     std::to_string(kMaxExhaustiveN) + " (n = " + std::to_string(n) +
                     " needs n!*2 runs); use structured or sampled verification");
  }
  std::vector<ShardResult> shards(static_cast<std::size_t>(n));
  const unsigned workers = std::clamp(options.workers, 1u, static_cast<unsigned>(n));
  if (workers == 1) {
    for (Position first = 0; first < n; ++first) {
      shards[static_cast<std::size_t>(first)] = run_shard(strategy, first);
      if (shards[static_cast<std::size_t>(first)].failure) break;
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (Position first = static_cast<Position>(w); first < n;
             first += static_cast<Position>(workers)) {
          shards[static_cast<std::size_t>(first)] = run_shard(strategy, first);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.mode = VerificationMode::exhaustive;
  for (auto& shard : shards) {
    report.runs_checked += shard.runs;
    if (shard.failure) {
      report.valid = false;
      report.first_failure = std::move(shard.failure);
      break;
    }
  }
  return report;
}

VerificationReport verify_structured(const Strategy& strategy) {
  if (!strategy.has_enumerator()) {
    throw UnsupportedOperation(strategy.description() +
                               " has no outcome enumerator; use exhaustive or sampled verification");
  }
  VerificationReport report;
  report.mode = VerificationMode::structured;
  PositionSet answer;
  report.runs_checked = strategy.enumerate([&](const ReachableOutcome& r) {
    answer.clear();
    strategy.answer_into(r.bits, 0, answer);
    const bool in_set = strategy.supports_alice_mode() && strategy.in_alice_outcomes(r.bits);
    auto v = check_run(strategy, r.mode, r.merlin_positions, answer, in_set);
    if (!v) return true;
    VerificationFailure f;
    f.merlin_position = v->merlin_position;
    if (!f.merlin_position && r.mode == PlayMode::normal && r.merlin_positions.size() == 1) {
      f.merlin_position = r.merlin_positions.front();
    }
    if (f.merlin_position) f.merlin_bit = r.bits[static_cast<std::size_t>(*f.merlin_position)];
    f.mode = r.mode;
    f.outcome = Outcome(r.bits);
    f.answer = answer;
    f.clause = v->clause;
    report.valid = false;
    report.first_failure = std::move(f);
    return false;
  });
  return report;
}

VerificationReport verify_sampled(const Strategy& strategy, SamplingOptions options) {
  if (options.samples < 1) throw InputError("sampled verification needs samples >= 1");
  const int n = strategy.n();
  VerificationReport report;
  report.mode = VerificationMode::sampled;

  std::mt19937_64 rng(options.seed);
  std::vector<Position> order(static_cast<std::size_t>(n));
  std::vector<Bit> values(static_cast<std::size_t>(n), 0);
  PositionSet answer;
  std::span<const Position> full(order);

  auto run_once = [&](PlayMode mode, std::optional<Bit> bit) {
    answer.clear();
    strategy.answer_into(values, 0, answer);
    const bool in_set = strategy.supports_alice_mode() && strategy.in_alice_outcomes(values);
    ++report.runs_checked;
    std::span<const Position> merlin;
    if (mode == PlayMode::normal) merlin = full.last(1);
    if (auto v = check_run(strategy, mode, merlin, answer, in_set)) {
      report.valid = false;
      report.first_failure = make_failure(order, mode, bit, values, answer, *v);
      return false;
    }
    return true;
  };

  for (std::uint64_t s = 0; s < options.samples; ++s) {
    std::iota(order.begin(), order.end(), 0);
    detail::shuffle(order, rng);
    std::fill(values.begin(), values.end(), Bit{0});
    strategy.assign(full.first(full.size() - 1), PlayMode::normal, values);
    for (Bit b = 0; b <= 1; ++b) {
      values[static_cast<std::size_t>(order.back())] = b;
      if (!run_once(PlayMode::normal, b)) return report;
    }
    if (strategy.supports_alice_mode()) {
      std::fill(values.begin(), values.end(), Bit{0});
      strategy.assign(full, PlayMode::alice, values);
      if (!run_once(PlayMode::alice, std::nullopt)) return report;
    }
  }
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "mode: " << to_string(report.mode) << '\n';
  os << "valid: " << (report.valid ? "true" : "false") << '\n';
  os << "runs_checked: " << report.runs_checked << '\n';
  if (!report.first_failure) {
    os << "failure: none\n";
    return os.str();
  }
  const auto& f = *report.first_failure;
  os << "failure.clause: " << to_string(f.clause) << '\n';
  os << "failure.run: " << (f.mode == PlayMode::alice ? "alice-mode" : "normal") << '\n';
  if (f.order) {
    os << "failure.order:";
    for (Position p : *f.order) os << ' ' << (p + 1);
    os << '\n';
  }
  if (f.merlin_position) os << "failure.merlin_position: " << (*f.merlin_position + 1) << '\n';
  if (f.merlin_bit) os << "failure.merlin_bit: " << int(*f.merlin_bit) << '\n';
  os << "failure.outcome: " << f.outcome.to_string() << '\n';
  os << "failure.answer: " << format_positions(f.answer) << '\n';
  return os.str();
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["mode"] = std::string(to_string(report.mode));
  doc["valid"] = report.valid;
  doc["runs_checked"] = report.runs_checked;
  if (!report.first_failure) {
    doc["failure"] = nullptr;
  } else {
    const auto& f = *report.first_failure;
    nlohmann::ordered_json jf;
    jf["clause"] = std::string(to_string(f.clause));
    jf["run"] = f.mode == PlayMode::alice ? "alice-mode" : "normal";
    if (f.order) {
      std::vector<int> one_based;
      for (Position p : *f.order) one_based.push_back(p + 1);
      jf["order"] = one_based;
    } else {
      jf["order"] = nullptr;
    }
    jf["merlin_position"] =
        f.merlin_position ? nlohmann::ordered_json(*f.merlin_position + 1) : nullptr;
    jf["merlin_bit"] = f.merlin_bit ? nlohmann::ordered_json(int(*f.merlin_bit)) : nullptr;
    jf["outcome"] = f.outcome.to_string();
    std::vector<int> answer;
    for (Position p : f.answer) answer.push_back(p + 1);
    jf["answer"] = answer;
    doc["failure"] = jf;
  }
  return doc.dump(2);
}

}  // namespace gks

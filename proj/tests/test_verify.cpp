#include <gtest/gtest.h>

#include <random>

#include "gks/errors.hpp"
#include "gks/strategies.hpp"
#include "gks/verify.hpp"
#include "oracles.hpp"

using namespace gks;

namespace {

// A random table-driven strategy: Alice's bit depends on the whole prefix
// through a hash, Bob answers a random superset of a decoded guess.
StrategyPtr random_strategy(int n, int k, bool alice_mode, std::uint64_t seed) {
  FunctionStrategyParts parts;
  parts.params = {n, k, alice_mode ? std::optional<int>(1 + static_cast<int>(seed % 2)) : std::nullopt};
  auto hash = [seed](std::span<const Position> prefix) {
    std::uint64_t h = seed * 0x9E3779B97F4A7C15ull;
    for (Position p : prefix) h = (h ^ static_cast<std::uint64_t>(p + 1)) * 0x100000001B3ull;
    return h;
  };
  parts.alice = [hash](std::span<const Position> prefix) { return static_cast<Bit>(hash(prefix) >> 17 & 1); };
  parts.alice_final = [hash](std::span<const Position> order) { return static_cast<Bit>(hash(order) >> 29 & 1); };
  parts.bob = [n, seed](std::span<const Bit> a) {
    PositionSet t;
    std::uint64_t h = seed;
    for (Bit b : a) h = h * 31 + b;
    for (int p = 0; p < n; ++p) {
      if ((h >> p & 3u) != 0) t.push_back(p);
    }
    return t;
  };
  parts.in_alice_outcomes = [seed](std::span<const Bit> a) {
    std::uint64_t h = seed;
    for (Bit b : a) h = h * 7 + b;
    return (h & 1u) != 0;
  };
  return make_function_strategy(parts);
}

StrategyPtr sabotaged_trivial(int n, int k, int k_alice, bool flip_final, bool shrink_zero_answer) {
  FunctionStrategyParts parts;
  parts.params = {n, k, k_alice};
  parts.alice = [](std::span<const Position>) { return Bit{0}; };
  parts.alice_final = [flip_final](std::span<const Position>) { return static_cast<Bit>(flip_final ? 0 : 1); };
  parts.bob = [n, shrink_zero_answer](std::span<const Bit> a) {
    PositionSet t;
    for (int p = 0; p < n; ++p) {
      if (a[static_cast<std::size_t>(p)]) return PositionSet{p};
    }
    for (int p = 0; p < (shrink_zero_answer ? n - 1 : n); ++p) t.push_back(p);
    return t;
  };
  parts.in_alice_outcomes = [](std::span<const Bit> a) { return std::count(a.begin(), a.end(), 1) == 1; };
  return make_function_strategy(parts);
}

}  // namespace

TEST(VerifyExhaustive, TrivialIsValidAtFive) {
  auto r = verify_exhaustive(*trivial_strategy(5));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.runs_checked, 120u * 3);
}

TEST(VerifyExhaustive, EachClauseIsDetected) {
  auto r = verify_exhaustive(*sabotaged_trivial(4, 4, 1, false, true));
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.first_failure->clause, Clause::merlin_not_covered);
  EXPECT_EQ(*r.first_failure->merlin_position, 3);

  r = verify_exhaustive(*sabotaged_trivial(4, 3, 1, false, false));
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.first_failure->clause, Clause::answer_exceeds_k);

  r = verify_exhaustive(*sabotaged_trivial(4, 4, 1, true, false));
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.first_failure->clause, Clause::alice_outcome_outside_set);
  EXPECT_EQ(r.first_failure->mode, PlayMode::alice);
}

TEST(VerifyExhaustive, AgreesWithDefinitionOnRandomStrategies) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const int k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
    auto s = random_strategy(n, k, seed % 3 == 0, seed);
    auto r = verify_exhaustive(*s);
    const std::string expected = oracle::first_violation(*s);
    EXPECT_EQ(r.valid, expected.empty()) << "seed " << seed;
    if (!r.valid) {
      EXPECT_EQ(to_string(r.first_failure->clause), expected) << "seed " << seed;
    }
  }
}

TEST(VerifyExhaustive, WorkersDoNotChangeTheReport) {
  for (auto s : {block_square_strategy(2), code6_strategy(), random_strategy(6, 3, true, 11)}) {
    auto one = verify_exhaustive(*s, {1});
    auto four = verify_exhaustive(*s, {4});
    EXPECT_EQ(to_json(one), to_json(four)) << s->description();
  }
}

TEST(VerifyExhaustive, RefusesLargeN) {
  EXPECT_THROW(verify_exhaustive(*trivial_strategy(kMaxExhaustiveN + 1)), InputError);
}

TEST(VerifyStructured, NeedsAnEnumerator) {
  EXPECT_THROW(verify_structured(*product_compose(trivial_strategy(2), trivial_strategy(2))),
               UnsupportedOperation);
}

TEST(VerifySampled, SameSeedSameReport) {
  auto s = random_strategy(7, 4, false, 5);
  auto a = verify_sampled(*s, {500, 42});
  auto b = verify_sampled(*s, {500, 42});
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_FALSE(a.valid);
  EXPECT_TRUE(verify_sampled(*block_square_strategy(3), {2000, 1}).valid);
}

TEST(Report, TextAndJsonShapes) {
  auto r = verify_exhaustive(*sabotaged_trivial(3, 2, 1, false, false));
  auto text = to_text(r);
  EXPECT_NE(text.find("valid: false"), std::string::npos);
  EXPECT_NE(text.find("failure.clause: answer-exceeds-k"), std::string::npos);
  auto json = to_json(r);
  EXPECT_NE(json.find("\"clause\": \"answer-exceeds-k\""), std::string::npos) << json;
  auto ok = to_json(verify_exhaustive(*trivial_strategy(3)));
  EXPECT_NE(ok.find("\"failure\": null"), std::string::npos) << ok;
}

TEST(Mode, ParsesNames) {
  EXPECT_EQ(parse_verification_mode("structured"), VerificationMode::structured);
  EXPECT_THROW(parse_verification_mode("fast"), InputError);
}

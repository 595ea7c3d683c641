#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gks/errors.hpp"
#include "gks/strategies.hpp"
#include "gks/tau.hpp"
#include "gks/verify.hpp"
#include "oracles.hpp"

using namespace gks;

namespace {

std::vector<Bit> bits(const std::string& s) {
  std::vector<Bit> out;
  for (char c : s) out.push_back(static_cast<Bit>(c - '0'));
  return out;
}

PositionSet one_based(std::initializer_list<int> ps) {
  PositionSet out;
  for (int p : ps) out.push_back(p - 1);
  return out;
}

std::map<oracle::Reached, std::set<Position>> enumerated(const Strategy& s) {
  std::map<oracle::Reached, std::set<Position>> out;
  s.enumerate([&](const ReachableOutcome& r) {
    auto& entry = out[{r.bits, r.mode}];
    entry.insert(r.merlin_positions.begin(), r.merlin_positions.end());
    return true;
  });
  return out;
}

StrategyPtr tau_from(const BinaryCode& code, int m, bool flip) {
  auto r = tau_matching(code, m);
  if (!r.tau) throw std::runtime_error("no tau map");
  return tau_strategy(code, *r.tau, flip, "test");
}

// Small verified profiles used by the closure properties.
std::vector<StrategyPtr> small_profiles() {
  return {trivial_strategy(1), trivial_strategy(2), trivial_strategy(3), trivial_strategy(4),
          block_square_strategy(2), pad_strategy(block_square_strategy(2), 3)};
}

}  // namespace

TEST(Trivial, BobExamples) {
  auto s = trivial_strategy(4);
  EXPECT_EQ(s->params(), (StrategyParams{4, 4, 1}));
  EXPECT_EQ(s->answer(bits("0000")), one_based({1, 2, 3, 4}));
  EXPECT_EQ(s->answer(bits("0100")), one_based({2}));
  EXPECT_TRUE(s->in_alice_outcomes(bits("0010")));
  EXPECT_FALSE(s->in_alice_outcomes(bits("0000")));
}

TEST(Trivial, ValidUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    auto s = trivial_strategy(n);
    EXPECT_TRUE(verify_exhaustive(*s).valid) << n;
    EXPECT_EQ(oracle::first_violation(*s), "") << n;
  }
}

TEST(BlockSquare, ExampleOneAnswers) {
  auto s = block_square_strategy(2);
  EXPECT_EQ(s->params(), (StrategyParams{4, 2, std::nullopt}));
  EXPECT_EQ(s->answer(bits("1001")), one_based({1, 4}));
  EXPECT_EQ(s->answer(bits("0010")), one_based({1, 2}));
  EXPECT_EQ(s->answer(bits("1110")), one_based({1, 2}));
  auto report = verify_exhaustive(*s);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.runs_checked, 48u);
}

TEST(BlockSquare, MatchesConsistentMerlinSetOnReachableOutcomes) {
  // Bob in the worked example names exactly the positions where Merlin could
  // have finished to produce what he sees.
  auto s = block_square_strategy(2);
  for (const auto& [key, merlins] : oracle::reachable(*s)) {
    if (key.mode != PlayMode::normal) continue;
    auto answer = s->answer(key.bits);
    EXPECT_EQ(std::set<Position>(answer.begin(), answer.end()), merlins);
  }
}

TEST(BlockSquare, RunGameTrace) {
  auto s = block_square_strategy(2);
  auto out = run_game(*s, RequestOrder::from_one_based({1, 2, 3, 4}, 4), 0);
  EXPECT_EQ(out.to_string(), "0100");
}

TEST(BlockSquare, KThreeExhaustive) {
  auto report = verify_exhaustive(*block_square_strategy(3), {.workers = 4});
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.runs_checked, 725760u);
}

TEST(CodeFamily, SixWordFamilyDistanceIsThree) {
  auto f = CodewordFamily::six_word_family();
  int best = 99;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) best = std::min(best, hamming_distance(f.words()[i], f.words()[j]));
  }
  EXPECT_EQ(best, 3);
  EXPECT_THROW(CodewordFamily(3, {0b000, 0b011, 0b111}), InputError);
}

TEST(CodeFamily, BobExamples) {
  auto s = code6_strategy();
  EXPECT_EQ(s->params(), (StrategyParams{6, 5, 1}));
  EXPECT_EQ(s->answer(bits("100010")), one_based({4}));
  EXPECT_EQ(s->answer(bits("010101")), one_based({1, 2, 4, 5, 6}));
  EXPECT_EQ(s->answer(bits("110001")), one_based({1, 2, 3, 4, 5, 6}));
}

TEST(CodeFamily, AliceModeTraces) {
  auto s = code6_strategy();
  EXPECT_EQ(run_game_alice_mode(*s, RequestOrder::from_one_based({1, 2, 3, 4, 5, 6}, 6)).to_string(), "000001");
  EXPECT_EQ(run_game_alice_mode(*s, RequestOrder::from_one_based({2, 1, 3, 4, 6, 5}, 6)).to_string(), "100100");
}

TEST(CodeFamily, StructuredAndExhaustiveAgree) {
  auto s = code6_strategy();
  auto structured = verify_structured(*s);
  EXPECT_TRUE(structured.valid);
  EXPECT_EQ(structured.runs_checked, 90u);
  EXPECT_TRUE(verify_exhaustive(*s).valid);
  EXPECT_EQ(oracle::first_violation(*s), "");
}

TEST(Enumerators, MatchBruteForceReachability) {
  std::vector<StrategyPtr> cases = {trivial_strategy(3), trivial_strategy(5), code6_strategy(),
                                    block_square_strategy(2), tau_from(hamming_code(3), 1, true),
                                    tau_from(hamming_code(3), 1, false)};
  for (const auto& s : cases) {
    ASSERT_TRUE(s->has_enumerator()) << s->description();
    EXPECT_EQ(enumerated(*s), oracle::reachable(*s)) << s->description();
  }
}

TEST(Enumerators, AliceModeOutcomesAreExactlyTheDeclaredSet) {
  for (const auto& s : {trivial_strategy(4), code6_strategy(), tau_from(hamming_code(3), 1, true)}) {
    std::set<std::vector<Bit>> from_runs;
    for (const auto& [key, _] : oracle::reachable(*s)) {
      if (key.mode == PlayMode::alice) from_runs.insert(key.bits);
    }
    std::set<std::vector<Bit>> declared;
    for (const auto& [key, _] : oracle::reachable(*s)) {
      if (s->in_alice_outcomes(key.bits)) declared.insert(key.bits);
    }
    EXPECT_EQ(from_runs, declared) << s->description();
  }
}

TEST(AliceModeCompose, Arithmetic) {
  auto s = alice_mode_compose(code6_strategy());
  EXPECT_EQ(s->params(), (StrategyParams{30, 5, std::nullopt}));
  EXPECT_EQ(s->description(), "amc(code6)");
  EXPECT_EQ(alice_mode_compose(trivial_strategy(3))->params(), (StrategyParams{9, 3, std::nullopt}));
  EXPECT_THROW(alice_mode_compose(block_square_strategy(2)), UnsupportedOperation);
}

TEST(AliceModeCompose, FirstBlockTrace) {
  auto s = alice_mode_compose(code6_strategy());
  std::vector<int> order;
  for (int p = 1; p <= 29; ++p) order.push_back(p);
  order.push_back(30);
  auto out = run_game(*s, RequestOrder::from_one_based(order, 30), 0);
  EXPECT_EQ(out.to_string().substr(0, 6), "000001");
}

TEST(AliceModeCompose, ClosureUpToEight) {
  std::vector<StrategyPtr> bases = {trivial_strategy(1), trivial_strategy(2), pad_strategy(trivial_strategy(3), 2),
                                    pad_strategy(trivial_strategy(4), 2), pad_strategy(trivial_strategy(5), 1)};
  for (const auto& base : bases) {
    ASSERT_TRUE(verify_exhaustive(*base).valid) << base->description();
    auto s = alice_mode_compose(base);
    ASSERT_LE(s->n(), 8);
    EXPECT_EQ(s->n(), base->k() / *base->k_alice() * base->n());
    EXPECT_TRUE(verify_exhaustive(*s).valid) << s->description();
    EXPECT_EQ(oracle::first_violation(*s), "") << s->description();
  }
}

TEST(Product, Arithmetic) {
  auto s = product_compose(alice_mode_compose(code6_strategy()), alice_mode_compose(code6_strategy()));
  EXPECT_EQ(s->params(), (StrategyParams{900, 25, std::nullopt}));
  EXPECT_EQ(product_compose(block_square_strategy(2), block_square_strategy(2))->params(),
            (StrategyParams{16, 4, std::nullopt}));
}

TEST(Product, ClosureUpToEight) {
  auto profiles = small_profiles();
  int checked = 0;
  for (const auto& p : profiles) {
    for (const auto& q : profiles) {
      if (p->n() * q->n() > 8) continue;
      auto s = product_compose(p, q);
      EXPECT_EQ(s->k(), p->k() * q->k());
      EXPECT_TRUE(verify_exhaustive(*s).valid) << s->description();
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(Product, SampledSixteen) {
  auto s = product_compose(block_square_strategy(2), block_square_strategy(2));
  EXPECT_TRUE(verify_sampled(*s, {.samples = 100000, .seed = 0}).valid);
}

TEST(Product, WorkedExampleAssignment) {
  // p: the first touch in a block answers 1 iff it is the block's first
  // position, the second touch answers the opposite test. q: 1 on its first
  // request only.
  FunctionStrategyParts p;
  p.params = {3, 2, std::nullopt};
  p.alice = [](std::span<const Position> prefix) {
    const bool first_pos = prefix.back() == 0;
    return static_cast<Bit>(prefix.size() == 1 ? first_pos : !first_pos);
  };
  p.bob = [](std::span<const Bit>) { return PositionSet{0, 1}; };
  FunctionStrategyParts q;
  q.params = {4, 2, std::nullopt};
  q.alice = [](std::span<const Position> prefix) { return static_cast<Bit>(prefix.size() == 1); };
  q.bob = [](std::span<const Bit>) { return PositionSet{0, 1}; };
  auto s = product_compose(make_function_strategy(p), make_function_strategy(q));

  std::vector<Position> requests = {7, 6, 8, 9, 11, 10, 2, 5, 4};
  std::vector<Bit> values(12, 2);
  s->assign(requests, PlayMode::normal, values);
  auto render = [&] {
    std::string out;
    for (int b = 0; b < 4; ++b) {
      out += '(';
      for (int i = 0; i < 3; ++i) {
        Bit v = values[static_cast<std::size_t>(3 * b + i)];
        out += v == 2 ? '*' : static_cast<char>('0' + v);
      }
      out += ')';
    }
    return out;
  };
  EXPECT_EQ(render(), "(**0)(*10)(001)(101)");
  // Merlin's request of block 2's last free entry is answered so the block
  // parity matches q's bit for block 2.
  requests.push_back(3);
  s->assign(requests, PlayMode::normal, values);
  EXPECT_EQ(render(), "(**0)(110)(001)(101)");
}

TEST(Pad, RejectsBadSizes) {
  EXPECT_THROW(pad_strategy(block_square_strategy(2), 4), InputError);
  EXPECT_THROW(pad_strategy(block_square_strategy(2), 0), InputError);
}

TEST(Pad, ClosureForEveryM) {
  std::vector<StrategyPtr> bases = {trivial_strategy(5), block_square_strategy(2), code6_strategy(),
                                    alice_mode_compose(trivial_strategy(2))};
  for (const auto& p : bases) {
    for (int m = 1; m < p->n(); ++m) {
      auto s = pad_strategy(p, m);
      EXPECT_EQ(s->n(), m);
      EXPECT_EQ(s->k(), p->k());
      EXPECT_TRUE(verify_exhaustive(*s).valid) << s->description();
      EXPECT_EQ(oracle::first_violation(*s), "") << s->description();
    }
  }
  auto eight = pad_strategy(block_square_strategy(3), 8);
  EXPECT_EQ(eight->params(), (StrategyParams{8, 3, std::nullopt}));
  EXPECT_TRUE(verify_exhaustive(*eight, {.workers = 4}).valid);
}

TEST(Tau, SmallHammingFlipVerdicts) {
  auto flip = tau_from(hamming_code(3), 1, true);
  EXPECT_EQ(flip->params(), (StrategyParams{7, 6, 1}));
  EXPECT_TRUE(verify_structured(*flip).valid);
  EXPECT_TRUE(verify_exhaustive(*flip).valid);

  auto literal = tau_from(hamming_code(3), 1, false);
  auto structured = verify_structured(*literal);
  auto exhaustive = verify_exhaustive(*literal);
  EXPECT_FALSE(structured.valid);
  EXPECT_FALSE(exhaustive.valid);
  ASSERT_TRUE(structured.first_failure && exhaustive.first_failure);
  EXPECT_EQ(structured.first_failure->clause, Clause::answer_exceeds_k_alice);
  EXPECT_EQ(oracle::first_violation(*literal), "answer-exceeds-k-alice");
}

TEST(Tau, Hamming4FourIsElevenOneFifteen) {
  auto s = tau_from(hamming_code(4), 4, true);
  EXPECT_EQ(s->params(), (StrategyParams{15, 11, 1}));
  EXPECT_TRUE(verify_structured(*s).valid);
  EXPECT_TRUE(verify_sampled(*s, {.samples = 20000, .seed = 3}).valid);
  EXPECT_EQ(alice_mode_compose(s)->params(), (StrategyParams{165, 11, std::nullopt}));

  auto literal = tau_from(hamming_code(4), 4, false);
  auto report = verify_structured(*literal);
  EXPECT_FALSE(report.valid);
  ASSERT_TRUE(report.first_failure);
  EXPECT_EQ(report.first_failure->clause, Clause::answer_exceeds_k_alice);
  EXPECT_EQ(report.first_failure->mode, PlayMode::normal);
}

TEST(Tau, NineFortySevenOneNine) {
  auto s = tau_from(nonlinear_9_40_code(), 2, true);
  EXPECT_EQ(s->params(), (StrategyParams{9, 7, 1}));
  EXPECT_TRUE(verify_structured(*s).valid);
  EXPECT_TRUE(verify_exhaustive(*s, {.workers = 4}).valid);
  EXPECT_EQ(alice_mode_compose(s)->params(), (StrategyParams{63, 7, std::nullopt}));
}

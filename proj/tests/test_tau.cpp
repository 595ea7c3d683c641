#include <gtest/gtest.h>

#include <bit>
#include <set>
#include <sstream>

#include "gks/codes.hpp"
#include "gks/errors.hpp"
#include "gks/tau.hpp"

using namespace gks;

namespace {

bool covers(Word w, SubsetMask s) { return (w & s) == s; }

// Codewords all-ones on at least one subset in `family`.
std::set<Word> neighbourhood(const BinaryCode& code, const std::vector<SubsetMask>& family) {
  std::set<Word> out;
  for (SubsetMask s : family) {
    for (Word w : code.words()) {
      if (covers(w, s)) out.insert(w);
    }
  }
  return out;
}

}  // namespace

TEST(Subsets, ColexOrderAndCount) {
  auto s = subsets_colex(4, 2);
  ASSERT_EQ(s.size(), 6u);
  // {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
  std::vector<std::vector<int>> expect = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(subset_positions(s[i], 4), expect[i]);
  EXPECT_EQ(subsets_colex(15, 4).size(), 1365u);
  EXPECT_EQ(subset_from_positions({0, 3}, 4), SubsetMask{0b1001});
}

TEST(TauMatching, Hamming4WithFourFound) {
  auto code = hamming_code(4);
  auto r = tau_matching(code, 4);
  ASSERT_TRUE(r.tau.has_value());
  EXPECT_EQ(r.left_vertices, 1365u);
  EXPECT_EQ(r.right_vertices, 2048u);
  EXPECT_EQ(r.matching_size, 1365u);
  EXPECT_TRUE(r.maximality_confirmed);
  EXPECT_TRUE(tau_is_valid(*r.tau));
  for (const auto& e : r.tau->entries()) {
    EXPECT_EQ(std::popcount(e.subset), 4);
    EXPECT_TRUE(covers(e.word, e.subset));
    EXPECT_TRUE(code.contains(e.word));
    EXPECT_EQ(r.tau->preimage(e.word), e.subset);
  }
}

TEST(TauMatching, Hamming3WithTwoHasHallWitness) {
  auto code = hamming_code(3);
  auto r = tau_matching(code, 2);
  EXPECT_FALSE(r.tau.has_value());
  EXPECT_EQ(r.left_vertices, 21u);
  EXPECT_EQ(r.matching_size, 15u);
  EXPECT_TRUE(r.maximality_confirmed);
  ASSERT_FALSE(r.hall_witness.empty());
  auto nb = neighbourhood(code, r.hall_witness);
  EXPECT_EQ(nb.size(), r.witness_neighbourhood);
  EXPECT_LT(nb.size(), r.hall_witness.size());
  // Koenig: deficiency equals the shortfall of the maximum matching.
  EXPECT_EQ(r.hall_witness.size() - nb.size(), r.left_vertices - r.matching_size);
}

TEST(TauMatching, NineFortyCodeWithTwoFound) {
  auto r = tau_matching(nonlinear_9_40_code(), 2);
  ASSERT_TRUE(r.tau.has_value());
  EXPECT_EQ(r.matching_size, 36u);
  EXPECT_TRUE(tau_is_valid(*r.tau));
}

TEST(TauMatching, Deterministic) {
  auto a = tau_matching(hamming_code(4), 4);
  auto b = tau_matching(hamming_code(4), 4);
  ASSERT_TRUE(a.tau && b.tau);
  EXPECT_EQ(a.tau->entries(), b.tau->entries());
}

TEST(TauMap, FormatParseRoundTrip) {
  auto r = tau_matching(nonlinear_9_40_code(), 2);
  ASSERT_TRUE(r.tau);
  std::istringstream in(format_tau(*r.tau));
  auto back = parse_tau(in);
  EXPECT_EQ(back.length(), 9);
  EXPECT_EQ(back.m(), 2);
  EXPECT_EQ(back.entries(), r.tau->entries());
}

TEST(TauMap, RejectsBadMaps) {
  // Word not all-ones on its subset.
  EXPECT_THROW(TauMap(4, 2, {{0b1100, 0b1010}}), InputError);
  // Not injective.
  EXPECT_THROW(TauMap(4, 2, {{0b1100, 0b1111}, {0b0011, 0b1111}}), InputError);
  // Wrong subset size.
  EXPECT_THROW(TauMap(4, 2, {{0b1110, 0b1111}}), InputError);
  // Subset mapped twice.
  EXPECT_THROW(TauMap(4, 2, {{0b1100, 0b1100}, {0b1100, 0b1101}}), InputError);

  std::istringstream bad_pos("1,5 -> 1111\n");
  EXPECT_THROW(parse_tau(bad_pos), ParseError);
  std::istringstream mixed("1,2 -> 1100\n1,2,3 -> 1110\n");
  try {
    parse_tau(mixed);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

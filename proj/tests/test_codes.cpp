#include <gtest/gtest.h>

#include <sstream>

#include "gks/codes.hpp"
#include "gks/errors.hpp"

using namespace gks;

namespace {

int brute_min_distance(const std::vector<Word>& words) {
  int best = 64;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      int d = 0;
      for (Word x = words[i] ^ words[j]; x; x >>= 1) d += static_cast<int>(x & 1u);
      best = std::min(best, d);
    }
  }
  return best;
}

// Syndrome of w against the check matrix whose column j is j in binary.
unsigned syndrome(Word w, int length) {
  unsigned s = 0;
  for (int p = 0; p < length; ++p) {
    if (word_bit(w, length, p)) s ^= static_cast<unsigned>(p + 1);
  }
  return s;
}

}  // namespace

TEST(Words, FormatParseRoundTrip) {
  EXPECT_EQ(format_word(0b100010, 6), "100010");
  EXPECT_EQ(parse_word("100010"), Word{0b100010});
  EXPECT_EQ(word_bit(0b100010, 6, 0), 1);
  EXPECT_EQ(word_bit(0b100010, 6, 4), 1);
  EXPECT_EQ(word_bit(0b100010, 6, 5), 0);
  EXPECT_THROW(parse_word("10a"), ParseError);
  EXPECT_THROW(parse_word(""), ParseError);
}

TEST(Hamming, SizesAndDistanceAgreeWithBruteForce) {
  for (int r = 2; r <= 4; ++r) {
    auto code = hamming_code(r);
    const int len = (1 << r) - 1;
    EXPECT_EQ(code.length(), len);
    EXPECT_EQ(code.size(), std::size_t{1} << (len - r));
    EXPECT_EQ(brute_min_distance(code.words()), 3);
    EXPECT_EQ(min_distance(code), 3);
    for (Word w : code.words()) EXPECT_EQ(syndrome(w, len), 0u) << format_word(w, len);
  }
  EXPECT_THROW(hamming_code(1), InputError);
  EXPECT_THROW(hamming_code(5), InputError);
}

TEST(Hamming, PerfectCodeDecodesEveryWord) {
  auto code = hamming_code(3);
  for (Word x = 0; x < 128; ++x) {
    auto c = decode_radius_one(code, x);
    ASSERT_TRUE(c.has_value());
    EXPECT_LE(hamming_distance(*c, x), 1);
    EXPECT_TRUE(code.contains(*c));
  }
}

TEST(Codes, DecodeReturnsNothingOutsideTheBalls) {
  BinaryCode code(5, {0b00000, 0b11100});
  EXPECT_EQ(decode_radius_one(code, 0b00001), Word{0});
  EXPECT_EQ(decode_radius_one(code, 0b11101), Word{0b11100});
  EXPECT_FALSE(decode_radius_one(code, 0b00011).has_value());
}

TEST(Codes, ConstructorRejectsBadWords) {
  EXPECT_THROW(BinaryCode(3, {1, 1}), InputError);
  EXPECT_THROW(BinaryCode(3, {8}), InputError);
  BinaryCode single(4, {3});
  EXPECT_FALSE(single.min_distance().has_value());
  EXPECT_THROW(min_distance(single), InputError);
}

TEST(Codes, PunctureDropsCoordinateAndMerges) {
  BinaryCode code(3, {0b000, 0b001, 0b110});
  auto p = puncture(code, 2);
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.words(), (std::vector<Word>{0b00, 0b11}));
  auto q = puncture(code, 0);
  EXPECT_EQ(q.words(), (std::vector<Word>{0b00, 0b01, 0b10}));
  EXPECT_THROW(puncture(code, 3), InputError);
}

TEST(Codes, PuncturedHammingLosesOneDistance) {
  auto code = hamming_code(3);
  for (int pos = 0; pos < 7; ++pos) {
    auto p = puncture(code, pos);
    EXPECT_EQ(p.size(), code.size());
    EXPECT_EQ(brute_min_distance(p.words()), 2);
  }
}

TEST(Codes, NineFortyCode) {
  auto code = nonlinear_9_40_code();
  EXPECT_EQ(code.length(), 9);
  EXPECT_EQ(code.size(), 40u);
  EXPECT_EQ(brute_min_distance(code.words()), 3);
}

TEST(Codes, DataFileHoldsTenFortyFourCode) {
  auto code = load_code(std::string(GKS_DATA_DIR) + "/code_10_40_4.txt");
  EXPECT_EQ(code.length(), 10);
  EXPECT_EQ(code.size(), 40u);
  EXPECT_EQ(brute_min_distance(code.words()), 4);
  EXPECT_EQ(puncture(code, 9).words(), nonlinear_9_40_code().words());
}

TEST(Codes, GreedySearchMeetsRequestedDistance) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto code = greedy_code_search(7, 3, seed, 5);
    EXPECT_EQ(code.length(), 7);
    EXPECT_GE(brute_min_distance(code.words()), 3);
    // Maximality: no outside word fits.
    for (Word x = 0; x < 128; ++x) {
      if (code.contains(x)) continue;
      bool fits = true;
      for (Word w : code.words()) fits = fits && hamming_distance(w, x) >= 3;
      EXPECT_FALSE(fits) << format_word(x, 7);
    }
  }
  EXPECT_EQ(greedy_code_search(7, 3, 9, 4).words(), greedy_code_search(7, 3, 9, 4).words());
}

TEST(Codes, ParseAndFormatRoundTrip) {
  auto code = hamming_code(2);
  std::istringstream in(format_code(code, "two words"));
  EXPECT_EQ(parse_code(in).words(), code.words());

  std::istringstream commented("# header\n\n0110\n1001\n");
  auto c = parse_code(commented);
  EXPECT_EQ(c.length(), 4);
  EXPECT_EQ(c.size(), 2u);
}

TEST(Codes, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_code(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0101\n# ok\n011\n"), 3u);
  EXPECT_EQ(line_of("0101\n01x1\n"), 2u);
  EXPECT_EQ(line_of("0101\n0101\n"), 2u);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(parse_code(empty), ParseError);
}

#pragma once

// Binary block codes of length <= 63.
//
// A word is stored in a std::uint64_t with position 1 in the most
// significant of its `length` bits, so numeric order equals the order of
// the printed strings.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gks {

using Word = std::uint64_t;

inline constexpr int kMaxCodeLength = 63;

/// Bit of `word` at 0-based position `pos` in a code of length `length`.
constexpr int word_bit(Word word, int length, int pos) {
  return static_cast<int>((word >> (length - 1 - pos)) & 1u);
}

/// Single-position mask, same convention as word_bit.
constexpr Word position_mask(int length, int pos) { return Word{1} << (length - 1 - pos); }

std::string format_word(Word word, int length);
Word parse_word(std::string_view text);

int hamming_distance(Word a, Word b);

class BinaryCode {
 public:
  /// Throws InputError on duplicate words or words wider than `length`.
  BinaryCode(int length, std::vector<Word> words);

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  /// Sorted numerically.
  const std::vector<Word>& words() const noexcept { return words_; }
  bool contains(Word w) const;

  /// Exact pairwise minimum, cached at construction; nullopt for < 2 words.
  std::optional<int> min_distance() const noexcept { return min_distance_; }

 private:
  int length_;
  std::vector<Word> words_;
  std::optional<int> min_distance_;
};

/// Pairwise minimum Hamming distance. Throws InputError for fewer than 2 words.
int min_distance(const BinaryCode& code);

/// The [2^r - 1, 2^r - 1 - r] Hamming code; position j has parity-check
/// column j in binary. Requires 2 <= r <= 4.
BinaryCode hamming_code(int r);

/// A nonlinear (9, 40, 3) code: an even-weight (10, 40, 4) code found by
/// tabu search, punctured at its last position.
BinaryCode nonlinear_9_40_code();

/// Deletes 0-based coordinate `position` and merges words that collide.
BinaryCode puncture(const BinaryCode& code, int position);

/// Unique codeword within distance 1, if any. The code must have minimum
/// distance >= 3 for the answer to be unambiguous.
std::optional<Word> decode_radius_one(const BinaryCode& code, Word received);

/// Randomized greedy construction: shuffles the space and keeps every word
/// at distance >= `distance` from those already taken; returns the best of
/// `attempts` tries. Reaching the optimum is not promised.
BinaryCode greedy_code_search(int length, int distance, std::uint64_t seed, int attempts);

/// Code file: `#` comment lines, one binary word per line, length from the
/// first word. Blank lines are skipped.
BinaryCode parse_code(std::istream& in);
BinaryCode load_code(const std::filesystem::path& path);
std::string format_code(const BinaryCode& code, std::string_view comment = {});
void save_code(const BinaryCode& code, const std::filesystem::path& path,
               std::string_view comment = {});

}  // namespace gks

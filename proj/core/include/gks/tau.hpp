#pragma once

// Injective maps tau from m-subsets H of the positions to codewords x with
// x all-ones on H, and the bipartite matching search that finds them.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gks/codes.hpp"

namespace gks {

/// A subset of positions stored like a word: position 1 is the most
/// significant of `length` bits.
using SubsetMask = Word;

struct TauEntry {
  SubsetMask subset = 0;
  Word word = 0;

  friend bool operator==(const TauEntry&, const TauEntry&) = default;
};

class TauMap {
 public:
  /// Throws InputError unless every subset has m elements, subsets are
  /// distinct, the map is injective and each word is all-ones on its subset.
  TauMap(int length, int m, std::vector<TauEntry> entries);

  int length() const noexcept { return length_; }
  int m() const noexcept { return m_; }
  const std::vector<TauEntry>& entries() const noexcept { return entries_; }

  std::optional<Word> image(SubsetMask subset) const;
  std::optional<SubsetMask> preimage(Word word) const;

 private:
  int length_;
  int m_;
  std::vector<TauEntry> entries_;  // sorted by subset
  std::vector<TauEntry> by_word_;  // sorted by word
};

/// Independent re-check of injectivity and covering.
bool tau_is_valid(const TauMap& tau);

/// All m-subsets of [length] in colexicographic order.
std::vector<SubsetMask> subsets_colex(int length, int m);

std::vector<int> subset_positions(SubsetMask subset, int length);
SubsetMask subset_from_positions(const std::vector<int>& positions, int length);

struct TauMatchingResult {
  std::optional<TauMap> tau;
  std::size_t left_vertices = 0;
  std::size_t right_vertices = 0;
  std::size_t matching_size = 0;
  /// Deficient Hall set when the matching does not saturate the subsets:
  /// |neighbourhood| < |witness|.
  std::vector<SubsetMask> hall_witness;
  std::size_t witness_neighbourhood = 0;
  /// Set after an extra search pass found no augmenting path.
  bool maximality_confirmed = false;
};

inline constexpr std::size_t kMaxMatchingSide = 100000;

/// Maximum matching between m-subsets H and codewords x with x|_H = 1...1.
/// Deterministic: subsets in colex order, words in numeric order.
TauMatchingResult tau_matching(const BinaryCode& code, int m);

/// Lines "i1,i2,...,im -> word", positions 1-based.
std::string format_tau(const TauMap& tau);
TauMap parse_tau(std::istream& in);

}  // namespace gks

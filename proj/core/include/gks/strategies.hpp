#pragma once

// Strategy constructions and combinators.

#include <string>
#include <vector>

#include "gks/codes.hpp"
#include "gks/game.hpp"
#include "gks/tau.hpp"

namespace gks {

/// Words w_1..w_n of length n, indexed by the first position Alice is asked
/// about. Pairwise distance >= 3 is checked at construction.
class CodewordFamily {
 public:
  CodewordFamily(int n, std::vector<Word> words);

  /// The six-word length-6 family behind the (5,1,6) strategy.
  static CodewordFamily six_word_family();

  int n() const noexcept { return n_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  Word word(Position first_touched) const { return words_[static_cast<std::size_t>(first_touched)]; }

 private:
  int n_;
  std::vector<Word> words_;
};

/// (n, 1, n): Alice always answers 0 and 1 for an Alice-mode final entry.
/// Bob names every position on the all-zero array, the single 1 when there
/// is one, and every position when there are two or more.
StrategyPtr trivial_strategy(int n);

/// (k, k^2): alice_mode_compose(trivial_strategy(k)).
StrategyPtr block_square_strategy(int k);

/// (n-1, 1, n): Alice commits to w_i on first touch at i; the final entry of
/// an Alice-mode run is flipped. `description` names it in reports.
StrategyPtr code_family_strategy(const CodewordFamily& family, std::string description = "family");

/// The six-word family as a (5,1,6) strategy, described as "code6".
StrategyPtr code6_strategy();

/// (kk', nn'): p played inside consecutive blocks of size n; each completed
/// block's parity carries q's bit for that block.
StrategyPtr product_compose(StrategyPtr p, StrategyPtr q);

/// (b, floor(b/a) * n) from a (b, a, n) strategy: floor(b/a) blocks, all in
/// Alice-mode except the one Merlin finishes.
StrategyPtr alice_mode_compose(StrategyPtr p);

/// (k, m) from (k, n), m < n: positions m+1..n are requested (in increasing
/// order) before the real game starts.
StrategyPtr pad_strategy(StrategyPtr p, int m);

/// Candidate (n-m, 1, n) strategy: Alice answers 1 on the first m requests H,
/// then follows tau(H). With flip_final the last entry of an Alice-mode run
/// is flipped; without it the Alice-mode array is tau(H) itself.
/// `code_name` is used in the description.
StrategyPtr tau_strategy(const BinaryCode& code, const TauMap& tau, bool flip_final,
                         std::string code_name = "code");

}  // namespace gks

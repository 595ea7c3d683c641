#include "gks/strategies.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "gks/errors.hpp"

namespace gks {

namespace {

constexpr int kMaxTableLength = 24;

Word pack_bits(std::span<const Bit> bits) {
  Word w = 0;
  for (Bit b : bits) w = (w << 1) | b;
  return w;
}

void unpack_bits(Word w, int length, std::span<Bit> out) {
  for (int p = 0; p < length; ++p) out[static_cast<std::size_t>(p)] = static_cast<Bit>(word_bit(w, length, p));
}

// Radius-one decoding table over all 2^n arrays.
class RadiusOneTable {
 public:
  struct Hit {
    int index;  // into the word list
    int flip;   // flipped position, -1 for an exact match
  };

  RadiusOneTable(int length, const std::vector<Word>& words)
      : length_(length), table_(std::size_t{1} << length, kUndecodable) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      set(words[i], static_cast<int>(i), -1);
      for (int p = 0; p < length; ++p) set(words[i] ^ position_mask(length, p), static_cast<int>(i), p);
    }
  }

  std::optional<Hit> decode(Word received) const {
    std::int32_t e = table_[static_cast<std::size_t>(received)];
    if (e == kUndecodable) return std::nullopt;
    return Hit{e >> 8, (e & 0xff) - 1};
  }

 private:
  void set(Word w, int index, int flip) {
    auto& slot = table_[static_cast<std::size_t>(w)];
    if (slot != kUndecodable) throw InputError("words closer than distance 3");
    slot = (index << 8) | (flip + 1);
  }

  static constexpr std::int32_t kUndecodable = -1;
  int length_;
  std::vector<std::int32_t> table_;
};

void first_positions(int count, Position offset, PositionSet& out) {
  for (int p = 0; p < count; ++p) out.push_back(p + offset);
}

// ---------------------------------------------------------------------------

class TrivialStrategy final : public Strategy {
 public:
  explicit TrivialStrategy(int n)
      : Strategy({n, n, 1}, "trivial(" + std::to_string(n) + ")") {}

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    for (Position r : requests) values[static_cast<std::size_t>(r)] = 0;
    if (mode == PlayMode::alice) values[static_cast<std::size_t>(requests.back())] = 1;
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    const auto ones = std::count(outcome.begin(), outcome.end(), Bit{1});
    if (ones == 1) {
      auto it = std::find(outcome.begin(), outcome.end(), Bit{1});
      out.push_back(static_cast<Position>(it - outcome.begin()) + offset);
    } else {
      first_positions(n(), offset, out);
    }
  }

  bool in_alice_outcomes(std::span<const Bit> outcome) const override {
    return std::count(outcome.begin(), outcome.end(), Bit{1}) == 1;
  }

  bool has_enumerator() const override { return true; }

  std::uint64_t enumerate(const OutcomeVisitor& visit) const override {
    ReachableOutcome r;
    r.bits.assign(static_cast<std::size_t>(n()), 0);
    std::uint64_t count = 0;
    for (Position p = 0; p < n(); ++p) {
      r.mode = PlayMode::normal;
      r.merlin_positions = {p};
      for (Bit b = 0; b <= 1; ++b) {
        r.bits[static_cast<std::size_t>(p)] = b;
        ++count;
        if (!visit(r)) return count;
      }
      r.mode = PlayMode::alice;
      r.merlin_positions.clear();
      ++count;
      if (!visit(r)) return count;
      r.bits[static_cast<std::size_t>(p)] = 0;
    }
    return count;
  }
};

// ---------------------------------------------------------------------------

class CodeFamilyStrategy final : public Strategy {
 public:
  CodeFamilyStrategy(const CodewordFamily& family, std::string description)
      : Strategy({family.n(), family.n() - 1, 1}, std::move(description)),
        family_(family),
        decoder_(family.n(), family.words()) {}

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    if (requests.empty()) return;
    const Word w = family_.word(requests.front());
    for (Position r : requests) values[static_cast<std::size_t>(r)] = static_cast<Bit>(word_bit(w, n(), r));
    if (mode == PlayMode::alice) values[static_cast<std::size_t>(requests.back())] ^= 1;
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    auto hit = decoder_.decode(pack_bits(outcome));
    if (!hit) {
      first_positions(n(), offset, out);  // unreachable
    } else if (hit->flip < 0) {
      for (Position p = 0; p < n(); ++p) {
        if (p != hit->index) out.push_back(p + offset);
      }
    } else {
      out.push_back(hit->flip + offset);
    }
  }

  bool in_alice_outcomes(std::span<const Bit> outcome) const override {
    auto hit = decoder_.decode(pack_bits(outcome));
    return hit && hit->flip >= 0 && hit->flip != hit->index;
  }

  bool has_enumerator() const override { return true; }

  std::uint64_t enumerate(const OutcomeVisitor& visit) const override {
    ReachableOutcome r;
    r.bits.resize(static_cast<std::size_t>(n()));
    std::uint64_t count = 0;
    for (Position i = 0; i < n(); ++i) {
      const Word w = family_.word(i);
      for (Position p = 0; p < n(); ++p) {
        if (p == i) continue;
        unpack_bits(w, n(), r.bits);
        r.mode = PlayMode::normal;
        r.merlin_positions = {p};
        for (Bit b = 0; b <= 1; ++b) {
          r.bits[static_cast<std::size_t>(p)] = b;
          ++count;
          if (!visit(r)) return count;
        }
      }
      for (Position p = 0; p < n(); ++p) {
        if (p == i) continue;
        unpack_bits(w ^ position_mask(n(), p), n(), r.bits);
        r.mode = PlayMode::alice;
        r.merlin_positions.clear();
        ++count;
        if (!visit(r)) return count;
      }
    }
    return count;
  }

 private:
  CodewordFamily family_;
  RadiusOneTable decoder_;
};

// ---------------------------------------------------------------------------

class TauStrategy final : public Strategy {
 public:
  TauStrategy(const BinaryCode& code, const TauMap& tau, bool flip_final, std::string description)
      : Strategy({code.length(), code.length() - tau.m(), 1}, std::move(description)),
        code_(code),
        tau_(tau),
        flip_final_(flip_final),
        decoder_(code.length(), code.words()) {}

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    const std::size_t m = static_cast<std::size_t>(tau_.m());
    SubsetMask h = 0;
    for (std::size_t i = 0; i < requests.size() && i < m; ++i) {
      values[static_cast<std::size_t>(requests[i])] = 1;
      h |= position_mask(n(), requests[i]);
    }
    if (requests.size() <= m) return;
    const Word x = *tau_.image(h);
    for (std::size_t i = m; i < requests.size(); ++i) {
      values[static_cast<std::size_t>(requests[i])] = static_cast<Bit>(word_bit(x, n(), requests[i]));
    }
    if (mode == PlayMode::alice && flip_final_) values[static_cast<std::size_t>(requests.back())] ^= 1;
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    auto hit = decoder_.decode(pack_bits(outcome));
    if (!hit) {
      first_positions(k(), offset, out);
      return;
    }
    const Word x = code_.words()[static_cast<std::size_t>(hit->index)];
    auto h = tau_.preimage(x);
    if (!h) {
      int taken = 0;
      for (Position p = 0; p < n() && taken < k(); ++p) {
        if (!word_bit(x, n(), p)) {
          out.push_back(p + offset);
          ++taken;
        }
      }
      return;
    }
    if (hit->flip < 0) {
      for (Position p = 0; p < n(); ++p) {
        if (!(*h & position_mask(n(), p))) out.push_back(p + offset);
      }
    } else {
      out.push_back(hit->flip + offset);
    }
  }

  bool in_alice_outcomes(std::span<const Bit> outcome) const override {
    auto hit = decoder_.decode(pack_bits(outcome));
    if (!hit) return false;
    auto h = tau_.preimage(code_.words()[static_cast<std::size_t>(hit->index)]);
    if (!h) return false;
    if (!flip_final_) return hit->flip < 0;
    return hit->flip >= 0 && !(*h & position_mask(n(), hit->flip));
  }

  bool has_enumerator() const override { return true; }

  std::uint64_t enumerate(const OutcomeVisitor& visit) const override {
    ReachableOutcome r;
    r.bits.resize(static_cast<std::size_t>(n()));
    std::uint64_t count = 0;
    for (const auto& e : tau_.entries()) {
      for (Position p = 0; p < n(); ++p) {
        if (e.subset & position_mask(n(), p)) continue;
        unpack_bits(e.word, n(), r.bits);
        r.mode = PlayMode::normal;
        r.merlin_positions = {p};
        for (Bit b = 0; b <= 1; ++b) {
          r.bits[static_cast<std::size_t>(p)] = b;
          ++count;
          if (!visit(r)) return count;
        }
      }
      for (Position p = 0; p < n(); ++p) {
        if (e.subset & position_mask(n(), p)) continue;
        Word final_word = flip_final_ ? e.word ^ position_mask(n(), p) : e.word;
        unpack_bits(final_word, n(), r.bits);
        r.mode = PlayMode::alice;
        r.merlin_positions.clear();
        ++count;
        if (!visit(r)) return count;
      }
    }
    return count;
  }

 private:
  BinaryCode code_;
  TauMap tau_;
  bool flip_final_;
  RadiusOneTable decoder_;
};

// ---------------------------------------------------------------------------

// Requests split by consecutive blocks of equal size, in request order.
struct BlockSplit {
  std::vector<std::vector<Position>> local;  // per block, local positions
  std::vector<int> completed;                // blocks in order of completion
};

BlockSplit split_blocks(std::span<const Position> requests, int block_size, int blocks) {
  BlockSplit s;
  s.local.resize(static_cast<std::size_t>(blocks));
  for (Position r : requests) {
    const int b = r / block_size;
    auto& sub = s.local[static_cast<std::size_t>(b)];
    sub.push_back(r % block_size);
    if (static_cast<int>(sub.size()) == block_size) s.completed.push_back(b);
  }
  return s;
}

class ProductStrategy final : public Strategy {
 public:
  ProductStrategy(StrategyPtr inner, StrategyPtr outer)
      : Strategy({inner->n() * outer->n(), inner->k() * outer->k(), std::nullopt},
                 "prod(" + inner->description() + "," + outer->description() + ")"),
        inner_(std::move(inner)),
        outer_(std::move(outer)) {}

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    if (mode == PlayMode::alice) throw UnsupportedOperation(description() + " has no Alice-mode");
    const int bn = inner_->n();
    const int blocks = outer_->n();
    BlockSplit split = split_blocks(requests, bn, blocks);
    std::vector<Bit> outer_values(static_cast<std::size_t>(blocks), 0);
    outer_->assign(split.completed, PlayMode::normal, outer_values);
    for (int b = 0; b < blocks; ++b) {
      const auto& sub = split.local[static_cast<std::size_t>(b)];
      auto block = values.subspan(static_cast<std::size_t>(b * bn), static_cast<std::size_t>(bn));
      if (static_cast<int>(sub.size()) < bn) {
        inner_->assign(sub, PlayMode::normal, block);
        continue;
      }
      std::span<const Position> all(sub);
      inner_->assign(all.first(sub.size() - 1), PlayMode::normal, block);
      Bit parity = 0;
      for (std::size_t i = 0; i + 1 < sub.size(); ++i) parity ^= block[static_cast<std::size_t>(sub[i])];
      block[static_cast<std::size_t>(sub.back())] = parity ^ outer_values[static_cast<std::size_t>(b)];
    }
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    const int bn = inner_->n();
    const int blocks = outer_->n();
    std::vector<Bit> parities(static_cast<std::size_t>(blocks), 0);
    for (int b = 0; b < blocks; ++b) {
      Bit parity = 0;
      for (int i = 0; i < bn; ++i) parity ^= outcome[static_cast<std::size_t>(b * bn + i)];
      parities[static_cast<std::size_t>(b)] = parity;
    }
    PositionSet chosen;
    outer_->answer_into(parities, 0, chosen);
    for (Position b : chosen) {
      inner_->answer_into(outcome.subspan(static_cast<std::size_t>(b * bn), static_cast<std::size_t>(bn)),
                          offset + b * bn, out);
    }
  }

 private:
  StrategyPtr inner_;
  StrategyPtr outer_;
};

// ---------------------------------------------------------------------------

class AliceModeComposed final : public Strategy {
 public:
  AliceModeComposed(StrategyPtr inner, int blocks, std::string description)
      : Strategy({inner->n() * blocks, inner->k(), std::nullopt}, std::move(description)),
        inner_(std::move(inner)),
        blocks_(blocks) {}

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    if (mode == PlayMode::alice) throw UnsupportedOperation(description() + " has no Alice-mode");
    const int bn = inner_->n();
    BlockSplit split = split_blocks(requests, bn, blocks_);
    for (int b = 0; b < blocks_; ++b) {
      const auto& sub = split.local[static_cast<std::size_t>(b)];
      auto block = values.subspan(static_cast<std::size_t>(b * bn), static_cast<std::size_t>(bn));
      const bool complete = static_cast<int>(sub.size()) == bn;
      inner_->assign(sub, complete ? PlayMode::alice : PlayMode::normal, block);
    }
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    const std::size_t bn = static_cast<std::size_t>(inner_->n());
    for (int b = 0; b < blocks_; ++b) {
      auto block = outcome.subspan(static_cast<std::size_t>(b) * bn, bn);
      if (!inner_->in_alice_outcomes(block)) {
        inner_->answer_into(block, offset + b * inner_->n(), out);
        return;
      }
    }
    for (int b = 0; b < blocks_; ++b) {
      inner_->answer_into(outcome.subspan(static_cast<std::size_t>(b) * bn, bn),
                          offset + b * inner_->n(), out);
    }
  }

  bool has_enumerator() const override { return inner_->has_enumerator(); }

  // Merlin's block ranges over the inner normal-mode outcomes, every other
  // block over the inner Alice-mode outcomes. Inner outcomes are merged by
  // their bits first.
  std::uint64_t enumerate(const OutcomeVisitor& visit) const override {
    std::vector<ReachableOutcome> normal, alice;
    std::map<std::vector<Bit>, std::size_t> normal_index, alice_index;
    inner_->enumerate([&](const ReachableOutcome& r) {
      if (r.mode == PlayMode::normal) {
        auto [it, inserted] = normal_index.try_emplace(r.bits, normal.size());
        if (inserted) {
          normal.push_back(r);
        } else {
          auto& ps = normal[it->second].merlin_positions;
          ps.insert(ps.end(), r.merlin_positions.begin(), r.merlin_positions.end());
          std::sort(ps.begin(), ps.end());
          ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        }
      } else if (alice_index.try_emplace(r.bits, alice.size()).second) {
        alice.push_back(r);
      }
      return true;
    });

    const std::size_t bn = static_cast<std::size_t>(inner_->n());
    ReachableOutcome cur;
    cur.bits.assign(bn * static_cast<std::size_t>(blocks_), 0);
    cur.mode = PlayMode::normal;
    auto write = [&](int block, const std::vector<Bit>& bits) {
      std::copy(bits.begin(), bits.end(), cur.bits.begin() + static_cast<std::ptrdiff_t>(block * bn));
    };
    const std::size_t others = static_cast<std::size_t>(blocks_ - 1);
    if (others > 0 && alice.empty()) return 0;

    std::uint64_t count = 0;
    std::vector<int> other_blocks;
    std::vector<std::size_t> digit(others);
    for (int merlin_block = 0; merlin_block < blocks_; ++merlin_block) {
      other_blocks.clear();
      for (int b = 0; b < blocks_; ++b) {
        if (b != merlin_block) other_blocks.push_back(b);
      }
      for (const auto& nr : normal) {
        write(merlin_block, nr.bits);
        cur.merlin_positions.clear();
        for (Position p : nr.merlin_positions) {
          cur.merlin_positions.push_back(p + merlin_block * static_cast<Position>(bn));
        }
        std::fill(digit.begin(), digit.end(), 0);
        for (int b : other_blocks) write(b, alice[0].bits);
        while (true) {
          ++count;
          if (!visit(cur)) return count;
          std::size_t t = 0;
          for (; t < others; ++t) {
            if (++digit[t] < alice.size()) {
              write(other_blocks[t], alice[digit[t]].bits);
              break;
            }
            digit[t] = 0;
            write(other_blocks[t], alice[0].bits);
          }
          if (t == others) break;
        }
      }
    }
    return count;
  }

 private:
  StrategyPtr inner_;
  int blocks_;
};

// ---------------------------------------------------------------------------

class PaddedStrategy final : public Strategy {
 public:
  PaddedStrategy(StrategyPtr inner, int m)
      : Strategy({m, inner->k(), inner->k_alice()},
                 "pad(" + inner->description() + "," + std::to_string(m) + ")"),
        inner_(std::move(inner)) {
    for (Position p = m; p < inner_->n(); ++p) simulated_.push_back(p);
    simulated_values_.assign(static_cast<std::size_t>(inner_->n()), 0);
    inner_->assign(simulated_, PlayMode::normal, simulated_values_);
  }

  void assign(std::span<const Position> requests, PlayMode mode,
              std::span<Bit> values) const override {
    std::vector<Position> full(simulated_);
    full.insert(full.end(), requests.begin(), requests.end());
    std::vector<Bit> buffer(simulated_values_);
    inner_->assign(full, mode, buffer);
    for (Position r : requests) values[static_cast<std::size_t>(r)] = buffer[static_cast<std::size_t>(r)];
  }

  void answer_into(std::span<const Bit> outcome, Position offset, PositionSet& out) const override {
    std::vector<Bit> extended = extend(outcome);
    PositionSet inner_answer;
    inner_->answer_into(extended, 0, inner_answer);
    for (Position p : inner_answer) {
      if (p < n()) out.push_back(p + offset);
    }
  }

  bool in_alice_outcomes(std::span<const Bit> outcome) const override {
    return inner_->supports_alice_mode() && inner_->in_alice_outcomes(extend(outcome));
  }

 private:
  std::vector<Bit> extend(std::span<const Bit> outcome) const {
    std::vector<Bit> extended(simulated_values_);
    std::copy(outcome.begin(), outcome.end(), extended.begin());
    return extended;
  }

  StrategyPtr inner_;
  std::vector<Position> simulated_;
  std::vector<Bit> simulated_values_;
};

}  // namespace

// ---------------------------------------------------------------------------

CodewordFamily::CodewordFamily(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  if (n_ < 2 || n_ > kMaxTableLength) {
    throw InputError("codeword family length must be in 2.." + std::to_string(kMaxTableLength));
  }
  if (words_.size() != static_cast<std::size_t>(n_)) {
    throw InputError("codeword family needs exactly n words");
  }
  for (Word w : words_) {
    if (w >> n_) throw InputError("codeword wider than n");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = i + 1; j < words_.size(); ++j) {
      if (hamming_distance(words_[i], words_[j]) < 3) {
        throw InputError("codewords w" + std::to_string(i + 1) + " and w" + std::to_string(j + 1) +
                         " are closer than distance 3");
      }
    }
  }
}

CodewordFamily CodewordFamily::six_word_family() {
  return CodewordFamily(6, {
                               0b000000,
                               0b100110,
                               0b010101,
                               0b001011,
                               0b111000,
                               0b111111,
                           });
}

StrategyPtr trivial_strategy(int n) {
  if (n < 1) throw InputError("trivial strategy needs n >= 1");
  return std::make_shared<TrivialStrategy>(n);
}

StrategyPtr block_square_strategy(int k) {
  if (k < 1) throw InputError("block strategy needs k >= 1");
  return std::make_shared<AliceModeComposed>(trivial_strategy(k), k,
                                             "blocksq(" + std::to_string(k) + ")");
}

StrategyPtr code_family_strategy(const CodewordFamily& family, std::string description) {
  return std::make_shared<CodeFamilyStrategy>(family, std::move(description));
}

StrategyPtr code6_strategy() {
  return code_family_strategy(CodewordFamily::six_word_family(), "code6");
}

StrategyPtr product_compose(StrategyPtr p, StrategyPtr q) {
  if (!p || !q) throw InputError("product needs two strategies");
  return std::make_shared<ProductStrategy>(std::move(p), std::move(q));
}

StrategyPtr alice_mode_compose(StrategyPtr p) {
  if (!p) throw InputError("alice-mode composition needs a strategy");
  if (!p->supports_alice_mode()) {
    throw UnsupportedOperation(p->description() + " has no Alice-mode; cannot compose");
  }
  const int blocks = p->k() / *p->k_alice();
  if (blocks < 1) throw InputError("alice-mode composition needs k >= k_A");
  std::string description = "amc(" + p->description() + ")";
  return std::make_shared<AliceModeComposed>(std::move(p), blocks, std::move(description));
}

StrategyPtr pad_strategy(StrategyPtr p, int m) {
  if (!p) throw InputError("pad needs a strategy");
  if (m < 1 || m >= p->n()) {
    throw InputError("pad needs 1 <= m < n (m = " + std::to_string(m) +
                     ", n = " + std::to_string(p->n()) + ")");
  }
  return std::make_shared<PaddedStrategy>(std::move(p), m);
}

StrategyPtr tau_strategy(const BinaryCode& code, const TauMap& tau, bool flip_final,
                         std::string code_name) {
  if (code.length() > kMaxTableLength) {
    throw InputError("tau strategy limited to length " + std::to_string(kMaxTableLength));
  }
  if (!code.min_distance() || *code.min_distance() < 3) {
    throw InputError("tau strategy needs a code with minimum distance >= 3");
  }
  if (tau.length() != code.length()) throw InputError("tau and code lengths differ");
  if (tau.m() >= code.length()) throw InputError("tau strategy needs m < n");
  const auto expected = subsets_colex(code.length(), tau.m()).size();
  if (tau.entries().size() != expected) {
    throw InputError("tau must be defined on all " + std::to_string(expected) + " subsets");
  }
  for (const auto& e : tau.entries()) {
    if (!code.contains(e.word)) throw InputError("tau maps to a word outside the code");
  }
  std::string description = "tau(" + code_name + "," + std::to_string(tau.m()) +
                            (flip_final ? ")" : ",--no-flip)");
  return std::make_shared<TauStrategy>(code, tau, flip_final, std::move(description));
}

}  // namespace gks

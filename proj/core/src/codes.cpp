#include "gks/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "gks/errors.hpp"
#include "random.hpp"

namespace gks {

std::string format_word(Word word, int length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i) {
    if (word_bit(word, length, i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Word parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word");
  if (text.size() > static_cast<std::size_t>(kMaxCodeLength)) {
    throw ParseError("word longer than " + std::to_string(kMaxCodeLength) + " bits");
  }
  Word w = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("word must be over {0,1}: '" + std::string(text) + "'");
    w = (w << 1) | static_cast<Word>(c - '0');
  }
  return w;
}

int hamming_distance(Word a, Word b) { return std::popcount(a ^ b); }

namespace {

std::optional<int> pairwise_minimum(const std::vector<Word>& words) {
  if (words.size() < 2) return std::nullopt;
  int best = 64;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, hamming_distance(words[i], words[j]));
    }
  }
  return best;
}

}  // namespace

BinaryCode::BinaryCode(int length, std::vector<Word> words)
    : length_(length), words_(std::move(words)) {
  if (length_ < 1 || length_ > kMaxCodeLength) {
    throw InputError("code length must be in 1.." + std::to_string(kMaxCodeLength));
  }
  const Word limit = Word{1} << length_;
  for (Word w : words_) {
    if (w >= limit) throw InputError("word wider than code length " + std::to_string(length_));
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw InputError("duplicate codeword");
  }
  min_distance_ = pairwise_minimum(words_);
}

bool BinaryCode::contains(Word w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

int min_distance(const BinaryCode& code) {
  if (!code.min_distance()) throw InputError("minimum distance needs at least 2 words");
  return *code.min_distance();
}

BinaryCode hamming_code(int r) {
  if (r < 2) throw InputError("Hamming code needs r >= 2");
  if (r > 4) throw InputError("Hamming code limited to r <= 4 (2048 words)");
  const int length = (1 << r) - 1;
  std::vector<Word> words;
  for (Word x = 0; x < (Word{1} << length); ++x) {
    unsigned syndrome = 0;
    for (int pos = 0; pos < length; ++pos) {
      if (word_bit(x, length, pos)) syndrome ^= static_cast<unsigned>(pos + 1);
    }
    if (syndrome == 0) words.push_back(x);
  }
  return BinaryCode(length, std::move(words));
}

BinaryCode nonlinear_9_40_code() {
  return BinaryCode(9, {
      0b000000011, 0b000001101, 0b000011000, 0b000100000, 0b000110111, 0b001001110, 0b001010100,
      0b001011011, 0b001100101, 0b001110010, 0b010010010, 0b010010101, 0b010100110, 0b010101001,
      0b010111100, 0b011000000, 0b011000111, 0b011101010, 0b011110001, 0b011111111, 0b100000100,
      0b100010001, 0b100011110, 0b100101010, 0b100111101, 0b101000010, 0b101001001, 0b101010111,
      0b101101111, 0b101111000, 0b110001000, 0b110001111, 0b110100101, 0b110110000, 0b110111011,
      0b111011010, 0b111011101, 0b111100011, 0b111101100, 0b111110110,
  });
}

BinaryCode puncture(const BinaryCode& code, int position) {
  const int n = code.length();
  if (position < 0 || position >= n) {
    throw InputError("puncture position " + std::to_string(position + 1) + " outside 1.." +
                     std::to_string(n));
  }
  if (n == 1) throw InputError("cannot puncture a length-1 code");
  const int shift = n - 1 - position;  // bit index of the deleted coordinate
  std::vector<Word> out;
  out.reserve(code.size());
  for (Word w : code.words()) {
    Word high = (w >> (shift + 1)) << shift;
    Word low = w & ((Word{1} << shift) - 1);
    out.push_back(high | low);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return BinaryCode(n - 1, std::move(out));
}

std::optional<Word> decode_radius_one(const BinaryCode& code, Word received) {
  if (code.contains(received)) return received;
  for (int pos = 0; pos < code.length(); ++pos) {
    Word w = received ^ position_mask(code.length(), pos);
    if (code.contains(w)) return w;
  }
  return std::nullopt;
}

BinaryCode greedy_code_search(int length, int distance, std::uint64_t seed, int attempts) {
  if (length < 1 || length > 20) throw InputError("greedy search limited to length 1..20");
  if (distance < 1) throw InputError("distance must be >= 1");
  if (attempts < 1) throw InputError("attempts must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Word> space(std::size_t{1} << length);
  std::vector<Word> best;
  for (int a = 0; a < attempts; ++a) {
    std::iota(space.begin(), space.end(), Word{0});
    detail::shuffle(space, rng);
    std::vector<Word> taken;
    for (Word w : space) {
      bool far = std::all_of(taken.begin(), taken.end(),
                             [&](Word t) { return hamming_distance(t, w) >= distance; });
      if (far) taken.push_back(w);
    }
    if (taken.size() > best.size()) best = std::move(taken);
  }
  return BinaryCode(length, std::move(best));
}

BinaryCode parse_code(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int length = 0;
  std::vector<Word> words;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string_view token(line.data() + first, last - first + 1);
    if (token.front() == '#') continue;
    Word w;
    try {
      w = parse_word(token);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    const int len = static_cast<int>(token.size());
    if (length == 0) {
      length = len;
    } else if (len != length) {
      throw ParseError("word length " + std::to_string(len) + " differs from " +
                           std::to_string(length),
                       line_no);
    }
    auto it = std::find(words.begin(), words.end(), w);
    if (it != words.end()) {
      throw ParseError("duplicate word (first seen on line " +
                           std::to_string(lines[static_cast<std::size_t>(it - words.begin())]) + ")",
                       line_no);
    }
    words.push_back(w);
    lines.push_back(line_no);
  }
  if (words.empty()) throw ParseError("code file has no words");
  return BinaryCode(length, std::move(words));
}

BinaryCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open code file " + path.string());
  return parse_code(in);
}

std::string format_code(const BinaryCode& code, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string l;
    while (std::getline(lines, l)) os << "# " << l << '\n';
  }
  for (Word w : code.words()) os << format_word(w, code.length()) << '\n';
  return os.str();
}

void save_code(const BinaryCode& code, const std::filesystem::path& path,
               std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write code file " + path.string());
  out << format_code(code, comment);
}

}  // namespace gks

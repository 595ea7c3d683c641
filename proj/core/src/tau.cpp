#include "gks/tau.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <sstream>

#include "gks/errors.hpp"

namespace gks {

namespace {

bool covers(Word word, SubsetMask subset) { return (word & subset) == subset; }

}  // namespace

TauMap::TauMap(int length, int m, std::vector<TauEntry> entries)
    : length_(length), m_(m), entries_(std::move(entries)) {
  if (length_ < 1 || length_ > kMaxCodeLength) throw InputError("tau: bad length");
  if (m_ < 1 || m_ > length_) throw InputError("tau: subset size must be in 1..length");
  const Word limit = Word{1} << length_;
  for (const auto& e : entries_) {
    if (e.subset >= limit || e.word >= limit) throw InputError("tau: entry wider than length");
    if (std::popcount(e.subset) != m_) throw InputError("tau: subset size differs from m");
    if (!covers(e.word, e.subset)) {
      throw InputError("tau: word " + format_word(e.word, length_) + " is not all-ones on its subset");
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const TauEntry& a, const TauEntry& b) { return a.subset < b.subset; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].subset == entries_[i - 1].subset) throw InputError("tau: subset mapped twice");
  }
  by_word_ = entries_;
  std::sort(by_word_.begin(), by_word_.end(),
            [](const TauEntry& a, const TauEntry& b) { return a.word < b.word; });
  for (std::size_t i = 1; i < by_word_.size(); ++i) {
    if (by_word_[i].word == by_word_[i - 1].word) throw InputError("tau: map is not injective");
  }
}

std::optional<Word> TauMap::image(SubsetMask subset) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), subset,
                             [](const TauEntry& e, SubsetMask s) { return e.subset < s; });
  if (it == entries_.end() || it->subset != subset) return std::nullopt;
  return it->word;
}

std::optional<SubsetMask> TauMap::preimage(Word word) const {
  auto it = std::lower_bound(by_word_.begin(), by_word_.end(), word,
                             [](const TauEntry& e, Word w) { return e.word < w; });
  if (it == by_word_.end() || it->word != word) return std::nullopt;
  return it->subset;
}

bool tau_is_valid(const TauMap& tau) {
  const auto& es = tau.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!covers(es[i].word, es[i].subset)) return false;
    if (std::popcount(es[i].subset) != tau.m()) return false;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].word == es[j].word || es[i].subset == es[j].subset) return false;
    }
  }
  return true;
}

std::vector<SubsetMask> subsets_colex(int length, int m) {
  if (m < 1 || m > length || length > kMaxCodeLength) throw InputError("subsets: bad m or length");
  // Gosper's hack over masks where bit p is position p; increasing masks are
  // colex order. Then re-encode with position 1 most significant.
  std::vector<SubsetMask> out;
  const Word end = Word{1} << length;
  for (Word x = (Word{1} << m) - 1; x < end;) {
    SubsetMask s = 0;
    for (int p = 0; p < length; ++p) {
      if ((x >> p) & 1u) s |= position_mask(length, p);
    }
    out.push_back(s);
    if (out.size() > kMaxMatchingSide) throw InputError("too many subsets to enumerate");
    Word c = x & (~x + 1);
    Word r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

std::vector<int> subset_positions(SubsetMask subset, int length) {
  std::vector<int> out;
  for (int p = 0; p < length; ++p) {
    if (word_bit(subset, length, p)) out.push_back(p);
  }
  return out;
}

SubsetMask subset_from_positions(const std::vector<int>& positions, int length) {
  SubsetMask s = 0;
  for (int p : positions) {
    if (p < 0 || p >= length) throw InputError("subset position out of range");
    s |= position_mask(length, p);
  }
  return s;
}

namespace {

// Hopcroft-Karp over an explicit adjacency list.
class BipartiteMatcher {
 public:
  static constexpr int kFree = -1;

  BipartiteMatcher(std::size_t right_count, std::vector<std::vector<int>> adjacency)
      : adj_(std::move(adjacency)),
        match_left_(adj_.size(), kFree),
        match_right_(right_count, kFree),
        layer_(adj_.size()) {}

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && dfs(static_cast<int>(u))) ++size;
      }
    }
    return size;
  }

  // Plain augmenting-path search from every free left vertex.
  bool has_augmenting_path() const {
    std::vector<char> seen(match_right_.size(), 0);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree && augment_exists(static_cast<int>(u), seen)) return true;
    }
    return false;
  }

  // Left and right vertices reachable by alternating paths from free left
  // vertices (Konig's construction).
  std::pair<std::vector<int>, std::vector<int>> alternating_reach() const {
    std::vector<char> left_seen(adj_.size(), 0), right_seen(match_right_.size(), 0);
    std::queue<int> q;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        left_seen[u] = 1;
        q.push(static_cast<int>(u));
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (right_seen[static_cast<std::size_t>(v)]) continue;
        right_seen[static_cast<std::size_t>(v)] = 1;
        int w = match_right_[static_cast<std::size_t>(v)];
        if (w != kFree && !left_seen[static_cast<std::size_t>(w)]) {
          left_seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    std::vector<int> left, right;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (left_seen[u]) left.push_back(static_cast<int>(u));
    }
    for (std::size_t v = 0; v < match_right_.size(); ++v) {
      if (right_seen[v]) right.push_back(static_cast<int>(v));
    }
    return {left, right};
  }

  const std::vector<int>& match_left() const { return match_left_; }

 private:
  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        layer_[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        layer_[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        int w = match_right_[static_cast<std::size_t>(v)];
        if (w == kFree) {
          found = true;
        } else if (layer_[static_cast<std::size_t>(w)] == kInf) {
          layer_[static_cast<std::size_t>(w)] = layer_[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      int w = match_right_[static_cast<std::size_t>(v)];
      if (w == kFree ||
          (layer_[static_cast<std::size_t>(w)] == layer_[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        match_left_[static_cast<std::size_t>(u)] = v;
        match_right_[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    layer_[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  bool augment_exists(int u, std::vector<char>& seen) const {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      int w = match_right_[static_cast<std::size_t>(v)];
      if (w == kFree || augment_exists(w, seen)) return true;
    }
    return false;
  }

  static constexpr int kInf = std::numeric_limits<int>::max();

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
};

}  // namespace

TauMatchingResult tau_matching(const BinaryCode& code, int m) {
  const int length = code.length();
  if (m < 1 || m > length) throw InputError("tau matching needs 1 <= m <= code length");
  if (code.size() > kMaxMatchingSide) throw InputError("too many codewords for tau matching");
  const auto subsets = subsets_colex(length, m);
  const auto& words = code.words();

  std::vector<std::vector<int>> adjacency(subsets.size());
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    for (std::size_t v = 0; v < words.size(); ++v) {
      if (covers(words[v], subsets[u])) adjacency[u].push_back(static_cast<int>(v));
    }
  }

  BipartiteMatcher matcher(words.size(), std::move(adjacency));
  TauMatchingResult result;
  result.left_vertices = subsets.size();
  result.right_vertices = words.size();
  result.matching_size = matcher.run();
  result.maximality_confirmed = !matcher.has_augmenting_path();

  if (result.matching_size == subsets.size()) {
    std::vector<TauEntry> entries;
    entries.reserve(subsets.size());
    for (std::size_t u = 0; u < subsets.size(); ++u) {
      entries.push_back({subsets[u], words[static_cast<std::size_t>(matcher.match_left()[u])]});
    }
    result.tau = TauMap(length, m, std::move(entries));
  } else {
    auto [left, right] = matcher.alternating_reach();
    for (int u : left) result.hall_witness.push_back(subsets[static_cast<std::size_t>(u)]);
    result.witness_neighbourhood = right.size();
  }
  return result;
}

std::string format_tau(const TauMap& tau) {
  std::ostringstream os;
  for (const auto& e : tau.entries()) {
    auto ps = subset_positions(e.subset, tau.length());
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << (ps[i] + 1);
    os << " -> " << format_word(e.word, tau.length()) << '\n';
  }
  return os.str();
}

TauMap parse_tau(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int length = 0, m = 0;
  std::vector<TauEntry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'i1,...,im -> word'", line_no);
    std::string lhs = line.substr(0, arrow), rhs = line.substr(arrow + 2);
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    rhs = trim(rhs);
    Word word;
    try {
      word = parse_word(rhs);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    const int len = static_cast<int>(rhs.size());
    if (length == 0) length = len;
    if (len != length) throw ParseError("word length differs from earlier lines", line_no);
    std::vector<int> positions;
    std::istringstream ls(lhs);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      tok = trim(tok);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad position '" + tok + "'", line_no);
      }
      int p = std::stoi(tok);
      if (p < 1 || p > length) throw ParseError("position " + tok + " out of range", line_no);
      positions.push_back(p - 1);
    }
    if (m == 0) m = static_cast<int>(positions.size());
    if (static_cast<int>(positions.size()) != m) throw ParseError("subset size differs", line_no);
    SubsetMask s = subset_from_positions(positions, length);
    if (std::popcount(s) != m) throw ParseError("repeated position in subset", line_no);
    entries.push_back({s, word});
  }
  if (entries.empty()) throw ParseError("tau file has no entries");
  try {
    return TauMap(length, m, std::move(entries));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace gks

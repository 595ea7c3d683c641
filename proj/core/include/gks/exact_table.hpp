#pragma once

// Exact k(n) where the machinery pins it down, an interval elsewhere.

#include <optional>
#include <string>
#include <vector>

#include "gks/strategy_spec.hpp"
#include "gks/upper_bound.hpp"

namespace gks {

/// Dimensions settled by the minimal subgraph search alone.
inline constexpr int kMaxSearchedN = 4;

struct MinK {
  int n = 0;
  int lower = 0;
  int upper = 0;
  /// How each bound was obtained.
  std::string lower_provenance;
  std::string upper_provenance;
  /// Construction achieving `upper`, when it comes from the table.
  SpecPtr upper_derivation;

  bool exact() const noexcept { return lower == upper; }
};

/// Rows for n = 1..n_max. Bounds:
///  - n <= 4: smallest k with a winning subgraph of maximum degree <= k
///    (minimal subgraph search), matched by the table;
///  - n = 5: the no-(2,5) certificate;
///  - n > 5: k(n) >= k(5), since a (k,n) strategy pads to (k,5).
/// Upper bounds come from `table`, which must cover n_max.
std::vector<MinK> min_k_rows(int n_max, const UpperBoundTable& table);

MinK min_k(int n);

}  // namespace gks

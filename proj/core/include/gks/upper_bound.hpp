#pragma once

// Best known k for every n up to a bound, from the verified base
// constructions closed under product, Alice-mode composition and padding.

#include <optional>
#include <vector>

#include "gks/strategy_spec.hpp"

namespace gks {

struct UpperBoundEntry {
  int n = 0;
  int k = 0;
  SpecPtr derivation;
};

struct UpperBoundOptions {
  /// Extra Alice-mode seeds, e.g. verified tau(...) specs. Each needs k_A.
  std::vector<SpecPtr> alice_mode_seeds;
};

class UpperBoundTable {
 public:
  explicit UpperBoundTable(std::vector<UpperBoundEntry> entries);

  int n_max() const noexcept { return static_cast<int>(entries_.size()); }
  /// Entry for 1 <= n <= n_max.
  const UpperBoundEntry& at(int n) const;
  int k(int n) const { return at(n).k; }
  const std::vector<UpperBoundEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<UpperBoundEntry> entries_;
};

/// Ties on k go to the shallower derivation. Products are capped at n_max;
/// seeds above it enter padded. Throws InputError for n_max < 1.
UpperBoundTable upper_bound_table(int n_max, const UpperBoundOptions& options = {});

/// 5 * n^(log_30 5).
double power_law_bound(int n);

}  // namespace gks

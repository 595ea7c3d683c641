#include "gks/exact_table.hpp"

#include "gks/certificate.hpp"
#include "gks/errors.hpp"
#include "gks/minimal_search.hpp"

namespace gks {

namespace {

// Smallest k admitting a winning subgraph of Q_n with maximum degree <= k.
int searched_min_k(int n) {
  for (int k = 1;; ++k) {
    if (!minimal_winning_subgraphs(n, k).empty()) return k;
  }
}

}  // namespace

std::vector<MinK> min_k_rows(int n_max, const UpperBoundTable& table) {
  if (n_max < 1) throw InputError("n_max must be >= 1");
  if (table.n_max() < n_max) throw InputError("upper-bound table too short");
  std::vector<MinK> rows;
  int carried = 1;  // best lower bound so far; lower bounds carry upward
  std::string carried_from = "trivial";
  for (int n = 1; n <= n_max; ++n) {
    MinK row;
    row.n = n;
    row.upper = table.k(n);
    row.upper_derivation = table.at(n).derivation;
    row.upper_provenance = row.upper_derivation->to_string();
    if (n <= kMaxSearchedN) {
      const int k = searched_min_k(n);
      row.lower = k;
      row.lower_provenance = "minimal subgraph search: no winning subgraph with max degree " +
                             std::to_string(k - 1);
      if (k < row.upper) {
        row.upper = k;
        row.upper_derivation = nullptr;
        row.upper_provenance = "minimal subgraph search";
      }
    } else if (n == 5) {
      const auto check = validate_certificate(no_2_5_certificate(), false);
      row.lower = check.accepted ? 3 : carried;
      row.lower_provenance = check.accepted ? "no-(2,5) certificate" : carried_from;
    } else {
      row.lower = carried;
      row.lower_provenance = "k(n) >= k(5) by padding; " + carried_from;
    }
    if (row.lower > carried) {
      carried = row.lower;
      carried_from = row.lower_provenance;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MinK min_k(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  return min_k_rows(n, upper_bound_table(n)).back();
}

}  // namespace gks

#pragma once

// Machine-checked record that no (2,5) strategy exists.
//
// Every minimal winning subgraph of Q_4 with maximum degree <= 2 is an
// 8-cycle using all four directions. A (2,5) subgraph would need, for each
// of the 5 directions i, such a cycle inside a facet x_i = b_i. Cycles from
// facets of different directions cannot share a vertex in a degree-2 graph,
// so they need 5 * 8 = 40 vertices, more than the 32 of Q_5.

#include <iosfwd>
#include <string>
#include <vector>

#include "gks/hypercube.hpp"

namespace gks {

struct CountingLine {
  int cycles = 5;
  int vertices_per_cycle = 8;
  int cube_vertices = 32;

  bool holds() const { return cycles * vertices_per_cycle > cube_vertices; }
  /// "5*8 = 40 > 32"
  std::string to_string() const;
};

struct No25Certificate {
  std::vector<HypercubeSubgraph> minimal_2_4_classes;
  bool all_are_8_cycles = false;
  bool all_span_4_directions = false;
  CountingLine counting;
};

struct CertificateCheck {
  bool accepted = false;
  std::vector<std::string> problems;
};

/// Runs the (4,2) minimal search and fills in the record.
No25Certificate no_2_5_certificate();

/// Re-derives every claim from the listed classes: exactly one class, each a
/// minimal winning degree-2 subgraph whose single component is an 8-cycle
/// over all four directions, flags matching the recomputation and a true
/// counting line. With `recompute_search` the class list must also equal a
/// fresh minimal_winning_subgraphs(4, 2).
CertificateCheck validate_certificate(const No25Certificate& cert, bool recompute_search = true);

/// Human-readable report followed by a "[machine]" section.
std::string format_certificate(const No25Certificate& cert);
/// Reads the "[machine]" section. Throws ParseError.
No25Certificate parse_certificate(std::istream& in);

}  // namespace gks

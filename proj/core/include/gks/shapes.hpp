#pragma once

// Direction sequences of path and cycle components.

#include <string>
#include <string_view>
#include <vector>

#include "gks/hypercube.hpp"

namespace gks {

enum class ShapeKind { path, cycle };

class Shape {
 public:
  /// 0-based directions. Throws InputError on an immediate repeat (for a
  /// cycle, also across the wraparound) or an empty sequence.
  Shape(std::vector<int> directions, ShapeKind kind);

  /// "3123": 1-based digits 1..9.
  static Shape parse(std::string_view digits, ShapeKind kind);

  const std::vector<int>& directions() const noexcept { return directions_; }
  ShapeKind kind() const noexcept { return kind_; }
  std::size_t length() const noexcept { return directions_.size(); }
  /// 1-based digits; directions past 9 are comma-separated.
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> directions_;
  ShapeKind kind_;
};

std::string_view to_string(ShapeKind kind);

/// One shape per component, paths before cycles, each group ordered by its
/// first vertex. Throws InputError when max_degree(g) > 2.
std::vector<Shape> component_shapes(const HypercubeSubgraph& g);

/// Least sequence, over reversal (and rotation for cycles), after relabeling
/// directions by first occurrence.
std::vector<int> canonical_shape_key(const Shape& s);

/// Equal up to direction relabeling, reversal and, for cycles, rotation.
/// A path never matches a cycle.
bool shape_equivalent(const Shape& a, const Shape& b);

/// Some window a,b,a with a != b; windows wrap around on cycles.
bool contains_forbidden_pattern(const Shape& s);

}  // namespace gks

#include "gks/shapes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gks/errors.hpp"

namespace gks {

Shape::Shape(std::vector<int> directions, ShapeKind kind) : directions_(std::move(directions)), kind_(kind) {
  if (directions_.empty()) throw InputError("empty shape");
  for (std::size_t i = 1; i < directions_.size(); ++i) {
    if (directions_[i] == directions_[i - 1]) throw InputError("shape repeats a direction immediately");
  }
  if (kind_ == ShapeKind::cycle && directions_.size() > 1 && directions_.front() == directions_.back()) {
    throw InputError("cycle shape repeats a direction across the wraparound");
  }
}

Shape Shape::parse(std::string_view digits, ShapeKind kind) {
  std::vector<int> dirs;
  for (char c : digits) {
    if (c < '1' || c > '9') throw ParseError("shape digits must be 1..9");
    dirs.push_back(c - '1');
  }
  return Shape(std::move(dirs), kind);
}

std::string Shape::to_string() const {
  const bool wide = std::any_of(directions_.begin(), directions_.end(), [](int d) { return d >= 9; });
  std::string s;
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    if (wide && i > 0) s += ',';
    s += std::to_string(directions_[i] + 1);
  }
  return s;
}

std::string_view to_string(ShapeKind kind) { return kind == ShapeKind::path ? "path" : "cycle"; }

namespace {

std::vector<int> relabel(const std::vector<int>& seq) {
  std::map<int, int> label;
  std::vector<int> out;
  out.reserve(seq.size());
  for (int d : seq) {
    auto [it, inserted] = label.try_emplace(d, static_cast<int>(label.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

std::vector<Shape> component_shapes(const HypercubeSubgraph& g) {
  if (max_degree(g) > 2) throw InputError("component shapes need maximum degree <= 2");
  const int n = g.n();
  auto other_end = [](const Edge& e, Vertex v) { return v ^ (Vertex{1} << e.direction); };
  auto incident = [&](Vertex v) {
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i) {
      if (g.has_edge(v, i)) out.push_back(make_edge(v, i));
    }
    return out;
  };

  std::set<Edge> used;
  auto walk = [&](Vertex start, Edge first) {
    std::vector<int> dirs;
    Vertex v = start;
    Edge e = first;
    while (!used.contains(e)) {
      used.insert(e);
      dirs.push_back(e.direction);
      v = other_end(e, v);
      auto next = incident(v);
      auto it = std::find_if(next.begin(), next.end(), [&](const Edge& f) { return f != e; });
      if (it == next.end()) break;
      e = *it;
    }
    return dirs;
  };

  std::vector<Shape> shapes;
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
    auto inc = incident(v);
    if (inc.size() == 1 && !used.contains(inc[0])) shapes.emplace_back(walk(v, inc[0]), ShapeKind::path);
  }
  for (const Edge& e : g.edges()) {
    if (!used.contains(e)) shapes.emplace_back(walk(e.lower, e), ShapeKind::cycle);
  }
  return shapes;
}

std::vector<int> canonical_shape_key(const Shape& s) {
  std::vector<int> seq = s.directions();
  std::vector<std::vector<int>> candidates;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t rotations = s.kind() == ShapeKind::cycle ? seq.size() : 1;
    std::vector<int> r = seq;
    for (std::size_t i = 0; i < rotations; ++i) {
      candidates.push_back(relabel(r));
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    std::reverse(seq.begin(), seq.end());
  }
  return *std::min_element(candidates.begin(), candidates.end());
}

bool shape_equivalent(const Shape& a, const Shape& b) {
  return a.kind() == b.kind() && a.length() == b.length() && canonical_shape_key(a) == canonical_shape_key(b);
}

bool contains_forbidden_pattern(const Shape& s) {
  const auto& d = s.directions();
  const std::size_t len = d.size();
  if (len < 3) return false;
  const std::size_t windows = s.kind() == ShapeKind::cycle ? len : len - 2;
  for (std::size_t i = 0; i < windows; ++i) {
    const int a = d[i], b = d[(i + 1) % len], c = d[(i + 2) % len];
    if (a == c && a != b) return true;
  }
  return false;
}

}  // namespace gks

#include "gks/certificate.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "gks/errors.hpp"
#include "gks/minimal_search.hpp"
#include "gks/shapes.hpp"
#include "gks/solver.hpp"

namespace gks {

std::string CountingLine::to_string() const {
  return std::to_string(cycles) + "*" + std::to_string(vertices_per_cycle) + " = " +
         std::to_string(cycles * vertices_per_cycle) + (holds() ? " > " : " <= ") + std::to_string(cube_vertices);
}

namespace {

bool is_8_cycle(const HypercubeSubgraph& g) {
  if (max_degree(g) > 2) return false;
  auto shapes = component_shapes(g);
  return shapes.size() == 1 && shapes[0].kind() == ShapeKind::cycle && shapes[0].length() == 8;
}

bool spans_4_directions(const HypercubeSubgraph& g) {
  std::set<int> dirs;
  for (const Edge& e : g.edges()) dirs.insert(e.direction);
  return dirs.size() == 4;
}

template <class Pred>
bool all_of_classes(const std::vector<HypercubeSubgraph>& classes, Pred pred) {
  for (const auto& c : classes) {
    if (!pred(c)) return false;
  }
  return !classes.empty();
}

}  // namespace

No25Certificate no_2_5_certificate() {
  No25Certificate cert;
  cert.minimal_2_4_classes = minimal_winning_subgraphs(4, 2);
  cert.all_are_8_cycles = all_of_classes(cert.minimal_2_4_classes, is_8_cycle);
  cert.all_span_4_directions = all_of_classes(cert.minimal_2_4_classes, spans_4_directions);
  return cert;
}

CertificateCheck validate_certificate(const No25Certificate& cert, bool recompute_search) {
  CertificateCheck check;
  auto problem = [&](std::string p) { check.problems.push_back(std::move(p)); };
  const auto& classes = cert.minimal_2_4_classes;

  if (classes.size() != 1) problem("expected exactly one minimal (2,4) class, got " + std::to_string(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const std::string tag = "class " + std::to_string(i + 1) + ": ";
    if (c.n() != 4) {
      problem(tag + "not a subgraph of Q_4");
      continue;
    }
    if (max_degree(c) > 2) problem(tag + "maximum degree above 2");
    if (!minimality_check(c)) problem(tag + "not a minimal winning subgraph");
  }
  const bool cycles = classes.size() > 0 && std::all_of(classes.begin(), classes.end(), [](const auto& c) {
                        return c.n() == 4 && is_8_cycle(c);
                      });
  const bool spans = classes.size() > 0 && std::all_of(classes.begin(), classes.end(), [](const auto& c) {
                       return c.n() == 4 && spans_4_directions(c);
                     });
  if (!cycles) problem("not every class is an 8-cycle");
  if (!spans) problem("not every class spans 4 directions");
  if (cert.all_are_8_cycles != cycles) problem("all_are_8_cycles flag disagrees with the classes");
  if (cert.all_span_4_directions != spans) problem("all_span_4_directions flag disagrees with the classes");

  const auto& line = cert.counting;
  if (line.cycles != 5 || line.cube_vertices != 32) problem("counting line must use 5 directions and 32 vertices");
  if (line.vertices_per_cycle != 8) problem("counting line must use 8 vertices per cycle");
  if (!line.holds()) problem("counting line is false: " + line.to_string());

  if (recompute_search && minimal_winning_subgraphs(4, 2) != classes) {
    problem("class list differs from a fresh minimal subgraph search");
  }
  check.accepted = check.problems.empty();
  return check;
}

std::string format_certificate(const No25Certificate& cert) {
  std::ostringstream os;
  os << "no-(2,5) certificate\n";
  os << "minimal (2,4) classes: " << cert.minimal_2_4_classes.size() << '\n';
  for (std::size_t i = 0; i < cert.minimal_2_4_classes.size(); ++i) {
    const auto& c = cert.minimal_2_4_classes[i];
    os << "  class " << i + 1 << ": " << format_star_edges(c);
    if (max_degree(c) <= 2) {
      for (const auto& s : component_shapes(c)) os << "  " << to_string(s.kind()) << ' ' << s.to_string();
    }
    os << '\n';
  }
  os << "all classes are 8-cycles: " << (cert.all_are_8_cycles ? "yes" : "no") << '\n';
  os << "all classes span 4 directions: " << (cert.all_span_4_directions ? "yes" : "no") << '\n';
  os << "each direction of Q_5 forces a disjoint 8-cycle in a facet: " << cert.counting.to_string() << '\n';
  os << "[machine]\n";
  for (const auto& c : cert.minimal_2_4_classes) os << "class=" << format_star_edges(c) << '\n';
  os << "all_are_8_cycles=" << (cert.all_are_8_cycles ? 1 : 0) << '\n';
  os << "all_span_4_directions=" << (cert.all_span_4_directions ? 1 : 0) << '\n';
  os << "cycles=" << cert.counting.cycles << '\n';
  os << "vertices_per_cycle=" << cert.counting.vertices_per_cycle << '\n';
  os << "cube_vertices=" << cert.counting.cube_vertices << '\n';
  return os.str();
}

No25Certificate parse_certificate(std::istream& in) {
  No25Certificate cert;
  std::string line;
  std::size_t line_no = 0;
  bool machine = false;
  std::set<std::string> seen;
  auto flag = [&](const std::string& v) {
    if (v != "0" && v != "1") throw ParseError("flag must be 0 or 1", line_no);
    return v == "1";
  };
  auto integer = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      int x = std::stoi(v, &used);
      if (used != v.size()) throw ParseError("bad integer '" + v + "'", line_no);
      return x;
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + v + "'", line_no);
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!machine) {
      machine = line == "[machine]";
      continue;
    }
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
    const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key != "class" && !seen.insert(key).second) throw ParseError("duplicate key " + key, line_no);
    if (key == "class") {
      try {
        cert.minimal_2_4_classes.push_back(parse_star_edges(value));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (key == "all_are_8_cycles") {
      cert.all_are_8_cycles = flag(value);
    } else if (key == "all_span_4_directions") {
      cert.all_span_4_directions = flag(value);
    } else if (key == "cycles") {
      cert.counting.cycles = integer(value);
    } else if (key == "vertices_per_cycle") {
      cert.counting.vertices_per_cycle = integer(value);
    } else if (key == "cube_vertices") {
      cert.counting.cube_vertices = integer(value);
    } else {
      throw ParseError("unknown key " + key, line_no);
    }
  }
  if (!machine) throw ParseError("no [machine] section");
  return cert;
}

}  // namespace gks

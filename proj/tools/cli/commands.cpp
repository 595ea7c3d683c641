#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gks/automorphism.hpp"
#include "gks/certificate.hpp"
#include "gks/codes.hpp"
#include "gks/equivalence.hpp"
#include "gks/errors.hpp"
#include "gks/exact_table.hpp"
#include "gks/minimal_search.hpp"
#include "gks/shapes.hpp"
#include "gks/solver.hpp"
#include "gks/strategy_spec.hpp"
#include "gks/tau.hpp"
#include "gks/upper_bound.hpp"
#include "gks/verify.hpp"

namespace gks::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

constexpr const char* kSpecGrammar =
    "Strategy specs:\n"
    "  trivial(n)          (n,1,n): Alice answers 0, Bob names the single 1\n"
    "  blocksq(k)          (k,k^2): amc(trivial(k))\n"
    "  code6               (5,1,6) six-word codeword family\n"
    "  prod(a,b)           (k*k', n*n') product of a (k,n) and a (k',n')\n"
    "  amc(a)              (b, floor(b/a)*n) from a (b,a,n) Alice-mode strategy\n"
    "  pad(a,m)            (k,m) from (k,n), m < n\n"
    "  tau(code,m)         (n-m,1,n) candidate from a tau map; add ,--no-flip for the\n"
    "                      variant whose Alice-mode array is tau(H) itself\n"
    "  code: hamming2..hamming4, code9x40, or a code file path\n";

// Shared flag storage; CLI11 binds into it.
struct Flags {
  std::string spec;
  std::string mode = "auto";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool json = false;
  bool csv = false;
  int n_max = 30;
  bool with_tau = false;
  std::vector<std::string> tau_specs;
  std::string edges;
  std::string edges_file;
  int n = 0;
  int k = 0;
  std::string check_file;
  std::string out_file;
  int r = 0;
  std::string code;
  int position = 0;
  int m = 0;
  int length = 0;
  int distance = 0;
  int attempts = 1;
};

class Command {
 public:
  explicit Command(const Flags& f) : f_(f) {}

  int verify();
  int table();
  int subgraph_solve();
  int subgraph_minimal();
  int subgraph_shapes();
  int subgraph_certify();
  int subgraph_to_strategy();
  int code_gen_hamming();
  int code_distance();
  int code_puncture();
  int code_tau_match();
  int code_search();

  std::ostringstream out;

 private:
  HypercubeSubgraph read_edges() const;
  void emit(const Json& doc) { out << doc.dump(2) << '\n'; }
  void write_file(const std::string& path, const std::string& text) const;

  const Flags& f_;
};

Json params_json(const StrategyParams& p) {
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["k_alice"] = p.k_alice ? Json(*p.k_alice) : Json(nullptr);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Command::write_file(const std::string& path, const std::string& text) const {
  std::ofstream o(path);
  if (!o) throw InputError("cannot write " + path);
  o << text;
}

HypercubeSubgraph Command::read_edges() const {
  if (!f_.edges.empty() && !f_.edges_file.empty()) throw InputError("give --edges or --file, not both");
  if (!f_.edges_file.empty()) return parse_star_edges(read_text_file(f_.edges_file));
  if (f_.edges.empty()) throw InputError("no subgraph given (--edges or --file)");
  return parse_star_edges(f_.edges);
}

// ---------------------------------------------------------------------------

int Command::verify() {
  auto spec = parse_strategy_spec(f_.spec);
  auto strategy = build_strategy(*spec);
  VerificationMode mode;
  if (f_.mode == "auto") {
    mode = strategy->n() <= kMaxExhaustiveN ? VerificationMode::exhaustive
           : strategy->has_enumerator()     ? VerificationMode::structured
                                            : VerificationMode::sampled;
  } else {
    mode = parse_verification_mode(f_.mode);
  }
  VerificationReport report;
  switch (mode) {
    case VerificationMode::exhaustive: report = verify_exhaustive(*strategy, {f_.workers}); break;
    case VerificationMode::structured: report = verify_structured(*strategy); break;
    case VerificationMode::sampled: report = verify_sampled(*strategy, {f_.samples, f_.seed}); break;
  }
  if (f_.json) {
    Json doc;
    doc["strategy"] = spec->to_string();
    doc["params"] = params_json(strategy->params());
    doc["report"] = Json::parse(to_json(report));
    emit(doc);
  } else {
    out << "strategy: " << spec->to_string() << '\n';
    out << "params: " << to_string(strategy->params()) << '\n';
    out << to_text(report);
  }
  return report.valid ? kOk : kNegative;
}

int Command::table() {
  if (f_.json && f_.csv) throw InputError("--json and --csv are exclusive");
  UpperBoundOptions options;
  std::vector<std::string> tau_specs = f_.tau_specs;
  if (f_.with_tau) {
    tau_specs.insert(tau_specs.begin(), {"tau(hamming4,4)", "tau(code9x40,2)"});
  }
  std::vector<std::string> notes;
  for (const auto& text : tau_specs) {
    auto spec = parse_strategy_spec(text);
    if (spec->kind() != StrategySpec::Kind::tau) throw InputError(text + " is not a tau(...) spec");
    try {
      auto strategy = build_strategy(*spec);
      auto report = verify_structured(*strategy);
      if (report.valid) {
        options.alice_mode_seeds.push_back(spec);
        notes.push_back(spec->to_string() + ": verified " + to_string(spec->params()) + ", seeded");
      } else {
        notes.push_back(spec->to_string() + ": invalid (" +
                        std::string(to_string(report.first_failure->clause)) + "), skipped");
      }
    } catch (const TauUnavailable& e) {
      notes.push_back(spec->to_string() + ": " + e.what() + ", skipped");
    }
  }

  auto bounds = upper_bound_table(f_.n_max, options);
  auto exact = min_k_rows(std::min(f_.n_max, 9), bounds);

  if (f_.csv) {
    out << "n,k,spec\n";
    for (const auto& e : bounds.entries()) out << e.n << ',' << e.k << ',' << e.derivation->to_string() << '\n';
    return kOk;
  }
  if (f_.json) {
    Json doc;
    doc["n_max"] = f_.n_max;
    doc["seeds"] = notes;
    Json rows = Json::array();
    for (const auto& e : bounds.entries()) {
      Json row;
      row["n"] = e.n;
      row["upper"] = e.k;
      row["spec"] = e.derivation->to_string();
      row["power_law_bound"] = std::round(power_law_bound(e.n) * 1000.0) / 1000.0;
      if (e.n <= static_cast<int>(exact.size())) {
        const auto& x = exact[static_cast<std::size_t>(e.n - 1)];
        row["lower"] = x.lower;
        row["exact"] = x.exact() ? Json(x.lower) : Json(nullptr);
        row["lower_provenance"] = x.lower_provenance;
      }
      rows.push_back(row);
    }
    doc["rows"] = rows;
    emit(doc);
    return kOk;
  }

  for (const auto& note : notes) out << "# " << note << '\n';
  out << std::setw(6) << "n" << std::setw(7) << "k(n)" << std::setw(10) << "5n^0.473" << "  derivation / lower bound\n";
  for (const auto& e : bounds.entries()) {
    char curve[32];
    std::snprintf(curve, sizeof curve, "%.3f", power_law_bound(e.n));
    std::string k;
    std::string why = e.derivation->to_string();
    if (e.n <= static_cast<int>(exact.size())) {
      const auto& x = exact[static_cast<std::size_t>(e.n - 1)];
      k = x.exact() ? std::to_string(x.lower) : std::to_string(x.lower) + ".." + std::to_string(x.upper);
      why = x.upper_provenance + "; lower: " + x.lower_provenance;
    } else {
      k = "<=" + std::to_string(e.k);
    }
    out << std::setw(6) << e.n << std::setw(7) << k << std::setw(10) << curve << "  " << why << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int Command::subgraph_solve() {
  auto g = read_edges();
  const bool win = is_winning(g);
  if (f_.json) {
    Json doc;
    doc["n"] = g.n();
    doc["edges"] = format_star_edges(g);
    doc["max_degree"] = max_degree(g);
    doc["winning"] = win;
    emit(doc);
  } else {
    out << "n: " << g.n() << "\nedges: " << format_star_edges(g) << "\nmax_degree: " << max_degree(g)
        << "\nverdict: " << (win ? "winning" : "losing") << '\n';
  }
  return win ? kOk : kNegative;
}

Json shapes_json(const std::vector<Shape>& shapes) {
  Json arr = Json::array();
  for (const auto& s : shapes) {
    Json j;
    j["kind"] = std::string(to_string(s.kind()));
    j["shape"] = s.to_string();
    j["forbidden_pattern"] = contains_forbidden_pattern(s);
    arr.push_back(j);
  }
  return arr;
}

int Command::subgraph_minimal() {
  MinimalSearchStats stats;
  auto classes = minimal_winning_subgraphs(f_.n, f_.k, &stats);
  if (f_.json) {
    Json doc;
    doc["n"] = f_.n;
    doc["k"] = f_.k;
    Json arr = Json::array();
    for (const auto& c : classes) {
      Json j;
      j["edges"] = format_star_edges(c);
      j["edge_count"] = c.size();
      j["minimal"] = minimality_check(c);
      j["shapes"] = max_degree(c) <= 2 ? shapes_json(component_shapes(c)) : Json(nullptr);
      arr.push_back(j);
    }
    doc["classes"] = arr;
    doc["leaves_checked"] = stats.leaves;
    emit(doc);
  } else {
    out << "minimal winning subgraphs, n = " << f_.n << ", max degree <= " << f_.k << ": " << classes.size()
        << " class(es)\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      out << "  class " << i + 1 << ": " << c.size() << " edges: " << format_star_edges(c) << '\n';
      if (max_degree(c) <= 2) {
        for (const auto& s : component_shapes(c)) {
          out << "    " << to_string(s.kind()) << " shape " << s.to_string()
              << (contains_forbidden_pattern(s) ? " (forbidden pattern)" : "") << '\n';
        }
      }
      out << "    minimality_check: " << (minimality_check(c) ? "pass" : "FAIL") << '\n';
    }
  }
  return classes.empty() ? kNegative : kOk;
}

int Command::subgraph_shapes() {
  auto g = read_edges();
  auto shapes = component_shapes(g);
  if (f_.json) {
    Json doc;
    doc["edges"] = format_star_edges(g);
    doc["shapes"] = shapes_json(shapes);
    emit(doc);
  } else {
    for (const auto& s : shapes) {
      out << to_string(s.kind()) << ' ' << s.to_string()
          << (contains_forbidden_pattern(s) ? " (forbidden pattern)" : "") << '\n';
    }
  }
  return kOk;
}

int Command::subgraph_certify() {
  No25Certificate cert = f_.check_file.empty() ? no_2_5_certificate() : [&] {
    std::ifstream in(f_.check_file);
    if (!in) throw InputError("cannot open " + f_.check_file);
    return parse_certificate(in);
  }();
  auto check = validate_certificate(cert);
  if (!f_.out_file.empty()) write_file(f_.out_file, format_certificate(cert));
  if (f_.json) {
    Json doc;
    Json classes = Json::array();
    for (const auto& c : cert.minimal_2_4_classes) classes.push_back(format_star_edges(c));
    doc["minimal_2_4_classes"] = classes;
    doc["all_are_8_cycles"] = cert.all_are_8_cycles;
    doc["all_span_4_directions"] = cert.all_span_4_directions;
    doc["counting_line"] = cert.counting.to_string();
    doc["accepted"] = check.accepted;
    doc["problems"] = check.problems;
    emit(doc);
  } else {
    out << format_certificate(cert);
    out << "[validation]\n";
    for (const auto& p : check.problems) out << "problem: " << p << '\n';
    out << "verdict: " << (check.accepted ? "accepted" : "rejected") << '\n';
    if (check.accepted) out << "no (2,5) strategy exists, so k(5) >= 3\n";
  }
  return check.accepted ? kOk : kNegative;
}

int Command::subgraph_to_strategy() {
  auto g = read_edges();
  if (!is_winning(g)) {
    out << "verdict: losing; no strategy\n";
    return kNegative;
  }
  auto strategy = strategy_from_subgraph(g);
  auto report = verify_exhaustive(*strategy, {f_.workers});
  const bool round_trip = subgraph_from_strategy(*strategy).is_subgraph_of(g);
  if (f_.json) {
    Json doc;
    doc["edges"] = format_star_edges(g);
    doc["params"] = params_json(strategy->params());
    doc["report"] = Json::parse(to_json(report));
    doc["round_trip_subgraph"] = round_trip;
    emit(doc);
  } else {
    out << "params: " << to_string(strategy->params()) << '\n' << to_text(report);
    out << "round_trip_subgraph: " << (round_trip ? "true" : "false") << '\n';
  }
  return report.valid && round_trip ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

void code_summary(std::ostringstream& out, const BinaryCode& c) {
  out << "length: " << c.length() << "\nwords: " << c.size() << "\ndistance: "
      << (c.min_distance() ? std::to_string(*c.min_distance()) : "undefined") << '\n';
}

Json code_json(const BinaryCode& c) {
  Json j;
  j["length"] = c.length();
  j["words"] = c.size();
  j["distance"] = c.min_distance() ? Json(*c.min_distance()) : Json(nullptr);
  return j;
}

int Command::code_gen_hamming() {
  auto c = hamming_code(f_.r);
  if (!f_.out_file.empty()) {
    save_code(c, f_.out_file, "Hamming code, r = " + std::to_string(f_.r));
  }
  if (f_.json) {
    emit(code_json(c));
  } else if (f_.out_file.empty()) {
    out << format_code(c, "Hamming code, r = " + std::to_string(f_.r));
  } else {
    code_summary(out, c);
  }
  return kOk;
}

int Command::code_distance() {
  auto c = resolve_code(f_.code);
  if (f_.json) {
    emit(code_json(*c));
  } else {
    code_summary(out, *c);
  }
  return c->min_distance() ? kOk : kNegative;
}

int Command::code_puncture() {
  auto c = resolve_code(f_.code);
  auto p = puncture(*c, f_.position - 1);
  const std::string note = f_.code + " punctured at position " + std::to_string(f_.position);
  if (!f_.out_file.empty()) save_code(p, f_.out_file, note);
  if (f_.json) {
    emit(code_json(p));
  } else if (f_.out_file.empty()) {
    out << format_code(p, note);
  } else {
    code_summary(out, p);
  }
  return kOk;
}

int Command::code_tau_match() {
  auto c = resolve_code(f_.code);
  auto result = tau_matching(*c, f_.m);
  const bool found = result.tau.has_value();
  if (found && !f_.out_file.empty()) write_file(f_.out_file, format_tau(*result.tau));
  if (f_.json) {
    Json doc;
    doc["code"] = code_json(*c);
    doc["m"] = f_.m;
    doc["subsets"] = result.left_vertices;
    doc["codewords"] = result.right_vertices;
    doc["matching_size"] = result.matching_size;
    doc["maximality_confirmed"] = result.maximality_confirmed;
    doc["found"] = found;
    if (!found) {
      Json witness = Json::array();
      for (SubsetMask s : result.hall_witness) {
        std::string text;
        for (int p : subset_positions(s, c->length())) text += (text.empty() ? "" : ",") + std::to_string(p + 1);
        witness.push_back(text);
      }
      doc["hall_witness"] = witness;
      doc["witness_neighbourhood"] = result.witness_neighbourhood;
    }
    emit(doc);
  } else {
    out << "subsets: " << result.left_vertices << "\ncodewords: " << result.right_vertices
        << "\nmatching: " << result.matching_size << '\n';
    if (found) {
      out << "verdict: tau found\n";
      if (f_.out_file.empty()) out << format_tau(*result.tau);
    } else {
      out << "verdict: no tau; Hall violation: " << result.hall_witness.size() << " subsets see only "
          << result.witness_neighbourhood << " codewords\n";
    }
  }
  return found ? kOk : kNegative;
}

int Command::code_search() {
  auto c = greedy_code_search(f_.length, f_.distance, f_.seed, f_.attempts);
  const std::string note = "greedy search, length " + std::to_string(f_.length) + ", distance " +
                           std::to_string(f_.distance) + ", seed " + std::to_string(f_.seed) + ", attempts " +
                           std::to_string(f_.attempts);
  if (!f_.out_file.empty()) save_code(c, f_.out_file, note);
  if (f_.json) {
    emit(code_json(c));
  } else if (f_.out_file.empty()) {
    out << format_code(c, note);
  } else {
    code_summary(out, c);
  }
  return kOk;
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  Flags f;
  CLI::App app{"Workbench for the GKS communication game and its hypercube form", "gks"};
  app.require_subcommand(1);
  std::function<int(Command&)> action;
  auto bind = [&](CLI::App* sub, int (Command::*method)()) {
    sub->callback([&action, method] { action = [method](Command& c) { return (c.*method)(); }; });
  };

  auto* verify = app.add_subcommand("verify", "Verify a strategy spec");
  verify->footer(kSpecGrammar);
  verify->add_option("--spec", f.spec, "Strategy spec, e.g. amc(code6)")->required();
  verify->add_option("--mode", f.mode, "auto, exhaustive, structured or sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "structured", "sampled"}));
  verify->add_option("--samples", f.samples, "Sampled mode: random orders");
  verify->add_option("--seed", f.seed, "Sampled mode: RNG seed");
  verify->add_option("--workers", f.workers, "Exhaustive mode: threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--json", f.json, "JSON output");
  bind(verify, &Command::verify);

  auto* table = app.add_subcommand("table", "Exact k(n) for n <= 9 and upper bounds beyond");
  table->add_option("--n-max", f.n_max, "Largest n")->check(CLI::Range(1, 100000));
  table->add_flag("--json", f.json, "JSON output");
  table->add_flag("--csv", f.csv, "Rows n,k,spec");
  table->add_flag("--with-tau", f.with_tau, "Seed with tau(hamming4,4) and tau(code9x40,2) when they verify");
  table->add_option("--tau", f.tau_specs, "Extra tau(...) seed, verified before use");
  bind(table, &Command::table);

  auto* subgraph = app.add_subcommand("subgraph", "Divider-Chooser subgraph tools");
  subgraph->require_subcommand(1);
  auto edge_input = [&](CLI::App* sub) {
    sub->add_option("--edges", f.edges, "Star-notation edges, e.g. \"*0,0*\"");
    sub->add_option("--file", f.edges_file, "File of star-notation edges");
    sub->add_flag("--json", f.json, "JSON output");
  };
  auto* solve = subgraph->add_subcommand("solve", "Is the subgraph winning for the Chooser?");
  edge_input(solve);
  bind(solve, &Command::subgraph_solve);
  auto* minimal = subgraph->add_subcommand("minimal", "Minimal winning subgraphs up to symmetry");
  minimal->add_option("--n", f.n, "Dimension (1..5)")->required();
  minimal->add_option("--k", f.k, "Maximum degree")->required();
  minimal->add_flag("--json", f.json, "JSON output");
  bind(minimal, &Command::subgraph_minimal);
  auto* shapes = subgraph->add_subcommand("shapes", "Direction sequences of path and cycle components");
  edge_input(shapes);
  bind(shapes, &Command::subgraph_shapes);
  auto* certify = subgraph->add_subcommand("certify-no25", "Build and check the no-(2,5) certificate");
  certify->add_option("--check", f.check_file, "Validate a saved certificate instead of building one");
  certify->add_option("--out", f.out_file, "Write the certificate here");
  certify->add_flag("--json", f.json, "JSON output");
  bind(certify, &Command::subgraph_certify);
  auto* to_strategy = subgraph->add_subcommand("to-strategy", "Strategy from a winning subgraph, verified");
  edge_input(to_strategy);
  to_strategy->add_option("--workers", f.workers, "Threads")->check(CLI::Range(1u, 256u));
  bind(to_strategy, &Command::subgraph_to_strategy);

  auto* code = app.add_subcommand("code", "Code and tau tools");
  code->require_subcommand(1);
  auto* gen = code->add_subcommand("gen-hamming", "Hamming code of length 2^r - 1");
  gen->add_option("--r", f.r, "r in 2..4")->required();
  gen->add_option("--out", f.out_file, "Code file to write");
  gen->add_flag("--json", f.json, "JSON summary");
  bind(gen, &Command::code_gen_hamming);
  auto code_input = [&](CLI::App* sub) {
    sub->add_option("--code", f.code, "Code file, hamming2..4 or code9x40")->required();
    sub->add_flag("--json", f.json, "JSON output");
  };
  auto* distance = code->add_subcommand("distance", "Minimum distance by brute force");
  code_input(distance);
  bind(distance, &Command::code_distance);
  auto* punct = code->add_subcommand("puncture", "Delete one coordinate");
  code_input(punct);
  punct->add_option("--position", f.position, "1-based position")->required();
  punct->add_option("--out", f.out_file, "Code file to write");
  bind(punct, &Command::code_puncture);
  auto* tau = code->add_subcommand("tau-match", "Bipartite matching search for tau");
  code_input(tau);
  tau->add_option("--m", f.m, "Subset size")->required();
  tau->add_option("--out", f.out_file, "Tau map file to write on success");
  bind(tau, &Command::code_tau_match);
  auto* search = code->add_subcommand("search", "Randomized greedy code construction");
  search->add_option("--length", f.length, "Word length (<= 20)")->required();
  search->add_option("--distance", f.distance, "Minimum distance")->required();
  search->add_option("--seed", f.seed, "RNG seed");
  search->add_option("--attempts", f.attempts, "Restarts");
  search->add_option("--out", f.out_file, "Code file to write");
  search->add_flag("--json", f.json, "JSON summary");
  bind(search, &Command::code_search);

  CommandResult result;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    const int code_ret = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code_ret == 0 ? kOk : kUsage;
    return result;
  }

  Command cmd(f);
  try {
    result.exit_code = action(cmd);
  } catch (const TauUnavailable& e) {
    err << "verdict: " << e.what() << '\n';
    result.exit_code = kNegative;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kUsage;
  } catch (const UnsupportedOperation& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kUsage;
  }
  result.out = cmd.out.str();
  result.err += err.str();
  return result;
}

}  // namespace gks::cli

// rdx — Roman domination on trees and small graphs.
//
// Subcommands: solve, partition, excellent, recognize, generate, classify,
// bases, verify. Every machine-readable payload is JSON with a top-level
// "schema":"rdx/1" (or CSV under verify --csv); outputs are byte-deterministic
// for fixed inputs, flags and seeds, except for the wall-time fields of
// verification reports.
//
// Exit codes: 0 success/Accept, 2 principled Reject (a negative verdict with a
// counterexample), 1 error (bad input, bad flags, exceeded caps).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdx/catalog.hpp"
#include "rdx/classes.hpp"
#include "rdx/grammar.hpp"
#include "rdx/graph.hpp"
#include "rdx/json_out.hpp"
#include "rdx/partition.hpp"
#include "rdx/roman.hpp"
#include "rdx/util.hpp"
#include "rdx/verify.hpp"

namespace {

using namespace rdx;

constexpr int kAccept = 0;
constexpr int kError = 1;
constexpr int kReject = 2;

Json with_schema() {
  Json j;
  j["schema"] = "rdx/1";
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Input resolution: a documented shorthand, "-" for standard input, or a path
// to an edge-list file.
Graph load_input(const std::string& spec) {
  if (is_shorthand(spec)) return expand_shorthand(spec);
  if (spec == "-") {
    std::ostringstream text;
    text << std::cin.rdbuf();
    return parse_graph(text.str());
  }
  std::ifstream in(spec);
  if (!in) throw parse_error("cannot open input file: " + spec);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

// DOT with each vertex labeled by its value class; excellent trees of order
// at least two additionally carry their status shapes.
std::string partition_dot(const Graph& g, const PartitionReport& rep) {
  std::string statuses;
  if (rep.excellent && g.n() >= 2 && is_tree(g)) statuses = derive_statuses(g, rep);
  std::ostringstream os;
  os << "graph rdx {\n";
  for (int v = 0; v < g.n(); ++v) {
    os << "  " << v << " [label=\"" << v << ":"
       << value_set_name(rep.value_sets[static_cast<size_t>(v)]) << "\"";
    if (!statuses.empty()) {
      const char* shape = nullptr;
      switch (statuses[static_cast<size_t>(v)]) {
        case 'A': shape = "circle"; break;
        case 'B': shape = "triangle"; break;
        case 'C': shape = "diamond"; break;
        default: shape = "doublecircle"; break;
      }
      os << " shape=" << shape;
    }
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

// --- solve ------------------------------------------------------------------

int run_solve(const std::string& input, const std::string& tree_spec,
              const std::string& graph_spec, bool want_function) {
  std::string spec = input;
  if (!tree_spec.empty()) spec = tree_spec;
  if (!graph_spec.empty()) spec = graph_spec;
  if (spec.empty()) throw parse_error("solve needs an input (positional, --tree or --graph)");
  Graph g = load_input(spec);
  if (!tree_spec.empty() && !is_forest(g))
    throw parse_error("--tree input has a cycle; pass it with --graph instead");
  Json out = with_schema();
  out["n"] = g.n();
  out["m"] = g.m();
  out["gamma_r"] = gamma_r_auto(g);
  out["gamma"] = gamma_auto(g);
  if (want_function) {
    RdFunction f = one_gamma_r_function(g);
    out["function"] = function_digits(f);
    out["weight"] = weight(f);
  }
  emit(out);
  return kAccept;
}

// --- partition ----------------------------------------------------------------

int run_partition(const std::string& input, bool dot) {
  Graph g = load_input(input);
  PartitionReport rep = partition_report(g);
  if (dot) {
    std::cout << partition_dot(g, rep);
    return kAccept;
  }
  Json out = with_schema();
  out.update(partition_json(g, rep));
  emit(out);
  return kAccept;
}

// --- excellent ----------------------------------------------------------------

int run_excellent(const std::string& input) {
  Graph g = load_input(input);
  PartitionReport rep = partition_report(g);
  Json out = with_schema();
  out["graph"] = graph_json(g);
  out["gamma_r"] = rep.gamma_r;
  out["excellent"] = rep.excellent;
  std::vector<int> bad;
  for (int v = 0; v < g.n(); ++v)
    if (!is_good_vertex(rep, v)) bad.push_back(v);
  out["bad_vertices"] = bad;
  emit(out);
  return rep.excellent ? kAccept : kReject;
}

// --- recognize ----------------------------------------------------------------

int run_recognize(const std::string& input, const std::string& family, bool dot) {
  Graph g = load_input(input);
  Json out = with_schema();
  out["family"] = family;
  out["graph"] = graph_json(g);

  bool accepted = false;
  TSequence cert;
  std::string statuses;
  int witness = -1;
  std::string reason;
  std::vector<int> input_of_replay;

  if (family == "main") {
    Recognition rec = recognize(g);
    accepted = rec.accepted;
    if (accepted) {
      cert = rec.cert;
      statuses = rec.labeled.statuses;
      input_of_replay = rec.input_of_replay;
    } else {
      witness = rec.witness;
      reason = rec.reason;
    }
  } else {
    ClassRecognition rec = family == "r0102"          ? recognize_r0102(g)
                           : family == "r0102-corona" ? recognize_r0102_corona(g)
                                                      : recognize_r02012(g);
    accepted = rec.accepted;
    if (accepted) {
      cert = rec.cert;
      statuses = derive_statuses(g);
    } else {
      reason = rec.reason;
    }
  }

  out["accepted"] = accepted;
  if (accepted) {
    if (dot) {
      std::cout << to_dot(LabeledTree{g, statuses});
      return kAccept;
    }
    out["gamma_r"] = gamma_r_auto(g);
    out["signature"] = r_signature(g);
    out["statuses"] = statuses;
    out["certificate"] = tsequence_json(cert);
    if (!input_of_replay.empty()) out["input_of_replay"] = input_of_replay;
    emit(out);
    return kAccept;
  }
  out["reason"] = reason;
  if (witness >= 0) out["witness"] = witness;
  out["partition"] = partition_json(g, partition_report(g));
  emit(out);
  return kReject;
}

// --- generate -----------------------------------------------------------------

int run_generate(uint64_t seed, int steps, const std::string& ops,
                 const std::string& base, int max_n, bool dot) {
  GenerateOptions opt;
  opt.steps = steps;
  opt.base = base;
  opt.max_n = max_n;
  opt.allowed.clear();
  std::stringstream ss(ops);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    opt.allowed.push_back(op_from_name(tok));
  }
  if (opt.allowed.empty()) throw parse_error("--ops lists no operations");
  Generated gen = generate(seed, opt);
  if (dot) {
    std::cout << to_dot(gen.tree);
    return kAccept;
  }
  Json out = with_schema();
  out["seed"] = seed;
  out["base"] = gen.cert.base;
  out["requested_steps"] = steps;
  out["applied_steps"] = gen.cert.steps.size();
  out["n"] = gen.tree.tree.n();
  out["statuses"] = gen.tree.statuses;
  out["graph"] = graph_json(gen.tree.tree);
  out["certificate"] = tsequence_json(gen.cert);
  emit(out);
  return kAccept;
}

// --- classify -----------------------------------------------------------------

int run_classify(const std::string& input) {
  Graph g = load_input(input);
  PartitionReport rep = partition_report(g);
  Json out = with_schema();
  out["n"] = g.n();
  out["m"] = g.m();
  out["connected"] = is_connected(g);
  out["gamma_r"] = rep.gamma_r;
  out["gamma"] = gamma_auto(g);
  out["signature"] = r_signature(g);
  out["excellent"] = rep.excellent;
  out["uvr"] = is_uvr(g);
  out["cvr"] = is_cvr(g);
  out["cea"] = is_cea(g);
  bool corona = is_tree(g) && is_corona_tree(g);
  out["corona"] = corona;
  if (corona) out["corona_shorthand"] = corona_shorthand(g);
  Json bounds;
  bounds["five_gamma_r"] = 5 * rep.gamma_r;
  bounds["four_n"] = 4 * g.n();
  bounds["four_fifths_holds"] = 5 * rep.gamma_r <= 4 * g.n();
  bounds["four_fifths_equality"] = 5 * rep.gamma_r == 4 * g.n();
  out["bounds"] = bounds;
  emit(out);
  return kAccept;
}

// --- bases --------------------------------------------------------------------

int run_bases(bool derive) {
  const Catalog& cat = catalog();
  Json out = with_schema();
  out["count"] = cat.entries.size();
  Json strata;
  int by_k[3] = {0, 0, 0};
  for (const CatalogEntry& e : cat.entries) ++by_k[e.k];
  strata["k0"] = by_k[0];
  strata["k1"] = by_k[1];
  strata["k2"] = by_k[2];
  out["strata"] = strata;
  out["bases"] = cat.bases;
  Json entries = Json::array();
  for (const CatalogEntry& e : cat.entries) {
    Json j;
    j["name"] = e.name;
    j["n"] = e.tree.n();
    j["gamma_r"] = e.gamma_r;
    j["k"] = e.k;
    j["statuses"] = e.statuses;
    j["graph"] = graph_json(e.tree);
    j["a_vertices"] = e.a_vertices;
    j["o3_vertices"] = e.o3_vertices;
    j["o4_vertices"] = e.o4_vertices;
    if (derive) {
      j["gamma_r_minus_v"] = e.gamma_r_minus_v;
      j["expansion"] = tsequence_json(e.expansion);
      j["replay_of_catalog"] = e.replay_of_catalog;
    }
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  emit(out);
  return kAccept;
}

// --- verify -------------------------------------------------------------------

int run_verify(const std::string& suite, const VerifyOptions& opt, bool csv) {
  if (!is_verify_suite(suite)) {
    std::string names;
    for (const std::string& s : verify_suite_names()) names += (names.empty() ? "" : ", ") + s;
    throw parse_error("unknown suite '" + suite + "' (expected one of: " + names + ")");
  }
  std::vector<ClaimResult> claims = run_verify_suite(suite, opt);
  long long failures = 0;
  for (const ClaimResult& c : claims) failures += c.failures;
  if (csv) {
    std::cout << claim_csv_header() << "\n";
    for (const ClaimResult& c : claims) {
      std::cout << claim_csv_row(c) << "\n";
      for (const Json& ce : c.counterexamples) std::cerr << c.claim << ": " << ce.dump() << "\n";
    }
  } else {
    Json out = with_schema();
    out["suite"] = suite;
    Json options;
    options["jobs"] = opt.jobs;
    options["seed"] = opt.seed;
    options["max_n"] = opt.max_n;
    options["samples"] = opt.samples;
    out["options"] = options;
    Json rows = Json::array();
    for (const ClaimResult& c : claims) rows.push_back(claim_json(c));
    out["claims"] = std::move(rows);
    out["total_failures"] = failures;
    emit(out);
  }
  return failures == 0 ? kAccept : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Roman domination on trees and small graphs: exact solvers, value-class "
      "partitions, constructive certificates, and verification suites.\n"
      "Inputs are shorthands (p:<n>, c:<n>, star:<k>, corona:<spec>), '-' for "
      "standard input, or edge-list files ('u v' per line, '#' comments,\n"
      "optional 'n <count>' header)."};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Compute the Roman domination and domination numbers");
  std::string solve_input, solve_tree, solve_graph;
  bool solve_function = false;
  solve->add_option("input", solve_input, "Shorthand or edge-list file");
  auto* solve_tree_opt = solve->add_option("--tree", solve_tree, "Input that must be a tree or forest");
  auto* solve_graph_opt = solve->add_option("--graph", solve_graph, "Input treated as a general graph");
  solve_tree_opt->excludes(solve_graph_opt);
  solve->add_flag("--function", solve_function, "Also print one optimal function as digits");

  auto* partition = app.add_subcommand("partition", "Report the value classes of every vertex");
  std::string partition_input;
  bool partition_dot_flag = false;
  partition->add_option("input", partition_input, "Shorthand or edge-list file")->required();
  partition->add_flag("--dot", partition_dot_flag, "Emit Graphviz instead of JSON");

  auto* excellent = app.add_subcommand("excellent", "Decide excellence (exit 2 with the bad vertices if not)");
  std::string excellent_input;
  excellent->add_option("input", excellent_input, "Shorthand or edge-list file")->required();

  auto* recognize_cmd = app.add_subcommand(
      "recognize", "Decompose a tree against a construction family (Accept/Reject)");
  std::string recognize_input, recognize_family = "main";
  bool recognize_dot = false;
  recognize_cmd->add_option("input", recognize_input, "Shorthand or edge-list file")->required();
  recognize_cmd
      ->add_option("--family", recognize_family,
                   "Construction family: main, r0102, r0102-corona, r02012")
      ->check(CLI::IsMember({"main", "r0102", "r0102-corona", "r02012"}));
  recognize_cmd->add_flag("--dot", recognize_dot, "On Accept, emit the labeled tree as Graphviz");

  auto* generate_cmd = app.add_subcommand("generate", "Grow a random member tree with its certificate");
  uint64_t generate_seed = 0;
  int generate_steps = 5, generate_max_n = 0;
  std::string generate_ops = "O1,O2,O3,O4", generate_base;
  bool generate_dot = false;
  generate_cmd->add_option("--seed", generate_seed, "Deterministic seed (default 0)");
  generate_cmd->add_option("--steps", generate_steps, "Number of growth steps to attempt")
      ->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--ops", generate_ops, "Comma-separated operations, e.g. O1,O3");
  generate_cmd->add_option("--base", generate_base, "Start from this base (default: seeded choice)");
  generate_cmd->add_option("--max-n", generate_max_n, "Never exceed this order (0 = unbounded)")
      ->check(CLI::NonNegativeNumber);
  generate_cmd->add_flag("--dot", generate_dot, "Emit Graphviz instead of JSON");

  auto* classify = app.add_subcommand("classify", "Signature and special-class membership summary");
  std::string classify_input;
  classify->add_option("input", classify_input, "Shorthand or edge-list file")->required();

  auto* bases = app.add_subcommand("bases", "Print the eleven-entry base catalog");
  bool bases_derive = false;
  bases->add_flag("--derive", bases_derive, "Include expansions and per-vertex deletion values");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string verify_suite;
  VerifyOptions verify_opt;
  bool verify_csv = false;
  verify->add_option("suite", verify_suite,
                     "oracle, lemmas, theorem-main, classes, extremal, cea, minedge, mincycle, all")
      ->required();
  verify->add_option("--jobs", verify_opt.jobs, "Worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opt.seed, "Seed for the randomized claims (default 0)");
  verify->add_option("--max-n", verify_opt.max_n, "Override the exhaustive size caps (0 = defaults)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", verify_opt.samples, "Override the randomized sample counts")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--csv", verify_csv, "Emit CSV rows (counterexamples go to standard error)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_input, solve_tree, solve_graph, solve_function);
    if (partition->parsed()) return run_partition(partition_input, partition_dot_flag);
    if (excellent->parsed()) return run_excellent(excellent_input);
    if (recognize_cmd->parsed())
      return run_recognize(recognize_input, recognize_family, recognize_dot);
    if (generate_cmd->parsed())
      return run_generate(generate_seed, generate_steps, generate_ops, generate_base,
                          generate_max_n, generate_dot);
    if (classify->parsed()) return run_classify(classify_input);
    if (bases->parsed()) return run_bases(bases_derive);
    if (verify->parsed()) return run_verify(verify_suite, verify_opt, verify_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

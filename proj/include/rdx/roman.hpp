#pragma once

#include <string>
#include <vector>

#include "rdx/graph.hpp"

namespace rdx {

// A Roman dominating function assigns 0/1/2 to every vertex such that each
// 0-vertex has a neighbor assigned 2; gamma_R is the minimum total weight.
using RdFunction = std::vector<uint8_t>;

bool is_rdf(const Graph& g, const RdFunction& f);
int weight(const RdFunction& f);
std::string function_digits(const RdFunction& f);  // e.g. "1020"

// --- exact tree/forest solver (linear-time DP) ------------------------------

struct TreeSolveOptions {
  // Per-vertex bitmask of permitted labels (bit k = label k). nullptr = all.
  const std::vector<uint8_t>* allowed = nullptr;
  // Per-vertex flag: vertex counts as dominated by something outside the
  // forest (used to evaluate a pending extra edge without materializing it).
  const std::vector<uint8_t>* external = nullptr;
};

// Returns gamma_R of a forest, or -1 when the constraints are unsatisfiable.
int gamma_r_forest(const Graph& forest, const TreeSolveOptions& opt = {});
int gamma_r_tree(const Graph& tree);

// gamma_R with f(v) pinned to `label`; -1 if unsatisfiable.
int gamma_r_constrained(const Graph& forest, int v, int label);

// gamma_R of tree + edge xy, without building the (cyclic) graph: either the
// new edge is unused, or one endpoint takes 2 and dominates the other across it.
int gamma_r_plus_edge(const Graph& tree, int x, int y);

// --- reference oracles ------------------------------------------------------

// Literal minimum over all 3^n assignments that pass is_rdf (with sound
// pruning on partial weight and unfixable 0-vertices). Any graph, n <= 14.
int gamma_r_bruteforce(const Graph& g);

// Every minimum-weight Roman dominating function, lexicographic. n <= 12.
std::vector<RdFunction> enumerate_gamma_r_functions(const Graph& g);

// 2-set sweep: gamma_R(G) = min_S 2|S| + |V \ N[S]|, exact for any graph.
// gamma_R-functions correspond one-to-one to optimal S with the forced
// completion (0 on N(S)\S, 1 on V\N[S]), which yields whole partitions in a
// single sweep. n <= 20.
int gamma_r_graph(const Graph& g);

struct GraphPartitionSweep {
  int gamma_r = 0;
  std::vector<uint8_t> value_sets;  // bit k set <=> vertex attains label k
};
GraphPartitionSweep graph_partition_sweep(const Graph& g);

// One optimal Roman dominating function (sweep for n <= 20, else tree DP).
RdFunction one_gamma_r_function(const Graph& g);

// Route automatically: forests go through the DP (any size), everything else
// through the subset sweep (n <= 20; throws std::invalid_argument beyond).
// The empty graph solves to 0 so that single-vertex deletions stay total.
int gamma_r_auto(const Graph& g);
int gamma_auto(const Graph& g);

// --- ordinary domination ----------------------------------------------------

int gamma_forest(const Graph& forest);
int gamma_tree(const Graph& tree);
int gamma_graph(const Graph& g);       // closed-neighborhood subset sweep, n <= 20
int gamma_bruteforce(const Graph& g);  // alias for the sweep oracle, n <= 20

}  // namespace rdx

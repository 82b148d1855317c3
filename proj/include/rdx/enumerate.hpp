#pragma once

#include <functional>

#include "rdx/graph.hpp"

namespace rdx {

// Calls fn once per isomorphism class of free trees on n vertices, in a
// deterministic order. Rooted trees come from canonical level sequences;
// free duplicates are dropped via canonical codes.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& fn);

long count_free_trees(int n);

// Independent generator oracle: every parent array (par[i] < i), deduplicated
// by canonical code. Exponential; n <= 12.
long count_free_trees_brute(int n);

// Calls fn once per isomorphism class of connected graphs on n vertices
// (n <= 7), ordered by canonical certificate. Built by vertex augmentation:
// every connected graph has a non-cut vertex, so all classes arise from an
// (n-1)-class plus one vertex with a non-empty neighborhood.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

long count_connected_graphs(int n);

// Independent oracle: direct sweep over all 2^C(n,2) edge sets; n <= 6.
long count_connected_graphs_brute(int n);

}  // namespace rdx

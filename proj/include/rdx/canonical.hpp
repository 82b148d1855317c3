#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdx/graph.hpp"

namespace rdx {

// AHU-style canonical codes for (optionally status-labeled) trees.
// A status string assigns one character per vertex ('A'..'D' here); passing
// nullptr uses '.' everywhere, i.e. plain unlabeled isomorphism.

// Canonical code of the subtree hanging at root (whole tree if parent = -1).
std::string rooted_code(const Graph& tree, int root, int parent = -1,
                        const std::string* sta = nullptr);

// 1 or 2 tree centers (leaf peeling), ascending.
std::vector<int> tree_centers(const Graph& tree);

// Canonical code of a free tree: rooted at the center, or at the canonical
// orientation of the bicentral edge. Equal codes <=> (labeled) isomorphic.
std::string free_code(const Graph& tree, const std::string* sta = nullptr);

// Witness mapping a->b if the labeled trees are isomorphic, else nullopt.
std::optional<std::vector<int>> labeled_iso(const Graph& a, const std::string& sa,
                                            const Graph& b, const std::string& sb);

// Permutation-minimal packed adjacency certificate for small graphs (n <= 8):
// high byte is n, low bits the upper-triangle adjacency under the best
// relabeling. Equal certificates <=> isomorphic.
uint64_t graph_cert(const Graph& g);

}  // namespace rdx

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rdx/util.hpp"

namespace rdx {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// No parallel edges, no self-loops. Small and value-semantic on purpose:
// everything in this library copies, slices and glues graphs freely.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const;
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// --- construction helpers -------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}: vertex 0 is the center
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // parts {0..a-1}, {a..a+b-1}

// Attaches exactly two new leaves to every vertex of h; the result has 3|V(h)|
// vertices (h keeps its indices, leaves are appended in vertex order).
Graph corona_graph(const Graph& h);

// --- traversal / structure ------------------------------------------------

std::vector<int> components(const Graph& g);  // component id per vertex
int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

struct BfsResult {
  std::vector<int> dist;    // -1 if unreachable
  std::vector<int> parent;  // -1 at source / unreachable
};
BfsResult bfs(const Graph& g, int src);

// Endpoints and vertex sequence of a diametral path, deterministically:
// start a double-BFS at vertex 0; every BFS scans neighbors in ascending
// order and ties in eccentricity pick the smallest vertex index.
std::vector<int> diametral_path(const Graph& tree);

// --- surgery ----------------------------------------------------------------

struct DeletedGraph {
  Graph graph;
  std::vector<int> old_of_new;  // new index -> original index
  std::vector<int> new_of_old;  // original index -> new index, -1 if deleted
};
DeletedGraph delete_vertices(const Graph& g, const std::vector<int>& doomed);

// Disjoint union of a and b plus the edge (ua, n_a + ub).
// b's vertex w becomes n_a + w.
Graph attach_edge(const Graph& a, int ua, const Graph& b, int ub);

struct Coalesced {
  Graph graph;
  std::vector<int> b_map;  // b's vertex -> merged-graph vertex (a keeps its indices)
};
// Identifies a's vertex ua with b's vertex ub. b's other vertices are appended
// in ascending order.
Coalesced coalesce(const Graph& a, int ua, const Graph& b, int ub);

// --- text I/O ---------------------------------------------------------------

// Edge-list format: '#' starts a comment; an optional leading "n <count>"
// header fixes the vertex count (needed for isolated vertices); every other
// non-empty line is "u v". Throws parse_error with a precise reason.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// Expands the CLI shorthands p:<n>, c:<n>, star:<k>,
// corona:<shorthand or inline edges like 0-1,1-2>. Returns false if s is not
// a shorthand (caller then treats s as a file path).
bool is_shorthand(const std::string& s);
Graph expand_shorthand(const std::string& s);

}  // namespace rdx

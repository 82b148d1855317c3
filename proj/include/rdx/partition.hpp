#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdx/graph.hpp"

namespace rdx {

// Bitmask over the labels a vertex attains across *all* minimum-weight Roman
// dominating functions: bit c is set iff some optimal function assigns c.
using ValueSet = std::uint8_t;

inline bool attains(ValueSet vs, int label) { return (vs >> label) & 1u; }

// Canonical class name: one of "0", "1", "2", "01", "02", "12", "012".
std::string value_set_name(ValueSet vs);

// The seven class names in canonical order.
const std::vector<std::string>& class_names();

struct PartitionReport {
  int n = 0;
  int gamma_r = 0;
  std::vector<ValueSet> value_sets;  // one per vertex
  bool excellent = false;            // no vertex is forced to 0
  std::vector<int> v_minus;          // vertices attaining 1, sorted
};

// Exact per-vertex value sets. Forests run three constrained solves per
// vertex (O(n^2), capped at n = 10000); graphs with cycles use the subset
// sweep (n <= 20). Throws std::invalid_argument on an empty graph or beyond
// the caps.
PartitionReport partition_report(const Graph& g);

// Sorted members of the class with the given canonical name.
std::vector<int> class_members(const PartitionReport& rep, const std::string& name);

// A vertex is good if some optimal function assigns it a positive value.
inline bool is_good_vertex(const PartitionReport& rep, int v) {
  ValueSet vs = rep.value_sets[static_cast<size_t>(v)];
  return attains(vs, 1) || attains(vs, 2);
}

inline bool report_excellent(const PartitionReport& rep) {
  for (int v = 0; v < rep.n; ++v)
    if (!is_good_vertex(rep, v)) return false;
  return true;
}

bool is_excellent(const Graph& g);

// V^- computed straight from the definition: deleting the vertex lowers
// gamma_R. (Equality with {v : 1 in ValueSet(v)} is a verified law, not an
// assumption of this function.)
std::vector<int> v_minus_by_deletion(const Graph& g);

bool is_cvr(const Graph& g);  // every vertex deletion lowers gamma_R
bool is_cea(const Graph& g);  // every edge addition lowers gamma_R (complete graphs: vacuously true)
bool is_uvr(const Graph& g);  // no vertex deletion changes the domination number

// Status letters for an excellent tree of order >= 2, one of ABCD per vertex:
//   A = class 01,  D = class 012,
//   B = class-02 vertices of degree 2 with exactly one class-02 neighbor,
//   C = the remaining class-02 vertices.
// Throws std::invalid_argument for non-trees, order 1, or non-excellent input.
std::string derive_statuses(const Graph& g);
std::string derive_statuses(const Graph& g, const PartitionReport& rep);

}  // namespace rdx

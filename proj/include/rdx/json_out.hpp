#pragma once

#include "json.hpp"
#include "rdx/graph.hpp"
#include "rdx/partition.hpp"

namespace rdx {

// All machine-readable output uses insertion-ordered JSON so that equal
// inputs always serialize to identical bytes.
using Json = nlohmann::ordered_json;

// {"n": ..., "edges": [[u, v], ...]} with the edges sorted.
Json graph_json(const Graph& g);

// {"n", "gamma_r", "value_sets", "classes", "v_minus", "excellent"} plus
// "statuses" whenever g is an excellent tree of order >= 2.
Json partition_json(const Graph& g, const PartitionReport& rep);

}  // namespace rdx

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rdx/grammar.hpp"
#include "rdx/partition.hpp"

namespace rdx {

// Signature of the nonempty value classes, e.g. "R_{01,02}": the classes in
// canonical order, comma-separated. Every graph has one (each vertex lies in
// exactly one class).
std::string r_signature(const Graph& g);

// Same signature computed from a status string over ABCD (A -> 01, B and
// C -> 02, D -> 012). Throws std::invalid_argument on other characters.
std::string r_signature_from_statuses(const std::string& statuses);

// A corona tree: every vertex is a stem or a leaf and every stem carries
// exactly two leaves. The smallest one has a two-stem spine.
bool is_corona_tree(const Graph& t);

// Leaves A, stems C. Throws std::invalid_argument unless is_corona_tree and
// the order is at least 6.
std::string corona_statuses(const Graph& t);

// "corona:..." shorthand whose expansion is isomorphic to the given corona
// tree (the spine serialized as an inline edge list).
std::string corona_shorthand(const Graph& t);

// Membership test for a restricted construction family, with a certificate
// over that family's bases and operations on acceptance.
struct ClassRecognition {
  bool accepted = false;
  TSequence cert;
  std::string reason;  // set on rejection
};

// The trees whose value classes are exactly {01, 02}: statuses use A, B, C
// only. Certificate: base H2 or H3, steps O5 (star attachment) and O6
// (coalescence with H2 or H3 at A-vertices).
ClassRecognition recognize_r0102(const Graph& tree);

// Same family, corona-style certificates: base H2 or a labeled corona tree,
// steps O7 (P4-coalescence at A) and O8 (corona coalescence at A).
ClassRecognition recognize_r0102_corona(const Graph& tree);

// The trees whose value classes are exactly {02, 012}: statuses use C and D
// only. Certificate: base H11, steps O9 (five-vertex attachment at C) and
// O10 (pair subdivision at D).
ClassRecognition recognize_r02012(const Graph& tree);

// good[v] is true when v lies in some minimum dominating set. Subset
// enumeration; throws std::invalid_argument beyond n = 20.
std::vector<bool> gamma_good_vertices(const Graph& g);

// r disjoint five-vertex paths whose centers are joined by the given links
// (indices into 0..r-1, must form a connected pattern). The result has order
// 5r and Roman domination number 4r. Vertex layout: path i occupies
// 5i..5i+4 with center 5i+2.
Graph extremal_45_tree(int r, const std::vector<std::pair<int, int>>& links);

// Minimality/maximality in the poset of connected excellent graphs with the
// same order and Roman domination number, ordered by spanning subgraph.
// Minimal: no edge can be removed keeping the graph connected, excellent,
// and at the same optimum. Maximal: no edge can be added keeping it
// excellent at the same optimum. Single-edge checks decide both relations:
// adding an edge that preserves the optimum preserves excellence, so a chain
// witness several levels away always yields a one-edge witness. n <= 20.
bool poset_minimal(const Graph& g);
bool poset_maximal(const Graph& g);

}  // namespace rdx

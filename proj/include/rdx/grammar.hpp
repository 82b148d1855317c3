#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdx/catalog.hpp"
#include "rdx/json_out.hpp"

namespace rdx {

// Structural conditions every labeling must satisfy:
//   (a) the 'A' vertices are independent,
//   (b) every 'B' vertex has exactly one 'B' neighbor, every 'D' vertex
//       exactly one 'D' neighbor (those classes induce disjoint edges),
//   (c) every 'B' vertex has degree 2 and exactly one 'A' neighbor,
//   (d) every 'C' vertex has exactly two neighbors labeled 'A' or 'D', and a
//       degree-2 'C' vertex has both neighbors labeled 'D'.
// Returns the first offending vertex, or -1 when all conditions hold.
int labeling_violation(const LabeledTree& lt);

// Outcome of structural recognition. `accepted` distinguishes a principled
// rejection (some vertex never attains a positive value in any minimum
// function; `witness` names one) from acceptance, in which case `labeled`
// carries the input tree with its derived statuses, `cert` a construction
// certificate, and `input_of_replay` the vertex correspondence between
// replay(cert) and the input.
struct Recognition {
  bool accepted = false;
  LabeledTree labeled;
  TSequence cert;
  std::vector<int> input_of_replay;
  int witness = -1;
  std::string reason;
};

// Decides whether the tree is excellent and, if so, decomposes it: statuses
// are derived from the partition, then outer pieces are peeled off a
// diametral path until a catalog entry remains. The emitted certificate is
// validated by exact replay before returning. Throws std::invalid_argument
// for non-trees and trees of order < 2; throws invariant_error if an
// excellent tree resists decomposition (a falsified theorem, not bad input).
Recognition recognize(const Graph& tree);

struct GenerateOptions {
  int steps = 5;
  std::vector<OpKind> allowed = {OpKind::O1, OpKind::O2, OpKind::O3, OpKind::O4};
  std::string base;  // empty: seeded choice among the generating bases;
                     // otherwise any catalog entry or corona shorthand
  int max_n = 0;     // 0 = unbounded; otherwise never exceed this order
};

struct Generated {
  LabeledTree tree;
  TSequence cert;
};

// Reproducibly grows a labeled tree: starting from the base, each round picks
// uniformly among all currently legal steps for the allowed operations (O8
// draws its corona pieces over path hosts p:1..p:3). Stops early when no
// legal step fits, so the certificate may hold fewer than `steps` steps.
Generated generate(uint64_t seed, const GenerateOptions& opt = {});

// Certificate serialization:
//   {"base":"H2","steps":[{"op":"O3","host_vertex":3,"piece":"H4","piece_vertex":0}]}
Json tsequence_json(const TSequence& seq);
TSequence tsequence_from_json(const Json& j);  // throws parse_error

// Graphviz export: statuses render as circle (A), triangle (B), diamond (C)
// and doublecircle (D).
std::string to_dot(const LabeledTree& lt);

// Edge-list text plus a trailing "statuses <string>" line.
std::string format_labeled(const LabeledTree& lt);

}  // namespace rdx

#pragma once

#include <string>
#include <vector>

#include "rdx/graph.hpp"

namespace rdx {

// A tree plus one status character per vertex: 'A' marks flexible-01 vertices,
// 'D' flexible-012, and 'B'/'C' split the 02 class ('B' when the vertex has
// degree 2 and exactly one 02 neighbor, 'C' otherwise).
struct LabeledTree {
  Graph tree;
  std::string statuses;
};

// Grammar operation kinds. O1/O2 join a fragment with a new edge, O3/O4
// coalesce a catalog piece at one of its A-vertices. O5..O10 are restricted
// views of these used by the special-class families: O5 = O1 with F1 only,
// O6 = O3 with pieces H2/H3, O7 = O3 with piece H2, O8 coalesces a labeled
// two-leaf corona at an A-A pair, O9 = O1 with F3 only, O10 = O2.
enum class OpKind {
  O1 = 1,
  O2 = 2,
  O3 = 3,
  O4 = 4,
  O5 = 5,
  O6 = 6,
  O7 = 7,
  O8 = 8,
  O9 = 9,
  O10 = 10,
};

std::string op_name(OpKind op);
OpKind op_from_name(const std::string& name);  // throws parse_error

// One grammar step: glue `piece` onto the host at `host_vertex`. For the edge
// operations the piece is a fragment name ("F1".."F4") and piece_vertex its
// designated attach vertex; for the coalescing operations it is a catalog
// entry name and piece_vertex an admissible A-vertex; for O8 it is a corona
// shorthand (e.g. "corona:p:2") and piece_vertex one of the corona's leaves.
struct Step {
  OpKind op = OpKind::O1;
  int host_vertex = 0;
  std::string piece;
  int piece_vertex = 0;
};

// A construction certificate: start from the named base entry and apply the
// steps in order. Vertex numbers refer to the tree being replayed at the
// moment a step applies: the base keeps its catalog indexing and each glued
// piece's remaining vertices are appended in ascending order.
struct TSequence {
  std::string base;
  std::vector<Step> steps;
};

// A building block glued on by the edge operations. The statuses are the
// fragment's fixed role labels in products; except for F3 they are not a
// structural labeling of the fragment itself (F1, F2, F4 are not excellent).
struct Fragment {
  std::string name;  // "F1".."F4"
  Graph tree;
  std::string statuses;
  int attach = 0;  // the designated 'C' attach vertex
  int gamma_r = 0;
};

// One of the eleven excellent trees with at most two non-flexible vertices.
// These are exactly the trees every excellent tree decomposes into.
struct CatalogEntry {
  std::string name;  // "H1".."H11"
  Graph tree;
  std::string statuses;  // the unique structural labeling
  int gamma_r = 0;
  int k = 0;  // |V^02| = number of 'B'/'C' statuses: 0, 1 or 2
  std::vector<int> a_vertices;   // positions with status 'A'
  std::vector<int> o3_vertices;  // A-vertices usable as the O3 merge point
  std::vector<int> o4_vertices;  // A-vertices usable as the O4 merge point
  // gamma_r(entry - v) for every vertex v, as computed; for each O4-usable
  // vertex this equals gamma_r - 1 (one less than the value a literal reading
  // of the source material would suggest; the replayed products certify the
  // recorded law).
  std::vector<int> gamma_r_minus_v;
  // How to build this entry from a generating base. Bases carry their own
  // name and no steps; the six product entries carry a one- or two-step
  // chain whose host vertices use replay indexing.
  TSequence expansion;
  std::vector<int> replay_of_catalog;  // catalog vertex -> replayed vertex
};

struct Catalog {
  std::vector<CatalogEntry> entries;  // H1..H11 in name order
  std::vector<Fragment> fragments;    // F1..F4
  std::vector<std::string> bases;     // names of entries with no expansion steps

  const CatalogEntry& entry(const std::string& name) const;    // throws
  const Fragment& fragment(const std::string& name) const;     // throws
  bool has_entry(const std::string& name) const;

  // Labeled-isomorphism lookup. On a hit, optionally yields the witness
  // mapping catalog-entry vertices to input vertices.
  const CatalogEntry* match(const Graph& tree, const std::string& statuses,
                            std::vector<int>* catalog_to_input = nullptr) const;
};

// Derived once on first use and cached. Construction re-derives the table
// from an exhaustive scan of all trees on 2..12 vertices and hard-fails
// (invariant_error) on any mismatch with the pinned shapes, so a successful
// call certifies the data.
const Catalog& catalog();

// Applies one grammar step, validating the host status at s.host_vertex and
// the piece admissibility for s.op. Throws std::invalid_argument on any
// violation (a tampered or ill-formed certificate), never invariant_error.
struct Applied {
  LabeledTree tree;
  std::vector<int> piece_map;  // piece vertex -> result vertex
};
Applied apply_step(const LabeledTree& host, const Step& s);

// The named catalog entry — or, for a "corona:..." shorthand, the labeled
// corona tree (leaves A, spine C) — as a standalone labeled tree.
LabeledTree base_tree(const std::string& name);

// Replays a certificate: its base expanded by base_tree, then every step
// applied in order. Throws std::invalid_argument on malformed input. Which
// bases and operations are admissible is a property of the family a
// certificate claims membership in, checked by its producer.
LabeledTree replay(const TSequence& seq);

}  // namespace rdx

#include "rdx/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "rdx/canonical.hpp"
#include "rdx/enumerate.hpp"
#include "rdx/partition.hpp"
#include "rdx/roman.hpp"

namespace rdx {

std::string op_name(OpKind op) { return "O" + std::to_string(static_cast<int>(op)); }

OpKind op_from_name(const std::string& name) {
  for (int i = 1; i <= 10; ++i)
    if (name == "O" + std::to_string(i)) return static_cast<OpKind>(i);
  throw parse_error("unknown operation name: " + name);
}

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Labeled edge join: new edge (u, offset + x); the piece keeps its statuses.
LabeledTree attach_labeled(const LabeledTree& host, int u, const LabeledTree& piece, int x,
                           std::vector<int>* piece_map) {
  LabeledTree out{attach_edge(host.tree, u, piece.tree, x), host.statuses + piece.statuses};
  if (piece_map) {
    piece_map->resize(static_cast<size_t>(piece.tree.n()));
    for (int w = 0; w < piece.tree.n(); ++w)
      (*piece_map)[static_cast<size_t>(w)] = host.tree.n() + w;
  }
  return out;
}

// Labeled coalescence: the merged vertex keeps the host's status, every other
// piece vertex carries its own status to its appended slot.
LabeledTree coalesce_labeled(const LabeledTree& host, int u, const LabeledTree& piece, int v,
                             std::vector<int>* piece_map) {
  Coalesced c = coalesce(host.tree, u, piece.tree, v);
  std::string sta = host.statuses;
  sta.resize(static_cast<size_t>(c.graph.n()), '?');
  for (int w = 0; w < piece.tree.n(); ++w)
    if (w != v) sta[static_cast<size_t>(c.b_map[static_cast<size_t>(w)])] = piece.statuses[static_cast<size_t>(w)];
  if (piece_map) *piece_map = c.b_map;
  return LabeledTree{std::move(c.graph), std::move(sta)};
}

// Expands a "corona:..." shorthand into the labeled corona tree: leaves A,
// spine vertices C. A corona over a single vertex is a path of order 3,
// whose stem would be a degree-2 C with two A-neighbors; the spine needs at
// least two vertices.
LabeledTree labeled_corona(const std::string& shorthand) {
  Graph c = expand_shorthand(shorthand);
  if (!is_tree(c)) throw std::invalid_argument("corona piece is not a tree");
  if (c.n() < 6) throw std::invalid_argument("corona base needs at least two spine vertices");
  std::string sta(static_cast<size_t>(c.n()), 'C');
  for (int w = 0; w < c.n(); ++w)
    if (c.degree(w) == 1) sta[static_cast<size_t>(w)] = 'A';
  return {std::move(c), std::move(sta)};
}

bool is_corona_shorthand(const std::string& name) { return name.rfind("corona:", 0) == 0; }

// True when the labeled tree is excellent and its statuses are exactly the
// structurally derived ones. Used to certify candidate glue points.
bool sound_labeling(const LabeledTree& lt) {
  if (!is_tree(lt.tree)) return false;
  try {
    return derive_statuses(lt.tree) == lt.statuses;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::pair<LabeledTree, int>> o3_panel() {
  return {
      {{path_graph(4), "ABBA"}, 0},
      {{graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}), "CCAAAA"}, 2},
  };
}

std::vector<std::pair<LabeledTree, int>> o4_panel() {
  return {
      {{path_graph(2), "DD"}, 0},
      {{path_graph(5), "DDCDD"}, 0},
      {{path_graph(5), "DDCDD"}, 1},
  };
}

// The three documented glue-point conditions on a leaf v with stem x: removing
// v (or v and x) lowers the optimum by exactly one, and every minimum function
// of the v-less tree leaves x bare.
bool o4_intrinsic(const Graph& tree, const std::string& statuses, int gamma, int v) {
  if (statuses[static_cast<size_t>(v)] != 'A' || tree.degree(v) != 1) return false;
  int x = tree.neighbors(v)[0];
  DeletedGraph dv = delete_vertices(tree, {v});
  if (gamma_r_forest(dv.graph) != gamma - 1) return false;
  DeletedGraph dvx = delete_vertices(tree, {v, x});
  if (dvx.graph.n() > 0 && gamma_r_forest(dvx.graph) != gamma - 1) return false;
  int nx = dv.new_of_old[static_cast<size_t>(x)];
  for (const RdFunction& f : enumerate_gamma_r_functions(dv.graph))
    if (f[static_cast<size_t>(nx)] != 0) return false;
  return true;
}

Applied apply_step_impl(const Catalog& cat, const LabeledTree& host, const Step& s);

LabeledTree base_tree_impl(const Catalog& cat, const std::string& name) {
  if (is_corona_shorthand(name)) return labeled_corona(name);
  const CatalogEntry& e = cat.entry(name);
  return {e.tree, e.statuses};
}

LabeledTree replay_impl(const Catalog& cat, const TSequence& seq) {
  LabeledTree lt = base_tree_impl(cat, seq.base);
  for (const Step& step : seq.steps) lt = apply_step_impl(cat, lt, step).tree;
  return lt;
}

Applied apply_step_impl(const Catalog& cat, const LabeledTree& host, const Step& s) {
  if (host.tree.n() != static_cast<int>(host.statuses.size()))
    throw std::invalid_argument("labeled tree has mismatched status string");
  if (s.host_vertex < 0 || s.host_vertex >= host.tree.n())
    throw std::invalid_argument(op_name(s.op) + ": host vertex out of range");
  char hsta = host.statuses[static_cast<size_t>(s.host_vertex)];
  auto need_host = [&](char c) {
    if (hsta != c)
      throw std::invalid_argument(op_name(s.op) + ": host vertex must have status " +
                                  std::string(1, c) + ", got " + std::string(1, hsta));
  };
  Applied out;
  switch (s.op) {
    case OpKind::O1:
    case OpKind::O5:
    case OpKind::O9: {
      need_host('C');
      if (s.piece == "F4" || (s.op == OpKind::O5 && s.piece != "F1") ||
          (s.op == OpKind::O9 && s.piece != "F3"))
        throw std::invalid_argument(op_name(s.op) + ": fragment " + s.piece + " not allowed");
      const Fragment& f = cat.fragment(s.piece);
      if (s.piece_vertex != f.attach)
        throw std::invalid_argument(op_name(s.op) + ": fragment must attach at its designated vertex");
      out.tree = attach_labeled(host, s.host_vertex, {f.tree, f.statuses}, f.attach, &out.piece_map);
      return out;
    }
    case OpKind::O2:
    case OpKind::O10: {
      need_host('D');
      if (s.piece != "F4")
        throw std::invalid_argument(op_name(s.op) + ": fragment " + s.piece + " not allowed");
      const Fragment& f = cat.fragment(s.piece);
      if (s.piece_vertex != f.attach)
        throw std::invalid_argument(op_name(s.op) + ": fragment must attach at its designated vertex");
      out.tree = attach_labeled(host, s.host_vertex, {f.tree, f.statuses}, f.attach, &out.piece_map);
      return out;
    }
    case OpKind::O3:
    case OpKind::O6:
    case OpKind::O7: {
      need_host('A');
      if ((s.op == OpKind::O6 && s.piece != "H2" && s.piece != "H3") ||
          (s.op == OpKind::O7 && s.piece != "H2"))
        throw std::invalid_argument(op_name(s.op) + ": piece " + s.piece + " not allowed");
      const CatalogEntry& e = cat.entry(s.piece);
      if (std::find(e.o3_vertices.begin(), e.o3_vertices.end(), s.piece_vertex) ==
          e.o3_vertices.end())
        throw std::invalid_argument(op_name(s.op) + ": vertex " + std::to_string(s.piece_vertex) +
                                    " of " + s.piece + " is not a usable merge point");
      out.tree = coalesce_labeled(host, s.host_vertex, {e.tree, e.statuses}, s.piece_vertex,
                                  &out.piece_map);
      return out;
    }
    case OpKind::O4: {
      need_host('D');
      const CatalogEntry& e = cat.entry(s.piece);
      if (std::find(e.o4_vertices.begin(), e.o4_vertices.end(), s.piece_vertex) ==
          e.o4_vertices.end())
        throw std::invalid_argument("O4: vertex " + std::to_string(s.piece_vertex) + " of " +
                                    s.piece + " is not a usable merge point");
      out.tree = coalesce_labeled(host, s.host_vertex, {e.tree, e.statuses}, s.piece_vertex,
                                  &out.piece_map);
      return out;
    }
    case OpKind::O8: {
      need_host('A');
      if (!is_corona_shorthand(s.piece))
        throw std::invalid_argument("O8: piece must be a corona shorthand, got " + s.piece);
      LabeledTree piece = labeled_corona(s.piece);
      if (s.piece_vertex < 0 || s.piece_vertex >= piece.tree.n() ||
          piece.tree.degree(s.piece_vertex) != 1)
        throw std::invalid_argument("O8: merge point must be a corona leaf");
      out.tree = coalesce_labeled(host, s.host_vertex, piece, s.piece_vertex, &out.piece_map);
      return out;
    }
  }
  throw std::invalid_argument("unknown operation");
}

Catalog build_catalog() {
  Catalog cat;

  cat.fragments = {
      {"F1", star_graph(2), "CAA", 0, 0},
      {"F2", path_graph(4), "DDCA", 2, 0},
      {"F3", graph_from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}}), "CDDDD", 0, 0},
      {"F4", path_graph(3), "CDD", 0, 0},
  };
  for (Fragment& f : cat.fragments) {
    f.gamma_r = gamma_r_tree(f.tree);
    if (f.statuses[static_cast<size_t>(f.attach)] != 'C')
      throw invariant_error("fragment " + f.name + " attach vertex is not labeled C");
  }
  const std::vector<int> want_fragment_gamma = {2, 3, 4, 2};
  for (size_t i = 0; i < cat.fragments.size(); ++i)
    if (cat.fragments[i].gamma_r != want_fragment_gamma[i])
      throw invariant_error("fragment " + cat.fragments[i].name + " has unexpected weight");

  // The eleven shapes, pinned explicitly and then certified against an
  // exhaustive scan below. Statuses are re-derived for each one.
  struct Proto {
    Graph tree;
    std::string statuses;
  };
  std::vector<Proto> protos;
  protos.push_back({path_graph(2), "DD"});
  protos.push_back({path_graph(4), "ABBA"});
  protos.push_back({path_graph(5), "DDCDD"});
  protos.push_back({graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}), "CCAAAA"});
  protos.push_back(
      {graph_from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {1, 6}}), "CCAADDA"});
  protos.push_back(
      {graph_from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {1, 6}, {6, 7}}), "CCADDADD"});
  protos.push_back(
      {graph_from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {5, 7}}), "DDCDDCAA"});
  protos.push_back({path_graph(8), "DDCDDCDD"});
  protos.push_back(
      {graph_from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 7}}), "DDCDDCDD"});
  protos.push_back(
      {graph_from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {2, 7}}),
       "DDCDDDDCA"});
  protos.push_back({graph_from_edges(
                        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {5, 8}, {8, 9}, {2, 5}}),
                    "DDCDDCDDDD"});

  std::map<std::string, size_t> proto_by_code;
  for (size_t i = 0; i < protos.size(); ++i) {
    if (derive_statuses(protos[i].tree) != protos[i].statuses)
      throw invariant_error("pinned piece " + std::to_string(i) + " has wrong statuses");
    std::string code = free_code(protos[i].tree, &protos[i].statuses);
    if (!proto_by_code.emplace(code, i).second)
      throw invariant_error("pinned pieces contain an isomorphic duplicate");
  }

  // Certify the table: the excellent trees on 2..12 vertices with at most two
  // non-flexible vertices are exactly the pinned shapes, each hit once.
  std::vector<int> hits(protos.size(), 0);
  for (int n = 2; n <= 12; ++n) {
    for_each_free_tree(n, [&](const Graph& t) {
      PartitionReport rep = partition_report(t);
      if (!rep.excellent) return;
      std::string sta = derive_statuses(t, rep);
      int k = 0;
      for (char c : sta)
        if (c == 'B' || c == 'C') ++k;
      if (k > 2) return;
      auto it = proto_by_code.find(free_code(t, &sta));
      if (it == proto_by_code.end())
        throw invariant_error("scan found an excellent tree missing from the pinned table (n = " +
                              std::to_string(n) + ")");
      ++hits[it->second];
    });
  }
  for (size_t i = 0; i < hits.size(); ++i)
    if (hits[i] != 1)
      throw invariant_error("pinned piece " + std::to_string(i) + " hit " +
                            std::to_string(hits[i]) + " times in the scan");

  // Names: K2, P4 and P5 are pinned; the rest sort by (k, order, code).
  std::vector<size_t> rest;
  std::map<std::string, size_t> named;
  for (size_t i = 0; i < protos.size(); ++i) {
    int n = protos[i].tree.n();
    if (n == 2)
      named["H1"] = i;
    else if (n == 4)
      named["H2"] = i;
    else if (n == 5)
      named["H11"] = i;
    else
      rest.push_back(i);
  }
  std::sort(rest.begin(), rest.end(), [&](size_t a, size_t b) {
    int ka = 0, kb = 0;
    for (char c : protos[a].statuses)
      if (c == 'B' || c == 'C') ++ka;
    for (char c : protos[b].statuses)
      if (c == 'B' || c == 'C') ++kb;
    if (ka != kb) return ka < kb;
    if (protos[a].tree.n() != protos[b].tree.n()) return protos[a].tree.n() < protos[b].tree.n();
    return free_code(protos[a].tree, &protos[a].statuses) <
           free_code(protos[b].tree, &protos[b].statuses);
  });
  for (size_t j = 0; j < rest.size(); ++j) named["H" + std::to_string(3 + j)] = rest[j];

  std::vector<std::string> name_of_proto(protos.size());
  for (int idx = 1; idx <= 11; ++idx) {
    std::string name = "H" + std::to_string(idx);
    name_of_proto[named.at(name)] = name;
    const Proto& p = protos[named.at(name)];
    CatalogEntry e;
    e.name = name;
    e.tree = p.tree;
    e.statuses = p.statuses;
    e.gamma_r = gamma_r_tree(p.tree);
    for (char c : p.statuses)
      if (c == 'B' || c == 'C') ++e.k;
    for (int v = 0; v < p.tree.n(); ++v)
      if (p.statuses[static_cast<size_t>(v)] == 'A') e.a_vertices.push_back(v);
    for (int v = 0; v < p.tree.n(); ++v) {
      DeletedGraph d = delete_vertices(p.tree, {v});
      e.gamma_r_minus_v.push_back(d.graph.n() == 0 ? 0 : gamma_r_forest(d.graph));
    }
    e.expansion.base = name;
    e.replay_of_catalog.resize(static_cast<size_t>(p.tree.n()));
    for (int v = 0; v < p.tree.n(); ++v) e.replay_of_catalog[static_cast<size_t>(v)] = v;
    cat.entries.push_back(std::move(e));
  }

  int stratum0 = 0, stratum1 = 0, stratum2 = 0;
  for (const CatalogEntry& e : cat.entries) (e.k == 0 ? stratum0 : e.k == 1 ? stratum1 : stratum2)++;
  if (stratum0 != 1 || stratum1 != 1 || stratum2 != 9)
    throw invariant_error("catalog strata are not 1/1/9");

  // O3 glue-point data: an A-vertex is usable when every panel product is an
  // excellent tree whose derived labeling is the pointwise union of the two
  // parts' labelings.
  for (CatalogEntry& e : cat.entries) {
    LabeledTree piece{e.tree, e.statuses};
    for (int v : e.a_vertices) {
      bool ok3 = true;
      for (const auto& [host, u] : o3_panel())
        if (!sound_labeling(coalesce_labeled(host, u, piece, v, nullptr))) ok3 = false;
      if (ok3) e.o3_vertices.push_back(v);
    }
  }

  // The O4 pieces are part of the operation's definition, like the O1
  // fragment list: the double star, the seven-vertex piece, and the
  // eight-vertex piece with two A-leaves, glued at any A-leaf. The glue
  // conditions certified below hold for every designated point but do not
  // single these pieces out (the symmetric eight-vertex base and the
  // nine-vertex piece satisfy them too), so the list itself is data.
  auto entry_mut = [&](const std::string& name) -> CatalogEntry& {
    for (CatalogEntry& e : cat.entries)
      if (e.name == name) return e;
    throw invariant_error("missing catalog entry " + name);
  };
  for (size_t pi : {size_t{3}, size_t{4}, size_t{6}}) {
    CatalogEntry& e = entry_mut(name_of_proto[pi]);
    e.o4_vertices = e.a_vertices;
  }

  {
    std::vector<int> o3_orders, o4_gammas;
    for (const CatalogEntry& e : cat.entries) {
      if (!e.o3_vertices.empty()) o3_orders.push_back(e.tree.n());
      if (e.o3_vertices != e.a_vertices)
        throw invariant_error("entry " + e.name + " has an A-vertex unusable for O3");
      if (e.o4_vertices.empty()) continue;
      o4_gammas.push_back(e.gamma_r);
      LabeledTree piece{e.tree, e.statuses};
      for (int v : e.o4_vertices) {
        if (!o4_intrinsic(e.tree, e.statuses, e.gamma_r, v))
          throw invariant_error("entry " + e.name + " fails the glue conditions at vertex " +
                                std::to_string(v));
        for (const auto& [host, u] : o4_panel())
          if (!sound_labeling(coalesce_labeled(host, u, piece, v, nullptr)))
            throw invariant_error("entry " + e.name + " has an unsound panel product at vertex " +
                                  std::to_string(v));
      }
    }
    std::sort(o3_orders.begin(), o3_orders.end());
    std::sort(o4_gammas.begin(), o4_gammas.end());
    if (o3_orders != std::vector<int>{4, 6, 7, 8, 8, 9})
      throw invariant_error("O3-capable entries are not the expected six");
    if (o4_gammas != std::vector<int>{4, 5, 6})
      throw invariant_error("O4-capable entries are not the expected three");
  }

  // Recipes: every entry that is a one-step product over H1 or the replayed
  // H11 gets its construction chain; the five that are not are the bases.
  auto resolve = [&](CatalogEntry& e, const CatalogEntry& host) -> bool {
    LabeledTree hrep = replay_impl(cat, host.expansion);
    std::vector<Step> cands;
    for (int u = 0; u < hrep.tree.n(); ++u) {
      char c = hrep.statuses[static_cast<size_t>(u)];
      if (c == 'C')
        for (const char* fname : {"F1", "F2", "F3"})
          cands.push_back({OpKind::O1, u, fname, cat.fragment(fname).attach});
      if (c == 'D') cands.push_back({OpKind::O2, u, "F4", cat.fragment("F4").attach});
    }
    for (const Step& s : cands) {
      if (hrep.tree.n() + cat.fragment(s.piece).tree.n() != e.tree.n()) continue;
      Applied a = apply_step_impl(cat, hrep, s);
      auto wit = labeled_iso(e.tree, e.statuses, a.tree.tree, a.tree.statuses);
      if (!wit) continue;
      e.expansion.base = host.expansion.base;
      e.expansion.steps = host.expansion.steps;
      e.expansion.steps.push_back(s);
      e.replay_of_catalog = *wit;
      return true;
    }
    return false;
  };
  // H11 first (it is the host of the other products), from H1.
  if (!resolve(const_cast<CatalogEntry&>(cat.entry("H11")), cat.entry("H1")))
    throw invariant_error("H11 is not a one-step product over H1");
  int products = 1;
  for (CatalogEntry& e : cat.entries) {
    if (e.name == "H11" || !e.expansion.steps.empty()) continue;
    if (resolve(e, cat.entry("H11"))) ++products;
  }
  if (products != 6) throw invariant_error("expected exactly six product entries");
  for (const CatalogEntry& e : cat.entries) {
    if (e.expansion.steps.empty()) cat.bases.push_back(e.name);
    // Certify each chain: replaying it must reproduce the entry through the
    // recorded vertex map.
    LabeledTree built = replay_impl(cat, e.expansion);
    if (built.tree.n() != e.tree.n()) throw invariant_error("entry " + e.name + " chain size mismatch");
    for (int v = 0; v < e.tree.n(); ++v)
      if (built.statuses[static_cast<size_t>(e.replay_of_catalog[static_cast<size_t>(v)])] !=
          e.statuses[static_cast<size_t>(v)])
        throw invariant_error("entry " + e.name + " chain statuses mismatch");
    for (auto [u, v] : e.tree.edges())
      if (!built.tree.has_edge(e.replay_of_catalog[static_cast<size_t>(u)],
                               e.replay_of_catalog[static_cast<size_t>(v)]))
        throw invariant_error("entry " + e.name + " chain edges mismatch");
  }
  if (cat.bases.size() != 5) throw invariant_error("expected exactly five generating bases");

  return cat;
}

}  // namespace

const CatalogEntry& Catalog::entry(const std::string& name) const {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

const Fragment& Catalog::fragment(const std::string& name) const {
  for (const Fragment& f : fragments)
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fragment: " + name);
}

bool Catalog::has_entry(const std::string& name) const {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry* Catalog::match(const Graph& tree, const std::string& statuses,
                                   std::vector<int>* catalog_to_input) const {
  for (const CatalogEntry& e : entries) {
    if (e.tree.n() != tree.n()) continue;
    auto wit = labeled_iso(e.tree, e.statuses, tree, statuses);
    if (!wit) continue;
    if (catalog_to_input) *catalog_to_input = *wit;
    return &e;
  }
  return nullptr;
}

const Catalog& catalog() {
  static const Catalog cat = build_catalog();
  return cat;
}

Applied apply_step(const LabeledTree& host, const Step& s) {
  return apply_step_impl(catalog(), host, s);
}

LabeledTree base_tree(const std::string& name) { return base_tree_impl(catalog(), name); }

LabeledTree replay(const TSequence& seq) { return replay_impl(catalog(), seq); }

}  // namespace rdx

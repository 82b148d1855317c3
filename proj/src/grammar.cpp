#include "rdx/grammar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rdx/partition.hpp"

namespace rdx {

int labeling_violation(const LabeledTree& lt) {
  const Graph& g = lt.tree;
  const std::string& s = lt.statuses;
  if (g.n() != static_cast<int>(s.size()))
    throw std::invalid_argument("labeled tree has mismatched status string");
  for (int v = 0; v < g.n(); ++v) {
    int a = 0, b = 0, d = 0;
    for (int w : g.neighbors(v)) {
      char c = s[static_cast<size_t>(w)];
      a += c == 'A';
      b += c == 'B';
      d += c == 'D';
    }
    switch (s[static_cast<size_t>(v)]) {
      case 'A':
        if (a != 0) return v;
        break;
      case 'B':
        if (g.degree(v) != 2 || b != 1 || a != 1) return v;
        break;
      case 'C':
        if (a + d != 2) return v;
        if (g.degree(v) == 2 && d != 2) return v;
        break;
      case 'D':
        if (d != 1) return v;
        break;
      default:
        return v;
    }
  }
  return -1;
}

namespace {

struct Peel {
  OpKind op;
  std::string piece;
  int piece_vertex;
  int host_orig;
  std::vector<int> m_orig;  // piece vertex -> original input vertex
};

struct State {
  LabeledTree cur;
  std::vector<int> orig;  // current vertex -> original input vertex
  std::vector<Peel> peels;
};

[[noreturn]] void falsified(const std::string& what) {
  throw invariant_error("decomposition invariant failed: " + what);
}

// Validates that m embeds the labeled piece into the current tree exactly
// (statuses, edges, and a clean one-vertex boundary), records the peel in
// original coordinates, and deletes the peeled vertices. For the coalescing
// operations m[pv] must be the host itself; for the edge operations the host
// lies outside the piece and only the attach vertex may touch it.
void do_peel(State& st, OpKind op, const std::string& piece_name, const LabeledTree& piece,
             int pv, int host_cur, const std::vector<int>& m) {
  const Graph& g = st.cur.tree;
  bool edge_op = (op == OpKind::O1 || op == OpKind::O2);
  if (static_cast<int>(m.size()) != piece.tree.n()) falsified(piece_name + " embedding size");
  std::vector<char> in_piece(static_cast<size_t>(g.n()), 0);
  for (int c : m) {
    if (c < 0 || c >= g.n() || in_piece[static_cast<size_t>(c)])
      falsified(piece_name + " embedding is not injective");
    in_piece[static_cast<size_t>(c)] = 1;
  }
  if (edge_op) {
    if (in_piece[static_cast<size_t>(host_cur)]) falsified(piece_name + " host inside piece");
  } else if (m[static_cast<size_t>(pv)] != host_cur) {
    falsified(piece_name + " merge point mismatch");
  }
  for (int w = 0; w < piece.tree.n(); ++w) {
    if (!edge_op && w == pv) continue;
    if (piece.statuses[static_cast<size_t>(w)] !=
        st.cur.statuses[static_cast<size_t>(m[static_cast<size_t>(w)])])
      falsified(piece_name + " statuses at piece vertex " + std::to_string(w));
  }
  for (auto [a, b] : piece.tree.edges())
    if (!g.has_edge(m[static_cast<size_t>(a)], m[static_cast<size_t>(b)]))
      falsified(piece_name + " edge missing");
  // The image spans piece.n vertices of a tree and carries piece.n - 1 piece
  // edges, so the induced subgraph is exactly the piece; only the boundary
  // remains to check.
  std::vector<int> removed;
  for (int w = 0; w < piece.tree.n(); ++w)
    if (edge_op || w != pv) removed.push_back(m[static_cast<size_t>(w)]);
  int attach_touches = 0;
  for (int r : removed) {
    for (int w : g.neighbors(r)) {
      if (w == host_cur && edge_op) {
        if (r != m[static_cast<size_t>(pv)]) falsified(piece_name + " extra edge to host");
        ++attach_touches;
        continue;
      }
      if (!in_piece[static_cast<size_t>(w)]) falsified(piece_name + " piece not hanging cleanly");
    }
  }
  if (edge_op && attach_touches != 1) falsified(piece_name + " attach edge missing");

  Peel p;
  p.op = op;
  p.piece = piece_name;
  p.piece_vertex = pv;
  p.host_orig = st.orig[static_cast<size_t>(host_cur)];
  p.m_orig.reserve(m.size());
  for (int c : m) p.m_orig.push_back(st.orig[static_cast<size_t>(c)]);
  st.peels.push_back(std::move(p));

  DeletedGraph d = delete_vertices(g, removed);
  if (!is_tree(d.graph)) falsified(piece_name + " remainder is not a tree");
  std::string nsta(static_cast<size_t>(d.graph.n()), '?');
  std::vector<int> norig(static_cast<size_t>(d.graph.n()));
  for (int v = 0; v < d.graph.n(); ++v) {
    int old = d.old_of_new[static_cast<size_t>(v)];
    nsta[static_cast<size_t>(v)] = st.cur.statuses[static_cast<size_t>(old)];
    norig[static_cast<size_t>(v)] = st.orig[static_cast<size_t>(old)];
  }
  st.cur = LabeledTree{std::move(d.graph), std::move(nsta)};
  st.orig = std::move(norig);
}

LabeledTree entry_piece(const CatalogEntry& e) { return {e.tree, e.statuses}; }

LabeledTree fragment_piece(const Fragment& f) { return {f.tree, f.statuses}; }

// The two eight-vertex pieces are identified by shape, not by name: their
// names depend on the canonical-code order within the stratum.
const CatalogEntry& eight_symmetric() {
  static const CatalogEntry* e = [] {
    Graph t(8);
    for (auto [u, v] :
         {std::pair{0, 1}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {1, 6}, {6, 7}})
      t.add_edge(u, v);
    const CatalogEntry* p = catalog().match(t, "CCADDADD");
    if (!p) throw invariant_error("symmetric eight-vertex piece missing from catalog");
    return p;
  }();
  return *e;
}

const CatalogEntry& eight_two_a() {
  static const CatalogEntry* e = [] {
    Graph t(8);
    for (auto [u, v] :
         {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {5, 7}})
      t.add_edge(u, v);
    const CatalogEntry* p = catalog().match(t, "DDCDDCAA");
    if (!p) throw invariant_error("two-A eight-vertex piece missing from catalog");
    return p;
  }();
  return *e;
}

// One peeling round on a tree that matches no catalog entry: dispatch on the
// statuses along a diametral path x1, x2, ... and detach the piece hanging at
// its near end. Every branch encodes a configuration that is forced for
// structurally labeled excellent trees; anything else is a falsified theorem.
void peel_once(State& st) {
  const Catalog& cat = catalog();
  const Graph& g = st.cur.tree;
  auto sta = [&](int v) { return st.cur.statuses[static_cast<size_t>(v)]; };
  std::vector<int> path = diametral_path(g);
  auto px = [&](size_t i) -> int {
    if (i >= path.size()) falsified("diametral path too short");
    return path[i];
  };
  auto require = [&](bool cond, const char* what) {
    if (!cond) falsified(what);
  };
  // Neighbors of v outside excl, ascending.
  auto others = [&](int v, std::vector<int> excl) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (std::find(excl.begin(), excl.end(), w) == excl.end()) out.push_back(w);
    return out;
  };
  auto is_leaf = [&](int v) { return g.degree(v) == 1; };

  int x1 = px(0), x2 = px(1), x3 = px(2);

  if (sta(x1) == 'A') {
    if (sta(x2) == 'B') {
      // A-B-B-A chain at the end of the path.
      int x4 = px(3);
      require(g.degree(x2) == 2 && sta(x3) == 'B' && g.degree(x3) == 2 && sta(x4) == 'A',
              "A-leaf on a B-stem must head an A-B-B-A chain");
      do_peel(st, OpKind::O3, "H2", entry_piece(cat.entry("H2")), 0, x4, {x4, x3, x2, x1});
      return;
    }
    require(sta(x2) == 'C' && g.degree(x2) == 3, "A-leaf stem must be B or a C of degree 3");
    auto off2 = others(x2, {x1, x3});
    require(off2.size() == 1, "C stem off-path count");
    int x21 = off2[0];
    require(is_leaf(x21) && sta(x21) == 'A', "C stem carries one more A-leaf");
    require(sta(x3) == 'C', "after an A-leaf's C-stem comes another C");
    if (g.degree(x3) >= 4) {
      do_peel(st, OpKind::O1, "F1", fragment_piece(cat.fragment("F1")), 0, x3, {x2, x1, x21});
      return;
    }
    require(g.degree(x3) == 3, "inner C degree");
    int x4 = px(3);
    auto off3 = others(x3, {x2, x4});
    require(off3.size() == 1, "inner C off-path count");
    int x31 = off3[0];
    if (sta(x4) == 'A') {
      if (is_leaf(x31)) {
        require(sta(x31) == 'A', "leaf beside two C-centers is A");
        do_peel(st, OpKind::O3, "H3", entry_piece(cat.entry("H3")), 5, x4,
                {x2, x3, x1, x21, x31, x4});
        return;
      }
      require(sta(x31) == 'D' && g.degree(x31) == 2, "off-path branch is a D-pair stem");
      int lf = others(x31, {x3})[0];
      require(is_leaf(lf) && sta(lf) == 'D', "D-pair stem carries a D-leaf");
      do_peel(st, OpKind::O3, "H4", entry_piece(cat.entry("H4")), 6, x4,
              {x2, x3, x1, x21, x31, lf, x4});
      return;
    }
    require(sta(x4) == 'D', "fourth path vertex after A,C,C is A or D");
    if (is_leaf(x31)) {
      require(sta(x31) == 'A', "leaf beside two C-centers is A");
      do_peel(st, OpKind::O4, "H3", entry_piece(cat.entry("H3")), 5, x4,
              {x2, x3, x1, x21, x31, x4});
      return;
    }
    require(sta(x31) == 'D' && g.degree(x31) == 2, "off-path branch is a D-pair stem");
    {
      int lf = others(x31, {x3})[0];
      require(is_leaf(lf) && sta(lf) == 'D', "D-pair stem carries a D-leaf");
    }
    do_peel(st, OpKind::O1, "F1", fragment_piece(cat.fragment("F1")), 0, x3, {x2, x1, x21});
    return;
  }

  require(sta(x1) == 'D', "path end is A or D");
  require(g.degree(x2) == 2 && sta(x2) == 'D' && sta(x3) == 'C',
          "D-leaf heads a D-D pair followed by a C");

  if (g.degree(x3) == 2) {
    int x4 = px(3);
    require(sta(x4) == 'D', "degree-2 C sits between two D");
    do_peel(st, OpKind::O2, "F4", fragment_piece(cat.fragment("F4")), 0, x4, {x3, x2, x1});
    return;
  }

  if (g.degree(x3) >= 4) {
    // Some further C-neighbor of x3 carries exactly two A-leaves.
    int x4 = px(3);
    int y = -1;
    for (int w : others(x3, {x2, x4}))
      if (sta(w) == 'C') {
        y = w;
        break;
      }
    require(y != -1, "high-degree C has a C-neighbor off the path");
    require(g.degree(y) == 3, "off-path C stem degree");
    auto zs = others(y, {x3});
    require(zs.size() == 2 && is_leaf(zs[0]) && is_leaf(zs[1]) && sta(zs[0]) == 'A' &&
                sta(zs[1]) == 'A',
            "off-path C stem carries two A-leaves");
    do_peel(st, OpKind::O1, "F1", fragment_piece(cat.fragment("F1")), 0, x3, {y, zs[0], zs[1]});
    return;
  }

  require(g.degree(x3) == 3, "inner C degree");
  int x4 = px(3);
  int x31 = others(x3, {x2, x4})[0];

  if (sta(x4) == 'A' || sta(x4) == 'D') {
    require(sta(x31) == 'C' && g.degree(x31) == 3, "third off-path branch is a two-leaf C stem");
    auto zs = others(x31, {x3});
    require(zs.size() == 2 && is_leaf(zs[0]) && is_leaf(zs[1]) && sta(zs[0]) == 'A' &&
                sta(zs[1]) == 'A',
            "two-leaf C stem statuses");
    do_peel(st, sta(x4) == 'A' ? OpKind::O3 : OpKind::O4, "H4", entry_piece(cat.entry("H4")), 6,
            x4, {x31, x3, zs[0], zs[1], x2, x1, x4});
    return;
  }
  require(sta(x4) == 'C', "fourth path vertex status");

  if (sta(x31) == 'A') {
    require(is_leaf(x31), "A off-path vertex is a leaf");
    bool detach_f2 = false;
    int x5 = -1, x41 = -1;
    if (g.degree(x4) >= 4) {
      detach_f2 = true;
    } else {
      require(g.degree(x4) == 3, "C path vertex degree");
      x5 = px(4);
      auto off4 = others(x4, {x3, x5});
      require(off4.size() == 1, "fourth vertex off-path count");
      x41 = off4[0];
      detach_f2 = (sta(x5) == 'D' && sta(x41) == 'D');
    }
    if (detach_f2) {
      do_peel(st, OpKind::O1, "F2", fragment_piece(cat.fragment("F2")), 2, x4, {x1, x2, x3, x31});
      return;
    }
    if (sta(x41) == 'A') {
      require(is_leaf(x41), "A off-path vertex is a leaf");
      require(sta(x5) == 'A' || sta(x5) == 'D', "fifth path vertex status");
      do_peel(st, sta(x5) == 'A' ? OpKind::O3 : OpKind::O4, "H4", entry_piece(cat.entry("H4")), 2,
              x5, {x4, x3, x5, x41, x2, x1, x31});
      return;
    }
    require(sta(x41) == 'D' && sta(x5) == 'A', "mixed fifth-vertex statuses");
    require(g.degree(x41) == 2, "off-path branch is a D-pair stem");
    int lf4 = others(x41, {x4})[0];
    require(is_leaf(lf4) && sta(lf4) == 'D', "D-pair stem carries a D-leaf");
    const CatalogEntry& sym = eight_symmetric();
    do_peel(st, OpKind::O3, sym.name, entry_piece(sym), 2, x5,
            {x4, x3, x5, x41, lf4, x31, x2, x1});
    return;
  }

  require(sta(x31) == 'D' && g.degree(x31) == 2, "off-path branch is a D-pair stem");
  int lf3 = others(x31, {x3})[0];
  require(is_leaf(lf3) && sta(lf3) == 'D', "D-pair stem carries a D-leaf");
  {
    bool detach_f3 = false;
    int x5 = -1, x41 = -1;
    if (g.degree(x4) >= 4) {
      detach_f3 = true;
    } else {
      require(g.degree(x4) == 3, "C path vertex degree");
      x5 = px(4);
      auto off4 = others(x4, {x3, x5});
      require(off4.size() == 1, "fourth vertex off-path count");
      x41 = off4[0];
      detach_f3 = (sta(x5) == 'D' && sta(x41) == 'D');
    }
    if (detach_f3) {
      do_peel(st, OpKind::O1, "F3", fragment_piece(cat.fragment("F3")), 0, x4,
              {x3, x2, x1, x31, lf3});
      return;
    }
    if (sta(x41) == 'A') {
      require(is_leaf(x41), "A off-path vertex is a leaf");
      require(sta(x5) == 'A' || sta(x5) == 'D', "fifth path vertex status");
      const CatalogEntry& two_a = eight_two_a();
      do_peel(st, sta(x5) == 'A' ? OpKind::O3 : OpKind::O4, two_a.name, entry_piece(two_a), 6, x5,
              {x1, x2, x3, x31, lf3, x4, x5, x41});
      return;
    }
    require(sta(x41) == 'D' && sta(x5) == 'A', "mixed fifth-vertex statuses");
    require(g.degree(x41) == 2, "off-path branch is a D-pair stem");
    int lf4 = others(x41, {x4})[0];
    require(is_leaf(lf4) && sta(lf4) == 'D', "D-pair stem carries a D-leaf");
    do_peel(st, OpKind::O3, "H9", entry_piece(cat.entry("H9")), 8, x5,
            {x1, x2, x3, x31, lf3, lf4, x41, x4, x5});
    return;
  }
}

}  // namespace

Recognition recognize(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("recognition needs a tree");
  if (tree.n() < 2) throw std::invalid_argument("recognition needs order at least 2");
  PartitionReport rep = partition_report(tree);
  Recognition out;
  if (!rep.excellent) {
    out.witness = class_members(rep, "0").front();
    out.reason = "vertex " + std::to_string(out.witness) +
                 " attains only 0 across minimum functions";
    return out;
  }
  std::string input_statuses = derive_statuses(tree, rep);
  State st;
  st.cur = LabeledTree{tree, input_statuses};
  st.orig.resize(static_cast<size_t>(tree.n()));
  std::iota(st.orig.begin(), st.orig.end(), 0);
  {
    int bad = labeling_violation(st.cur);
    if (bad != -1)
      throw invariant_error("excellent tree violates the structural labeling at vertex " +
                            std::to_string(bad));
  }

  const Catalog& cat = catalog();
  const CatalogEntry* base = nullptr;
  std::vector<int> cmap;
  for (;;) {
    base = cat.match(st.cur.tree, st.cur.statuses, &cmap);
    if (base) break;
    peel_once(st);
  }

  // Rebuild: the matched entry's own chain first, then the peels in reverse,
  // translating host vertices through the accumulated replay map.
  TSequence seq = base->expansion;
  std::vector<int> replay_of_orig(static_cast<size_t>(tree.n()), -1);
  for (int c = 0; c < base->tree.n(); ++c)
    replay_of_orig[static_cast<size_t>(st.orig[static_cast<size_t>(cmap[static_cast<size_t>(c)])])] =
        base->replay_of_catalog[static_cast<size_t>(c)];
  LabeledTree lt = base_tree(seq.base);
  for (const Step& s : seq.steps) lt = apply_step(lt, s).tree;
  for (auto it = st.peels.rbegin(); it != st.peels.rend(); ++it) {
    int host_replay = replay_of_orig[static_cast<size_t>(it->host_orig)];
    if (host_replay < 0) throw invariant_error("peel host escaped the replay map");
    Step s{it->op, host_replay, it->piece, it->piece_vertex};
    Applied a = apply_step(lt, s);
    lt = std::move(a.tree);
    for (size_t w = 0; w < it->m_orig.size(); ++w) {
      int& slot = replay_of_orig[static_cast<size_t>(it->m_orig[w])];
      int val = a.piece_map[w];
      if (slot != -1 && slot != val) throw invariant_error("replay maps disagree");
      slot = val;
    }
    seq.steps.push_back(s);
  }

  if (lt.tree.n() != tree.n() || lt.tree.m() != tree.m())
    throw invariant_error("replayed certificate has the wrong size");
  for (int v = 0; v < tree.n(); ++v) {
    int r = replay_of_orig[static_cast<size_t>(v)];
    if (r < 0 || lt.statuses[static_cast<size_t>(r)] != input_statuses[static_cast<size_t>(v)])
      throw invariant_error("replayed certificate mislabels vertex " + std::to_string(v));
  }
  for (auto [u, v] : tree.edges())
    if (!lt.tree.has_edge(replay_of_orig[static_cast<size_t>(u)],
                          replay_of_orig[static_cast<size_t>(v)]))
      throw invariant_error("replayed certificate misses an edge");

  out.accepted = true;
  out.labeled = LabeledTree{tree, std::move(input_statuses)};
  out.cert = std::move(seq);
  out.input_of_replay.assign(static_cast<size_t>(tree.n()), -1);
  for (int v = 0; v < tree.n(); ++v)
    out.input_of_replay[static_cast<size_t>(replay_of_orig[static_cast<size_t>(v)])] = v;
  return out;
}

namespace {

void add_candidates(const Catalog& cat, const LabeledTree& host, OpKind op, int max_n,
                    std::vector<Step>& cands) {
  auto fits = [&](int piece_n, bool merges) {
    return max_n <= 0 || host.tree.n() + piece_n - (merges ? 1 : 0) <= max_n;
  };
  auto frag_steps = [&](int u, std::initializer_list<const char*> names) {
    for (const char* name : names) {
      const Fragment& f = cat.fragment(name);
      if (fits(f.tree.n(), false)) cands.push_back({op, u, name, f.attach});
    }
  };
  for (int u = 0; u < host.tree.n(); ++u) {
    char c = host.statuses[static_cast<size_t>(u)];
    switch (op) {
      case OpKind::O1:
        if (c == 'C') frag_steps(u, {"F1", "F2", "F3"});
        break;
      case OpKind::O5:
        if (c == 'C') frag_steps(u, {"F1"});
        break;
      case OpKind::O9:
        if (c == 'C') frag_steps(u, {"F3"});
        break;
      case OpKind::O2:
      case OpKind::O10:
        if (c == 'D') frag_steps(u, {"F4"});
        break;
      case OpKind::O3:
      case OpKind::O6:
      case OpKind::O7:
        if (c == 'A')
          for (const CatalogEntry& e : cat.entries) {
            if (op == OpKind::O6 && e.name != "H2" && e.name != "H3") continue;
            if (op == OpKind::O7 && e.name != "H2") continue;
            if (!fits(e.tree.n(), true)) continue;
            for (int pv : e.o3_vertices) cands.push_back({op, u, e.name, pv});
          }
        break;
      case OpKind::O4:
        if (c == 'D')
          for (const CatalogEntry& e : cat.entries) {
            if (!fits(e.tree.n(), true)) continue;
            for (int pv : e.o4_vertices) cands.push_back({op, u, e.name, pv});
          }
        break;
      case OpKind::O8:
        if (c == 'A')
          for (int hn = 2; hn <= 3; ++hn) {
            std::string piece = "corona:p:" + std::to_string(hn);
            if (!fits(3 * hn, true)) continue;
            // Corona over a path: vertices 0..hn-1 are stems, the rest leaves.
            for (int pv = hn; pv < 3 * hn; ++pv) cands.push_back({op, u, piece, pv});
          }
        break;
    }
  }
}

}  // namespace

Generated generate(uint64_t seed, const GenerateOptions& opt) {
  const Catalog& cat = catalog();
  if (opt.steps < 0) throw std::invalid_argument("generate: negative step count");
  Rng rng(seed);
  std::string base = opt.base;
  if (base.empty())
    base = cat.bases[static_cast<size_t>(rng.below(static_cast<int>(cat.bases.size())))];
  Generated out;
  out.cert.base = base;
  out.tree = base_tree(base);  // any catalog entry or corona shorthand
  for (int i = 0; i < opt.steps; ++i) {
    std::vector<Step> cands;
    for (OpKind op : opt.allowed) add_candidates(cat, out.tree, op, opt.max_n, cands);
    if (cands.empty()) break;
    Step s = cands[static_cast<size_t>(rng.below(static_cast<int>(cands.size())))];
    out.tree = apply_step(out.tree, s).tree;
    out.cert.steps.push_back(s);
  }
  return out;
}

Json tsequence_json(const TSequence& seq) {
  Json steps = Json::array();
  for (const Step& s : seq.steps)
    steps.push_back(Json{{"op", op_name(s.op)},
                         {"host_vertex", s.host_vertex},
                         {"piece", s.piece},
                         {"piece_vertex", s.piece_vertex}});
  return Json{{"base", seq.base}, {"steps", std::move(steps)}};
}

TSequence tsequence_from_json(const Json& j) {
  try {
    TSequence seq;
    seq.base = j.at("base").get<std::string>();
    for (const Json& js : j.at("steps")) {
      Step s;
      s.op = op_from_name(js.at("op").get<std::string>());
      s.host_vertex = js.at("host_vertex").get<int>();
      s.piece = js.at("piece").get<std::string>();
      s.piece_vertex = js.at("piece_vertex").get<int>();
      seq.steps.push_back(std::move(s));
    }
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad certificate: ") + e.what());
  }
}

std::string to_dot(const LabeledTree& lt) {
  if (lt.tree.n() != static_cast<int>(lt.statuses.size()))
    throw std::invalid_argument("labeled tree has mismatched status string");
  std::ostringstream os;
  os << "graph rdx {\n";
  for (int v = 0; v < lt.tree.n(); ++v) {
    const char* shape = nullptr;
    switch (lt.statuses[static_cast<size_t>(v)]) {
      case 'A': shape = "circle"; break;
      case 'B': shape = "triangle"; break;
      case 'C': shape = "diamond"; break;
      case 'D': shape = "doublecircle"; break;
      default: throw std::invalid_argument("unknown status character");
    }
    os << "  " << v << " [shape=" << shape << "];\n";
  }
  for (auto [u, v] : lt.tree.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_labeled(const LabeledTree& lt) {
  if (lt.tree.n() != static_cast<int>(lt.statuses.size()))
    throw std::invalid_argument("labeled tree has mismatched status string");
  return format_graph(lt.tree) + "statuses " + lt.statuses + "\n";
}

}  // namespace rdx

#include "rdx/classes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "rdx/canonical.hpp"
#include "rdx/roman.hpp"

namespace rdx {

std::string r_signature(const Graph& g) {
  PartitionReport rep = partition_report(g);
  std::string out = "R_{";
  bool first = true;
  for (const std::string& name : class_names()) {
    if (class_members(rep, name).empty()) continue;
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

std::string r_signature_from_statuses(const std::string& statuses) {
  bool a = false, bc = false, d = false;
  for (char c : statuses) {
    switch (c) {
      case 'A': a = true; break;
      case 'B':
      case 'C': bc = true; break;
      case 'D': d = true; break;
      default: throw std::invalid_argument("unknown status character");
    }
  }
  std::string out = "R_{";
  bool first = true;
  auto add = [&](const char* name) {
    if (!first) out += ",";
    out += name;
    first = false;
  };
  if (a) add("01");
  if (bc) add("02");
  if (d) add("012");
  return out + "}";
}

bool is_corona_tree(const Graph& t) {
  if (!is_tree(t) || t.n() < 6) return false;
  for (int v = 0; v < t.n(); ++v) {
    if (t.degree(v) == 1) continue;
    int leaves = 0;
    for (int w : t.neighbors(v)) leaves += t.degree(w) == 1;
    if (leaves != 2 || t.degree(v) < 3) return false;
  }
  return true;
}

std::string corona_statuses(const Graph& t) {
  if (!is_corona_tree(t)) throw std::invalid_argument("not a corona tree");
  std::string sta(static_cast<size_t>(t.n()), 'C');
  for (int v = 0; v < t.n(); ++v)
    if (t.degree(v) == 1) sta[static_cast<size_t>(v)] = 'A';
  return sta;
}

std::string corona_shorthand(const Graph& t) {
  if (!is_corona_tree(t)) throw std::invalid_argument("not a corona tree");
  std::vector<int> spine;
  std::vector<int> local(static_cast<size_t>(t.n()), -1);
  for (int v = 0; v < t.n(); ++v)
    if (t.degree(v) > 1) {
      local[static_cast<size_t>(v)] = static_cast<int>(spine.size());
      spine.push_back(v);
    }
  std::string out = "corona:";
  bool first = true;
  for (int v : spine)
    for (int w : t.neighbors(v)) {
      if (w <= v || t.degree(w) == 1) continue;
      if (!first) out += ",";
      out += std::to_string(local[static_cast<size_t>(v)]) + "-" +
             std::to_string(local[static_cast<size_t>(w)]);
      first = false;
    }
  return out;
}

namespace {

[[noreturn]] void family_falsified(const std::string& what) {
  throw invariant_error("family decomposition invariant failed: " + what);
}

// Pointwise exactness of a rebuilt certificate against the input: bijective
// vertex map, statuses equal, every input edge present (tree sizes equal, so
// the edge sets coincide).
void check_replay_exact(const Graph& input, const std::string& input_statuses,
                        const LabeledTree& lt, const std::vector<int>& replay_of_input) {
  if (lt.tree.n() != input.n() || lt.tree.m() != input.m())
    family_falsified("rebuilt certificate has the wrong size");
  for (int v = 0; v < input.n(); ++v) {
    int r = replay_of_input[static_cast<size_t>(v)];
    if (r < 0 || lt.statuses[static_cast<size_t>(r)] != input_statuses[static_cast<size_t>(v)])
      family_falsified("rebuilt certificate mislabels vertex " + std::to_string(v));
  }
  for (auto [u, v] : input.edges())
    if (!lt.tree.has_edge(replay_of_input[static_cast<size_t>(u)],
                          replay_of_input[static_cast<size_t>(v)]))
      family_falsified("rebuilt certificate misses an edge");
}

}  // namespace

ClassRecognition recognize_r0102(const Graph& tree) {
  Recognition r = recognize(tree);
  ClassRecognition out;
  if (!r.accepted) {
    out.reason = r.reason;
    return out;
  }
  std::string sig = r_signature_from_statuses(r.labeled.statuses);
  if (sig != "R_{01,02}") {
    out.reason = "value classes are " + sig;
    return out;
  }
  // With no flexible-pair/full-class vertices anywhere, the certificate is
  // forced into the restricted shape; anything else falsifies the family law.
  TSequence cert = std::move(r.cert);
  if (cert.base != "H2" && cert.base != "H3")
    family_falsified("two-class tree decomposed to base " + cert.base);
  for (Step& s : cert.steps) {
    if (s.op == OpKind::O1 && s.piece == "F1")
      s.op = OpKind::O5;
    else if (s.op == OpKind::O3 && (s.piece == "H2" || s.piece == "H3"))
      s.op = OpKind::O6;
    else
      family_falsified("two-class tree used " + op_name(s.op) + " with piece " + s.piece);
  }
  out.accepted = true;
  out.cert = std::move(cert);
  return out;
}

ClassRecognition recognize_r0102_corona(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("recognition needs a tree");
  if (tree.n() < 2) throw std::invalid_argument("recognition needs order at least 2");
  PartitionReport rep = partition_report(tree);
  ClassRecognition out;
  if (!rep.excellent) {
    out.reason = "not excellent";
    return out;
  }
  std::string sta = derive_statuses(tree, rep);
  std::string sig = r_signature_from_statuses(sta);
  if (sig != "R_{01,02}") {
    out.reason = "value classes are " + sig;
    return out;
  }
  if (labeling_violation({tree, sta}) != -1)
    family_falsified("two-class tree violates the structural labeling");
  int n = tree.n();
  auto is = [&](int v, char c) { return sta[static_cast<size_t>(v)] == c; };

  // Elements: corona units (components of adjacent C's plus their A-neighbors)
  // and four-vertex chains (B-pairs plus their A-ends). Elements cover every
  // edge and pairwise share at most one A-vertex, so they hang together in a
  // tree pattern glued at shared A's.
  struct Element {
    bool unit = false;
    std::vector<int> stems;  // unit: spine in ascending order
    int a1 = -1, b1 = -1, b2 = -1, a2 = -1;  // chain
  };
  std::vector<Element> elements;
  {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (!is(v, 'C') || seen[static_cast<size_t>(v)]) continue;
      Element e;
      e.unit = true;
      std::queue<int> q;
      q.push(v);
      seen[static_cast<size_t>(v)] = 1;
      while (!q.empty()) {
        int c = q.front();
        q.pop();
        e.stems.push_back(c);
        for (int w : tree.neighbors(c))
          if (is(w, 'C') && !seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            q.push(w);
          }
      }
      std::sort(e.stems.begin(), e.stems.end());
      elements.push_back(std::move(e));
    }
    for (int v = 0; v < n; ++v) {
      if (!is(v, 'B')) continue;
      int partner = -1, aend = -1;
      for (int w : tree.neighbors(v)) {
        if (is(w, 'B')) partner = w;
        if (is(w, 'A')) aend = w;
      }
      if (partner < 0 || aend < 0) family_falsified("ill-formed B-pair");
      if (partner < v) continue;  // one element per pair
      Element e;
      e.b1 = v;
      e.b2 = partner;
      e.a1 = aend;
      for (int w : tree.neighbors(partner))
        if (is(w, 'A')) e.a2 = w;
      if (e.a2 < 0) family_falsified("ill-formed B-pair");
      elements.push_back(std::move(e));
    }
  }
  if (elements.empty()) family_falsified("no elements in a two-class tree");

  // A-vertex -> incident element ids.
  std::vector<std::vector<int>> incidence(static_cast<size_t>(n));
  auto unit_leaf_pairs = [&](const Element& e) {
    // For each stem in order, its two A-neighbors ascending.
    std::vector<std::pair<int, int>> out_pairs;
    for (int s : e.stems) {
      std::vector<int> as;
      for (int w : tree.neighbors(s))
        if (is(w, 'A')) as.push_back(w);
      if (as.size() != 2) family_falsified("stem without exactly two A-neighbors");
      out_pairs.emplace_back(as[0], as[1]);
    }
    return out_pairs;
  };
  for (size_t i = 0; i < elements.size(); ++i) {
    const Element& e = elements[i];
    if (e.unit) {
      for (auto [x, y] : unit_leaf_pairs(e)) {
        incidence[static_cast<size_t>(x)].push_back(static_cast<int>(i));
        incidence[static_cast<size_t>(y)].push_back(static_cast<int>(i));
      }
    } else {
      incidence[static_cast<size_t>(e.a1)].push_back(static_cast<int>(i));
      incidence[static_cast<size_t>(e.a2)].push_back(static_cast<int>(i));
    }
  }

  // Serialize a unit as a corona shorthand over its spine (local ids follow
  // the ascending stem order).
  auto unit_shorthand = [&](const Element& e) {
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < e.stems.size(); ++i)
      local[static_cast<size_t>(e.stems[i])] = static_cast<int>(i);
    std::string s = "corona:";
    bool first = true;
    for (int v : e.stems)
      for (int w : tree.neighbors(v)) {
        if (w <= v || !is(w, 'C')) continue;
        if (!first) s += ",";
        s += std::to_string(local[static_cast<size_t>(v)]) + "-" +
             std::to_string(local[static_cast<size_t>(w)]);
        first = false;
      }
    if (e.stems.size() < 2) family_falsified("unit with a single stem");
    return s;
  };

  TSequence cert;
  LabeledTree lt;
  std::vector<int> replay_of_input(static_cast<size_t>(n), -1);
  std::vector<char> placed(elements.size(), 0);
  std::queue<int> ready;  // elements laid down, A's available for gluing

  // Lay an element's vertices into replay coordinates. For a unit, `slots`
  // maps piece coordinates (spine 0..k-1, then leaf pairs) through `image`.
  auto lay_unit = [&](const Element& e, const std::vector<int>& image, int skip_input) {
    auto pairs = unit_leaf_pairs(e);
    int k = static_cast<int>(e.stems.size());
    for (int i = 0; i < k; ++i) {
      replay_of_input[static_cast<size_t>(e.stems[static_cast<size_t>(i)])] =
          image[static_cast<size_t>(i)];
    }
    for (int i = 0; i < k; ++i) {
      auto [x, y] = pairs[static_cast<size_t>(i)];
      // The shared A (if any) was assigned the first leaf slot of its stem.
      int first = x, second = y;
      if (y == skip_input) std::swap(first, second);
      if (first != skip_input)
        replay_of_input[static_cast<size_t>(first)] = image[static_cast<size_t>(k + 2 * i)];
      if (second != skip_input)
        replay_of_input[static_cast<size_t>(second)] = image[static_cast<size_t>(k + 2 * i + 1)];
    }
  };

  // Root element: a unit when one exists (units precede chains), else the
  // tree is a chain arrangement and the first chain plays the P4 base.
  {
    const Element& root = elements[0];
    if (root.unit) {
      cert.base = unit_shorthand(root);
      lt = base_tree(cert.base);
      std::vector<int> identity(static_cast<size_t>(lt.tree.n()));
      std::iota(identity.begin(), identity.end(), 0);
      lay_unit(root, identity, -1);
    } else {
      cert.base = "H2";
      lt = base_tree("H2");
      replay_of_input[static_cast<size_t>(root.a1)] = 0;
      replay_of_input[static_cast<size_t>(root.b1)] = 1;
      replay_of_input[static_cast<size_t>(root.b2)] = 2;
      replay_of_input[static_cast<size_t>(root.a2)] = 3;
    }
    placed[0] = 1;
    ready.push(0);
  }

  while (!ready.empty()) {
    int ei = ready.front();
    ready.pop();
    const Element& e = elements[static_cast<size_t>(ei)];
    std::vector<int> as;
    if (e.unit) {
      for (auto [x, y] : unit_leaf_pairs(e)) {
        as.push_back(x);
        as.push_back(y);
      }
      std::sort(as.begin(), as.end());
    } else {
      as = {std::min(e.a1, e.a2), std::max(e.a1, e.a2)};
    }
    for (int a : as) {
      for (int ni : incidence[static_cast<size_t>(a)]) {
        if (placed[static_cast<size_t>(ni)]) continue;
        placed[static_cast<size_t>(ni)] = 1;
        const Element& child = elements[static_cast<size_t>(ni)];
        int host = replay_of_input[static_cast<size_t>(a)];
        if (host < 0) family_falsified("shared A-vertex not yet placed");
        if (!child.unit) {
          int bn = child.b1, bf = child.b2, af = child.a2;
          if (child.a1 != a) {
            bn = child.b2;
            bf = child.b1;
            af = child.a1;
          }
          Step s{OpKind::O7, host, "H2", 0};
          Applied ap = apply_step(lt, s);
          lt = std::move(ap.tree);
          replay_of_input[static_cast<size_t>(bn)] = ap.piece_map[1];
          replay_of_input[static_cast<size_t>(bf)] = ap.piece_map[2];
          replay_of_input[static_cast<size_t>(af)] = ap.piece_map[3];
          cert.steps.push_back(s);
        } else {
          std::string piece = unit_shorthand(child);
          int k = static_cast<int>(child.stems.size());
          int j = -1;
          for (int i = 0; i < k; ++i)
            if (tree.has_edge(child.stems[static_cast<size_t>(i)], a)) j = i;
          if (j < 0) family_falsified("shared A-vertex misses its unit");
          Step s{OpKind::O8, host, piece, k + 2 * j};
          Applied ap = apply_step(lt, s);
          lt = std::move(ap.tree);
          lay_unit(child, ap.piece_map, a);
          cert.steps.push_back(s);
        }
        ready.push(ni);
      }
    }
  }
  for (char p : placed)
    if (!p) family_falsified("disconnected element arrangement");
  check_replay_exact(tree, sta, lt, replay_of_input);
  out.accepted = true;
  out.cert = std::move(cert);
  return out;
}

namespace {

// Peeling state for the C/D family: both operations attach their piece by a
// new edge, so a peel removes the full piece image and the host survives.
struct CdState {
  LabeledTree cur;
  std::vector<int> orig;
  struct Peel {
    OpKind op;
    std::string piece;
    int host_orig;
    std::vector<int> m_orig;
  };
  std::vector<Peel> peels;
};

void cd_peel(CdState& st, OpKind op, const std::string& piece_name, const LabeledTree& piece,
             int host_cur, const std::vector<int>& m) {
  const Graph& g = st.cur.tree;
  if (static_cast<int>(m.size()) != piece.tree.n()) family_falsified("embedding size");
  std::vector<char> in_piece(static_cast<size_t>(g.n()), 0);
  for (int c : m) {
    if (c < 0 || c >= g.n() || in_piece[static_cast<size_t>(c)])
      family_falsified("embedding not injective");
    in_piece[static_cast<size_t>(c)] = 1;
  }
  if (in_piece[static_cast<size_t>(host_cur)]) family_falsified("host inside piece");
  for (int w = 0; w < piece.tree.n(); ++w)
    if (piece.statuses[static_cast<size_t>(w)] !=
        st.cur.statuses[static_cast<size_t>(m[static_cast<size_t>(w)])])
      family_falsified(piece_name + " statuses");
  for (auto [a, b] : piece.tree.edges())
    if (!g.has_edge(m[static_cast<size_t>(a)], m[static_cast<size_t>(b)]))
      family_falsified(piece_name + " edge missing");
  int attach_touches = 0;
  for (int r : m)
    for (int w : g.neighbors(r)) {
      if (w == host_cur) {
        if (r != m[0]) family_falsified(piece_name + " extra edge to host");
        ++attach_touches;
        continue;
      }
      if (!in_piece[static_cast<size_t>(w)]) family_falsified(piece_name + " not hanging cleanly");
    }
  if (attach_touches != 1) family_falsified(piece_name + " attach edge missing");

  CdState::Peel p;
  p.op = op;
  p.piece = piece_name;
  p.host_orig = st.orig[static_cast<size_t>(host_cur)];
  for (int c : m) p.m_orig.push_back(st.orig[static_cast<size_t>(c)]);
  st.peels.push_back(std::move(p));

  DeletedGraph d = delete_vertices(g, m);
  if (!is_tree(d.graph)) family_falsified("remainder is not a tree");
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

}  // namespace

ClassRecognition recognize_r02012(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("recognition needs a tree");
  if (tree.n() < 2) throw std::invalid_argument("recognition needs order at least 2");
  PartitionReport rep = partition_report(tree);
  ClassRecognition out;
  if (!rep.excellent) {
    out.reason = "not excellent";
    return out;
  }
  std::string input_statuses = derive_statuses(tree, rep);
  std::string sig = r_signature_from_statuses(input_statuses);
  if (sig != "R_{02,012}") {
    out.reason = "value classes are " + sig;
    return out;
  }
  if (labeling_violation({tree, input_statuses}) != -1)
    family_falsified("two-class tree violates the structural labeling");

  const Catalog& cat = catalog();
  LabeledTree f3{cat.fragment("F3").tree, cat.fragment("F3").statuses};
  LabeledTree f4{cat.fragment("F4").tree, cat.fragment("F4").statuses};

  CdState st;
  st.cur = LabeledTree{tree, input_statuses};
  st.orig.resize(static_cast<size_t>(tree.n()));
  std::iota(st.orig.begin(), st.orig.end(), 0);

  auto require = [&](bool cond, const char* what) {
    if (!cond) family_falsified(what);
  };
  while (st.cur.tree.n() > 5) {
    const Graph& g = st.cur.tree;
    auto sta = [&](int v) { return st.cur.statuses[static_cast<size_t>(v)]; };
    std::vector<int> path = diametral_path(g);
    auto px = [&](size_t i) -> int {
      if (i >= path.size()) family_falsified("diametral path too short");
      return path[i];
    };
    auto others = [&](int v, std::vector<int> excl) {
      std::vector<int> o;
      for (int w : g.neighbors(v))
        if (std::find(excl.begin(), excl.end(), w) == excl.end()) o.push_back(w);
      return o;
    };
    int x1 = px(0), x2 = px(1), x3 = px(2);
    require(sta(x1) == 'D' && sta(x2) == 'D' && g.degree(x2) == 2,
            "deep end is not a clean pair");
    require(sta(x3) == 'C', "pair hangs off a non-C");
    if (g.degree(x3) == 2) {
      int x4 = px(3);
      require(sta(x4) == 'D', "degree-2 C between non-D's");
      cd_peel(st, OpKind::O10, "F4", f4, x4, {x3, x2, x1});
      continue;
    }
    if (g.degree(x3) == 3) {
      int x4 = px(3);
      auto off = others(x3, {x2, x4});
      require(off.size() == 1, "inner C off-path count");
      int x31 = off[0];
      if (sta(x31) == 'D') {
        require(sta(x4) == 'C', "C with three D-neighbors");
        require(g.degree(x31) == 2, "pair stem degree");
        auto lf = others(x31, {x3});
        require(lf.size() == 1 && g.degree(lf[0]) == 1 && sta(lf[0]) == 'D',
                "pair stem without a D-leaf");
        cd_peel(st, OpKind::O9, "F3", f3, x4, {x3, x2, x1, x31, lf[0]});
        continue;
      }
      require(sta(x31) == 'C' && sta(x4) == 'D', "inner C neighbor statuses");
      int x5 = px(4);
      require(g.degree(x4) == 2 && g.degree(x5) == 1 && sta(x5) == 'D',
              "far pair is not clean");
      cd_peel(st, OpKind::O9, "F3", f3, x31, {x3, x2, x1, x4, x5});
      continue;
    }
    // Degree >= 4: some off-path C-neighbor carries two clean pairs.
    int x4 = px(3);
    int y = -1;
    for (int w : others(x3, {x2, x4}))
      if (sta(w) == 'C') {
        y = w;
        break;
      }
    require(y != -1, "high-degree C without an off-path C-neighbor");
    require(g.degree(y) == 3, "off-path C degree");
    auto stems = others(y, {x3});
    require(stems.size() == 2, "off-path C stem count");
    std::vector<int> m{y};
    for (int d : stems) {
      require(sta(d) == 'D' && g.degree(d) == 2, "off-path pair stem");
      auto lf = others(d, {y});
      require(lf.size() == 1 && g.degree(lf[0]) == 1 && sta(lf[0]) == 'D',
              "off-path pair leaf");
      m.push_back(d);
      m.push_back(lf[0]);
    }
    // F3 slots: centre, first pair stem+leaf, second pair stem+leaf.
    cd_peel(st, OpKind::O9, "F3", f3, x3, {m[0], m[1], m[2], m[3], m[4]});
  }

  const CatalogEntry& h11 = cat.entry("H11");
  auto w = labeled_iso(h11.tree, h11.statuses, st.cur.tree, st.cur.statuses);
  if (!w) family_falsified("residue is not the five-vertex base");
  TSequence cert;
  cert.base = "H11";
  std::vector<int> replay_of_input(static_cast<size_t>(tree.n()), -1);
  for (int c = 0; c < 5; ++c)
    replay_of_input[static_cast<size_t>(st.orig[static_cast<size_t>((*w)[static_cast<size_t>(c)])])] = c;
  LabeledTree lt = base_tree("H11");
  for (auto it = st.peels.rbegin(); it != st.peels.rend(); ++it) {
    int host = replay_of_input[static_cast<size_t>(it->host_orig)];
    if (host < 0) family_falsified("peel host escaped the replay map");
    Step s{it->op, host, it->piece, 0};
    Applied ap = apply_step(lt, s);
    lt = std::move(ap.tree);
    for (size_t i = 0; i < it->m_orig.size(); ++i)
      replay_of_input[static_cast<size_t>(it->m_orig[i])] = ap.piece_map[i];
    cert.steps.push_back(s);
  }
  check_replay_exact(tree, input_statuses, lt, replay_of_input);
  out.accepted = true;
  out.cert = std::move(cert);
  return out;
}

std::vector<bool> gamma_good_vertices(const Graph& g) {
  int n = g.n();
  if (n < 1 || n > 20) throw std::invalid_argument("gamma_good_vertices: order must be 1..20");
  std::vector<uint32_t> nb(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    nb[static_cast<size_t>(v)] = 1u << v;
    for (int w : g.neighbors(v)) nb[static_cast<size_t>(v)] |= 1u << w;
  }
  uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  int gamma = gamma_graph(g);
  std::vector<bool> good(static_cast<size_t>(n), false);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != gamma) continue;
    uint32_t cov = 0;
    for (uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cov |= nb[static_cast<size_t>(v)];
    }
    if (cov != full) continue;
    for (uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      good[static_cast<size_t>(v)] = true;
    }
  }
  return good;
}

Graph extremal_45_tree(int r, const std::vector<std::pair<int, int>>& links) {
  if (r < 1) throw std::invalid_argument("extremal_45_tree: need at least one path");
  if (static_cast<int>(links.size()) != r - 1)
    throw std::invalid_argument("extremal_45_tree: a connected pattern on r centres needs r-1 links");
  Graph g(5 * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < 4; ++j) g.add_edge(5 * i + j, 5 * i + j + 1);
  for (auto [a, b] : links) {
    if (a < 0 || b < 0 || a >= r || b >= r || a == b)
      throw std::invalid_argument("extremal_45_tree: link out of range");
    g.add_edge(5 * a + 2, 5 * b + 2);
  }
  if (!is_tree(g)) throw std::invalid_argument("extremal_45_tree: links do not form a tree");
  return g;
}

namespace {

void check_poset_member(const Graph& g) {
  if (g.n() < 2 || g.n() > 20) throw std::invalid_argument("poset checks cover orders 2..20");
  if (!is_connected(g)) throw std::invalid_argument("poset members are connected");
  if (!is_excellent(g)) throw std::invalid_argument("poset members are excellent");
}

}  // namespace

bool poset_minimal(const Graph& g) {
  check_poset_member(g);
  int gamma = gamma_r_auto(g);
  for (auto [u, v] : g.edges()) {
    Graph h(g.n());
    for (auto [a, b] : g.edges())
      if (a != u || b != v) h.add_edge(a, b);
    if (!is_connected(h)) continue;
    if (gamma_r_auto(h) == gamma && is_excellent(h)) return false;
  }
  return true;
}

bool poset_maximal(const Graph& g) {
  check_poset_member(g);
  int gamma = gamma_r_auto(g);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      Graph h = g;
      h.add_edge(u, v);
      if (gamma_r_auto(h) == gamma && is_excellent(h)) return false;
    }
  return true;
}

}  // namespace rdx

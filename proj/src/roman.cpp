#include "rdx/roman.hpp"

#include <algorithm>

namespace rdx {

namespace {
constexpr long kInf = 1L << 28;
}

bool is_rdf(const Graph& g, const RdFunction& f) {
  if (static_cast<int>(f.size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (f[static_cast<size_t>(v)] > 2) return false;
    if (f[static_cast<size_t>(v)] != 0) continue;
    bool guarded = false;
    for (int w : g.neighbors(v))
      if (f[static_cast<size_t>(w)] == 2) {
        guarded = true;
        break;
      }
    if (!guarded) return false;
  }
  return true;
}

int weight(const RdFunction& f) {
  int w = 0;
  for (uint8_t x : f) w += x;
  return w;
}

std::string function_digits(const RdFunction& f) {
  std::string s;
  s.reserve(f.size());
  for (uint8_t x : f) s.push_back(static_cast<char>('0' + x));
  return s;
}

// Four states per vertex v of the rooted forest:
//   s2  : f(v) = 2
//   s1  : f(v) = 1
//   s0d : f(v) = 0, already dominated (a child takes 2, or v is external)
//   s0u : f(v) = 0, not yet dominated — only usable under a parent taking 2
int gamma_r_forest(const Graph& g, const TreeSolveOptions& opt) {
  int n = g.n();
  if (n < 1) throw std::invalid_argument("gamma_r_forest: empty graph");
  {
    auto comp = components(g);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    if (g.m() != n - ncomp) throw std::invalid_argument("gamma_r_forest: input has a cycle");
  }
  std::vector<long> s2(static_cast<size_t>(n)), s1(static_cast<size_t>(n)),
      s0d(static_cast<size_t>(n)), s0u(static_cast<size_t>(n));
  std::vector<int> order, par(static_cast<size_t>(n), -1);
  std::vector<char> vis(static_cast<size_t>(n), 0);
  order.reserve(static_cast<size_t>(n));
  long total = 0;
  for (int r = 0; r < n; ++r) {
    if (vis[static_cast<size_t>(r)]) continue;
    size_t head = order.size();
    vis[static_cast<size_t>(r)] = 1;
    order.push_back(r);
    for (size_t i = head; i < order.size(); ++i) {
      int v = order[i];
      for (int w : g.neighbors(v))
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          par[static_cast<size_t>(w)] = v;
          order.push_back(w);
        }
    }
    for (size_t i = order.size(); i-- > head;) {
      int v = order[i];
      uint8_t al = opt.allowed ? (*opt.allowed)[static_cast<size_t>(v)] : uint8_t{7};
      long c2 = (al & 4) ? 2 : kInf;
      long c1 = (al & 2) ? 1 : kInf;
      long c0 = (al & 1) ? 0 : kInf;
      long extra = kInf;
      bool has_child = false;
      for (int w : g.neighbors(v)) {
        if (w == par[static_cast<size_t>(v)]) continue;
        has_child = true;
        size_t sw = static_cast<size_t>(w);
        long m3 = std::min({s2[sw], s1[sw], s0d[sw]});
        long m4 = std::min(m3, s0u[sw]);
        c2 += m4;
        c1 += m3;
        c0 += m3;
        extra = std::min(extra, s2[sw] - m3);
      }
      size_t sv = static_cast<size_t>(v);
      s2[sv] = std::min(c2, kInf);
      s1[sv] = std::min(c1, kInf);
      s0u[sv] = std::min(c0, kInf);
      long d = kInf;
      if (c0 < kInf) {
        if (has_child && extra < kInf) d = c0 + extra;
        if (opt.external && (*opt.external)[sv]) d = std::min(d, c0);
      }
      s0d[sv] = std::min(d, kInf);
    }
    size_t sr = static_cast<size_t>(r);
    long best = std::min({s2[sr], s1[sr], s0d[sr]});
    if (best >= kInf) return -1;
    total += best;
  }
  return static_cast<int>(total);
}

int gamma_r_tree(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("gamma_r_tree: input is not a tree");
  return gamma_r_forest(tree);
}

int gamma_r_constrained(const Graph& forest, int v, int label) {
  if (v < 0 || v >= forest.n()) throw std::invalid_argument("gamma_r_constrained: vertex out of range");
  if (label < 0 || label > 2) throw std::invalid_argument("gamma_r_constrained: label must be 0, 1 or 2");
  std::vector<uint8_t> allowed(static_cast<size_t>(forest.n()), 7);
  allowed[static_cast<size_t>(v)] = static_cast<uint8_t>(1 << label);
  TreeSolveOptions opt;
  opt.allowed = &allowed;
  return gamma_r_forest(forest, opt);
}

int gamma_r_plus_edge(const Graph& tree, int x, int y) {
  if (!is_tree(tree)) throw std::invalid_argument("gamma_r_plus_edge: input is not a tree");
  if (x == y || tree.has_edge(x, y)) throw std::invalid_argument("gamma_r_plus_edge: xy must be a non-edge");
  int best = gamma_r_forest(tree);
  std::vector<uint8_t> allowed(static_cast<size_t>(tree.n()), 7);
  std::vector<uint8_t> external(static_cast<size_t>(tree.n()), 0);
  TreeSolveOptions opt;
  opt.allowed = &allowed;
  opt.external = &external;
  // One endpoint takes 2 and covers the other across the new edge.
  allowed[static_cast<size_t>(y)] = 4;
  external[static_cast<size_t>(x)] = 1;
  int a = gamma_r_forest(tree, opt);
  allowed[static_cast<size_t>(y)] = 7;
  external[static_cast<size_t>(x)] = 0;
  allowed[static_cast<size_t>(x)] = 4;
  external[static_cast<size_t>(y)] = 1;
  int b = gamma_r_forest(tree, opt);
  if (a >= 0) best = std::min(best, a);
  if (b >= 0) best = std::min(best, b);
  return best;
}

namespace {

struct BruteState {
  const Graph* g = nullptr;
  std::vector<int> order, pos;
  RdFunction f;
  std::vector<int> unassigned, twos;  // per vertex: unassigned neighbors, assigned 2-neighbors
  int best = 0;
  bool collect = false;
  int target = 0;
  std::vector<RdFunction>* out = nullptr;

  void init(const Graph& graph, bool identity_order) {
    g = &graph;
    int n = graph.n();
    order.clear();
    if (identity_order) {
      for (int v = 0; v < n; ++v) order.push_back(v);
    } else {
      std::vector<char> vis(static_cast<size_t>(n), 0);
      for (int r = 0; r < n; ++r) {
        if (vis[static_cast<size_t>(r)]) continue;
        vis[static_cast<size_t>(r)] = 1;
        order.push_back(r);
        for (size_t i = order.size() - 1; i < order.size(); ++i) {
          for (int w : graph.neighbors(order[i]))
            if (!vis[static_cast<size_t>(w)]) {
              vis[static_cast<size_t>(w)] = 1;
              order.push_back(w);
            }
        }
      }
    }
    pos.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    f.assign(static_cast<size_t>(n), 0);
    unassigned.assign(static_cast<size_t>(n), 0);
    twos.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) unassigned[static_cast<size_t>(v)] = graph.degree(v);
  }

  // A 0-vertex is dead once it has no assigned 2-neighbor and no unassigned
  // neighbor left to provide one.
  bool dead_zero(int v) const {
    return f[static_cast<size_t>(v)] == 0 && twos[static_cast<size_t>(v)] == 0 &&
           unassigned[static_cast<size_t>(v)] == 0;
  }

  void search(int i, int w) {
    int n = g->n();
    if (collect ? (w > target) : (w >= best) ) return;
    if (i == n) {
      if (collect) {
        if (w == target) out->push_back(f);
      } else {
        best = w;
      }
      return;
    }
    int v = order[static_cast<size_t>(i)];
    size_t sv = static_cast<size_t>(v);
    static constexpr uint8_t kFindOrder[3] = {2, 0, 1};
    static constexpr uint8_t kLexOrder[3] = {0, 1, 2};
    const uint8_t* labels = collect ? kLexOrder : kFindOrder;
    for (int k = 0; k < 3; ++k) {
      uint8_t c = labels[k];
      if (c == 0 && twos[sv] == 0 && unassigned[sv] == 0) continue;  // v itself unfixable
      f[sv] = c;
      bool ok = true;
      for (int u : g->neighbors(v)) {
        size_t su = static_cast<size_t>(u);
        --unassigned[su];
        if (c == 2) ++twos[su];
      }
      for (int u : g->neighbors(v))
        if (pos[static_cast<size_t>(u)] < i && dead_zero(u)) {
          ok = false;
          break;
        }
      if (ok) search(i + 1, w + c);
      for (int u : g->neighbors(v)) {
        size_t su = static_cast<size_t>(u);
        ++unassigned[su];
        if (c == 2) --twos[su];
      }
    }
    f[sv] = 0;
  }
};

}  // namespace

int gamma_r_bruteforce(const Graph& g) {
  if (g.n() < 1 || g.n() > 14) throw std::invalid_argument("gamma_r_bruteforce: 1 <= n <= 14");
  BruteState st;
  st.init(g, /*identity_order=*/false);
  st.best = g.n();  // the all-ones function is always a valid RDF
  st.search(0, 0);
  return st.best;
}

std::vector<RdFunction> enumerate_gamma_r_functions(const Graph& g) {
  if (g.n() < 1 || g.n() > 12)
    throw std::invalid_argument("enumerate_gamma_r_functions: 1 <= n <= 12");
  BruteState st;
  st.init(g, /*identity_order=*/true);
  st.collect = true;
  st.target = gamma_r_graph(g);
  std::vector<RdFunction> out;
  st.out = &out;
  st.search(0, 0);
  return out;  // lexicographic by construction
}

namespace {

void check_sweep_size(const Graph& g, const char* who) {
  if (g.n() < 1 || g.n() > 20) throw std::invalid_argument(std::string(who) + ": 1 <= n <= 20");
}

std::vector<uint32_t> closed_masks(const Graph& g) {
  std::vector<uint32_t> cl(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    uint32_t m = 1u << v;
    for (int w : g.neighbors(v)) m |= 1u << w;
    cl[static_cast<size_t>(v)] = m;
  }
  return cl;
}

// N[S] for every subset, by dynamic programming over lowest set bits.
std::vector<uint32_t> closed_of_subsets(const std::vector<uint32_t>& cl, int n) {
  std::vector<uint32_t> ns(static_cast<size_t>(1) << n);
  ns[0] = 0;
  for (uint32_t s = 1; s < (1u << n); ++s)
    ns[s] = ns[s & (s - 1)] | cl[static_cast<size_t>(__builtin_ctz(s))];
  return ns;
}

}  // namespace

int gamma_r_graph(const Graph& g) {
  check_sweep_size(g, "gamma_r_graph");
  int n = g.n();
  auto ns = closed_of_subsets(closed_masks(g), n);
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = n;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int cost = 2 * __builtin_popcount(s) + __builtin_popcount(full & ~ns[s]);
    best = std::min(best, cost);
  }
  return best;
}

GraphPartitionSweep graph_partition_sweep(const Graph& g) {
  check_sweep_size(g, "graph_partition_sweep");
  int n = g.n();
  auto ns = closed_of_subsets(closed_masks(g), n);
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  GraphPartitionSweep out;
  out.gamma_r = n;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int cost = 2 * __builtin_popcount(s) + __builtin_popcount(full & ~ns[s]);
    out.gamma_r = std::min(out.gamma_r, cost);
  }
  out.value_sets.assign(static_cast<size_t>(n), 0);
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int cost = 2 * __builtin_popcount(s) + __builtin_popcount(full & ~ns[s]);
    if (cost != out.gamma_r) continue;
    for (int v = 0; v < n; ++v) {
      uint32_t bit = 1u << v;
      if (s & bit)
        out.value_sets[static_cast<size_t>(v)] |= 4;
      else if (ns[s] & bit)
        out.value_sets[static_cast<size_t>(v)] |= 1;
      else
        out.value_sets[static_cast<size_t>(v)] |= 2;
    }
  }
  return out;
}

RdFunction one_gamma_r_function(const Graph& g) {
  int n = g.n();
  if (n >= 1 && n <= 20) {
    auto ns = closed_of_subsets(closed_masks(g), n);
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    int best = n;
    for (uint32_t s = 0; s < (1u << n); ++s)
      best = std::min(best, 2 * __builtin_popcount(s) + __builtin_popcount(full & ~ns[s]));
    for (uint32_t s = 0; s < (1u << n); ++s) {
      if (2 * __builtin_popcount(s) + __builtin_popcount(full & ~ns[s]) != best) continue;
      RdFunction f(static_cast<size_t>(n), 0);
      for (int v = 0; v < n; ++v) {
        uint32_t bit = 1u << v;
        if (s & bit)
          f[static_cast<size_t>(v)] = 2;
        else if (!(ns[s] & bit))
          f[static_cast<size_t>(v)] = 1;
      }
      return f;
    }
  }
  if (!is_tree(g)) throw std::invalid_argument("one_gamma_r_function: graphs are capped at n <= 20");
  // Pin labels one vertex at a time, keeping the optimum reachable.
  int target = gamma_r_forest(g);
  std::vector<uint8_t> allowed(static_cast<size_t>(n), 7);
  TreeSolveOptions opt;
  opt.allowed = &allowed;
  RdFunction f(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (uint8_t c = 0; c <= 2; ++c) {
      allowed[static_cast<size_t>(v)] = static_cast<uint8_t>(1 << c);
      if (gamma_r_forest(g, opt) == target) {
        f[static_cast<size_t>(v)] = c;
        break;
      }
    }
  }
  if (!is_rdf(g, f) || weight(f) != target)
    throw invariant_error("one_gamma_r_function: reconstruction failed");
  return f;
}

// Three states per vertex for ordinary domination on forests:
//   s_in   : v in the dominating set
//   s_dom  : v outside, dominated by a child
//   s_need : v outside, to be dominated by its parent
int gamma_forest(const Graph& g) {
  int n = g.n();
  if (n < 1) throw std::invalid_argument("gamma_forest: empty graph");
  {
    auto comp = components(g);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    if (g.m() != n - ncomp) throw std::invalid_argument("gamma_forest: input has a cycle");
  }
  std::vector<long> sin(static_cast<size_t>(n)), sdom(static_cast<size_t>(n)),
      sneed(static_cast<size_t>(n));
  std::vector<int> order, par(static_cast<size_t>(n), -1);
  std::vector<char> vis(static_cast<size_t>(n), 0);
  order.reserve(static_cast<size_t>(n));
  long total = 0;
  for (int r = 0; r < n; ++r) {
    if (vis[static_cast<size_t>(r)]) continue;
    size_t head = order.size();
    vis[static_cast<size_t>(r)] = 1;
    order.push_back(r);
    for (size_t i = head; i < order.size(); ++i) {
      int v = order[i];
      for (int w : g.neighbors(v))
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          par[static_cast<size_t>(w)] = v;
          order.push_back(w);
        }
    }
    for (size_t i = order.size(); i-- > head;) {
      int v = order[i];
      long cin = 1, cout = 0, extra = kInf;
      for (int w : g.neighbors(v)) {
        if (w == par[static_cast<size_t>(v)]) continue;
        size_t sw = static_cast<size_t>(w);
        cin += std::min({sin[sw], sdom[sw], sneed[sw]});
        long t = std::min(sin[sw], sdom[sw]);
        cout += t;
        extra = std::min(extra, sin[sw] - t);
      }
      size_t sv = static_cast<size_t>(v);
      sin[sv] = std::min(cin, kInf);
      sneed[sv] = std::min(cout, kInf);
      sdom[sv] = std::min((extra < kInf) ? cout + extra : kInf, kInf);
    }
    size_t sr = static_cast<size_t>(r);
    total += std::min(sin[sr], sdom[sr]);
  }
  return static_cast<int>(total);
}

int gamma_tree(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("gamma_tree: input is not a tree");
  return gamma_forest(tree);
}

int gamma_graph(const Graph& g) {
  check_sweep_size(g, "gamma_graph");
  int n = g.n();
  auto ns = closed_of_subsets(closed_masks(g), n);
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = n;
  for (uint32_t s = 1; s < (1u << n); ++s)
    if (ns[s] == full) best = std::min(best, __builtin_popcount(s));
  return best;
}

int gamma_bruteforce(const Graph& g) { return gamma_graph(g); }

int gamma_r_auto(const Graph& g) {
  if (g.n() == 0) return 0;
  return is_forest(g) ? gamma_r_forest(g) : gamma_r_graph(g);
}

int gamma_auto(const Graph& g) {
  if (g.n() == 0) return 0;
  return is_forest(g) ? gamma_forest(g) : gamma_graph(g);
}

}  // namespace rdx

#include "rdx/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "rdx/canonical.hpp"

namespace rdx {

// Rooted trees as canonical level sequences (Beyer–Hedetniemi successor),
// free-tree deduplication by canonical code.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_free_tree: n >= 1");
  if (n == 1) {
    fn(Graph(1));
    return;
  }
  std::vector<int> level(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) level[static_cast<size_t>(i)] = i + 1;  // the path
  std::unordered_set<std::string> seen;
  std::vector<int> last_at(static_cast<size_t>(n) + 2, -1);
  for (;;) {
    Graph g(n);
    std::fill(last_at.begin(), last_at.end(), -1);
    last_at[1] = 0;
    for (int i = 1; i < n; ++i) {
      g.add_edge(last_at[static_cast<size_t>(level[static_cast<size_t>(i)] - 1)], i);
      last_at[static_cast<size_t>(level[static_cast<size_t>(i)])] = i;
    }
    if (seen.insert(free_code(g)).second) fn(g);
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (level[static_cast<size_t>(i)] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level[static_cast<size_t>(i)] == level[static_cast<size_t>(p)] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) level[static_cast<size_t>(i)] = level[static_cast<size_t>(i - (p - q))];
  }
}

long count_free_trees(int n) {
  long count = 0;
  for_each_free_tree(n, [&](const Graph&) { ++count; });
  return count;
}

namespace {

struct IntVecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ULL;
    for (int x : v) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

long count_free_trees_brute(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("count_free_trees_brute: 1 <= n <= 12");
  if (n == 1) return 1;
  std::unordered_map<std::vector<int>, int, IntVecHash> intern;
  intern.reserve(1u << 14);
  auto intern_id = [&](std::vector<int>& key) {
    auto it = intern.find(key);
    if (it != intern.end()) return it->second;
    int id = static_cast<int>(intern.size());
    intern.emplace(key, id);
    return id;
  };
  std::unordered_set<uint64_t> seen;
  seen.reserve(1u << 16);
  std::vector<int> par(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<char> gone(static_cast<size_t>(n), 0);
  std::vector<int> deg(static_cast<size_t>(n)), peel, ids(static_cast<size_t>(n));
  std::vector<std::vector<int>> child_ids(static_cast<size_t>(n));
  std::vector<std::pair<int, int>> pre;
  auto rooted_id = [&](int root, int skip) {
    pre.clear();
    pre.emplace_back(root, skip);
    for (size_t i = 0; i < pre.size(); ++i) {
      auto [v, p] = pre[i];
      for (int w : adj[static_cast<size_t>(v)])
        if (w != p) pre.emplace_back(w, v);
    }
    for (size_t i = pre.size(); i-- > 0;) {
      auto [v, p] = pre[i];
      auto& key = child_ids[static_cast<size_t>(v)];
      std::sort(key.begin(), key.end());
      ids[static_cast<size_t>(v)] = intern_id(key);
      key.clear();
      if (i > 0) child_ids[static_cast<size_t>(p)].push_back(ids[static_cast<size_t>(v)]);
    }
    return ids[static_cast<size_t>(root)];
  };
  for (;;) {
    for (auto& a : adj) a.clear();
    for (int i = 1; i < n; ++i) {
      adj[static_cast<size_t>(par[static_cast<size_t>(i)])].push_back(i);
      adj[static_cast<size_t>(i)].push_back(par[static_cast<size_t>(i)]);
    }
    // centers by leaf peeling
    int remaining = n;
    peel.clear();
    for (int v = 0; v < n; ++v) {
      gone[static_cast<size_t>(v)] = 0;
      deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
      if (deg[static_cast<size_t>(v)] == 1) peel.push_back(v);
    }
    size_t head = 0;
    while (remaining > 2) {
      size_t layer_end = peel.size();
      for (; head < layer_end; ++head) {
        int v = peel[head];
        gone[static_cast<size_t>(v)] = 1;
        --remaining;
        for (int w : adj[static_cast<size_t>(v)])
          if (!gone[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1) peel.push_back(w);
      }
    }
    int c0 = -1, c1 = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<size_t>(v)]) (c0 < 0 ? c0 : c1) = v;
    uint64_t key;
    if (c1 < 0) {
      key = (static_cast<uint64_t>(rooted_id(c0, -1)) << 32) | 0xFFFFFFFFULL;
    } else {
      int a = rooted_id(c0, c1), b = rooted_id(c1, c0);
      if (a > b) std::swap(a, b);
      key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
    }
    seen.insert(key);
    int i = n - 1;
    while (i >= 1 && par[static_cast<size_t>(i)] == i - 1) par[static_cast<size_t>(i--)] = 0;
    if (i < 1) break;
    ++par[static_cast<size_t>(i)];
  }
  return static_cast<long>(seen.size());
}

namespace {

std::mutex g_conn_mutex;
std::vector<std::vector<Graph>> g_conn_levels;  // [n] -> classes sorted by certificate

void ensure_connected_levels(int n) {
  std::lock_guard<std::mutex> lock(g_conn_mutex);
  if (static_cast<int>(g_conn_levels.size()) > n) return;
  if (g_conn_levels.size() < 2) {
    g_conn_levels.resize(2);
    g_conn_levels[1] = {Graph(1)};
  }
  for (int s = static_cast<int>(g_conn_levels.size()); s <= n; ++s) {
    std::map<uint64_t, Graph> classes;
    for (const Graph& base : g_conn_levels[static_cast<size_t>(s - 1)]) {
      for (uint32_t mask = 1; mask < (1u << (s - 1)); ++mask) {
        Graph g(s);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int b = 0; b < s - 1; ++b)
          if (mask & (1u << b)) g.add_edge(b, s - 1);
        uint64_t cert = graph_cert(g);
        if (!classes.count(cert)) classes.emplace(cert, std::move(g));
      }
    }
    std::vector<Graph> level;
    level.reserve(classes.size());
    for (auto& [cert, g] : classes) level.push_back(std::move(g));
    g_conn_levels.push_back(std::move(level));
  }
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7) throw std::invalid_argument("for_each_connected_graph: 1 <= n <= 7");
  ensure_connected_levels(n);
  std::vector<Graph> copy;
  {
    std::lock_guard<std::mutex> lock(g_conn_mutex);
    copy = g_conn_levels[static_cast<size_t>(n)];
  }
  for (const Graph& g : copy) fn(g);
}

long count_connected_graphs(int n) {
  long count = 0;
  for_each_connected_graph(n, [&](const Graph&) { ++count; });
  return count;
}

long count_connected_graphs_brute(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("count_connected_graphs_brute: 1 <= n <= 6");
  if (n == 1) return 1;
  int pairs = n * (n - 1) / 2;
  std::unordered_set<uint64_t> seen;
  for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (mask & (1u << bit)) g.add_edge(i, j);
    if (!is_connected(g)) continue;
    seen.insert(graph_cert(g));
  }
  return static_cast<long>(seen.size());
}

}  // namespace rdx

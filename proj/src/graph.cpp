#include "rdx/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace rdx {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.resize(static_cast<size_t>(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::invalid_argument("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  auto& au = adj_[static_cast<size_t>(u)];
  auto& av = adj_[static_cast<size_t>(v)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[static_cast<size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs k >= 0");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs both parts non-empty");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph corona_graph(const Graph& h) {
  int hn = h.n();
  if (hn < 1) throw std::invalid_argument("corona needs a non-empty base");
  Graph g(3 * hn);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  for (int v = 0; v < hn; ++v) {
    g.add_edge(v, hn + 2 * v);
    g.add_edge(v, hn + 2 * v + 1);
  }
  return g;
}

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(static_cast<size_t>(g.n()), -1);
  int id = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::deque<int> q{s};
    comp[static_cast<size_t>(s)] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v))
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = id;
          q.push_back(w);
        }
    }
    ++id;
  }
  return comp;
}

int component_count(const Graph& g) {
  if (g.n() == 0) return 0;
  auto comp = components(g);
  return *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

bool is_forest(const Graph& g) { return g.m() == g.n() - component_count(g); }

BfsResult bfs(const Graph& g, int src) {
  BfsResult r;
  r.dist.assign(static_cast<size_t>(g.n()), -1);
  r.parent.assign(static_cast<size_t>(g.n()), -1);
  std::deque<int> q{src};
  r.dist[static_cast<size_t>(src)] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (r.dist[static_cast<size_t>(w)] < 0) {
        r.dist[static_cast<size_t>(w)] = r.dist[static_cast<size_t>(v)] + 1;
        r.parent[static_cast<size_t>(w)] = v;
        q.push_back(w);
      }
  }
  return r;
}

static int farthest(const BfsResult& b) {
  int best = 0;
  for (int v = 1; v < static_cast<int>(b.dist.size()); ++v)
    if (b.dist[static_cast<size_t>(v)] > b.dist[static_cast<size_t>(best)]) best = v;
  return best;  // ties keep the smallest index because of scan order
}

std::vector<int> diametral_path(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("diametral_path needs a tree");
  auto b0 = bfs(tree, 0);
  int a = farthest(b0);
  auto b1 = bfs(tree, a);
  int b = farthest(b1);
  std::vector<int> path;
  for (int v = b; v != -1; v = b1.parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());  // now runs a .. b
  return path;
}

DeletedGraph delete_vertices(const Graph& g, const std::vector<int>& doomed) {
  std::vector<char> dead(static_cast<size_t>(g.n()), 0);
  for (int v : doomed) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_vertices: vertex out of range");
    dead[static_cast<size_t>(v)] = 1;
  }
  DeletedGraph out;
  out.new_of_old.assign(static_cast<size_t>(g.n()), -1);
  for (int v = 0; v < g.n(); ++v)
    if (!dead[static_cast<size_t>(v)]) {
      out.new_of_old[static_cast<size_t>(v)] = static_cast<int>(out.old_of_new.size());
      out.old_of_new.push_back(v);
    }
  out.graph = Graph(static_cast<int>(out.old_of_new.size()));
  for (auto [u, v] : g.edges())
    if (!dead[static_cast<size_t>(u)] && !dead[static_cast<size_t>(v)])
      out.graph.add_edge(out.new_of_old[static_cast<size_t>(u)], out.new_of_old[static_cast<size_t>(v)]);
  return out;
}

Graph attach_edge(const Graph& a, int ua, const Graph& b, int ub) {
  if (ua < 0 || ua >= a.n() || ub < 0 || ub >= b.n())
    throw std::invalid_argument("attach_edge: vertex out of range");
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  g.add_edge(ua, a.n() + ub);
  return g;
}

Coalesced coalesce(const Graph& a, int ua, const Graph& b, int ub) {
  if (ua < 0 || ua >= a.n() || ub < 0 || ub >= b.n())
    throw std::invalid_argument("coalesce: vertex out of range");
  Coalesced out;
  out.b_map.assign(static_cast<size_t>(b.n()), -1);
  int next = a.n();
  for (int w = 0; w < b.n(); ++w)
    out.b_map[static_cast<size_t>(w)] = (w == ub) ? ua : next++;
  out.graph = Graph(a.n() + b.n() - 1);
  for (auto [u, v] : a.edges()) out.graph.add_edge(u, v);
  for (auto [u, v] : b.edges())
    out.graph.add_edge(out.b_map[static_cast<size_t>(u)], out.b_map[static_cast<size_t>(v)]);
  return out;
}

Graph parse_graph(const std::string& text) {
  std::vector<std::pair<int, int>> edge_list;
  int declared_n = -1;
  bool saw_content = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank/comment line
    if (!saw_content && tok == "n") {
      saw_content = true;
      long n = 0;
      if (!(ls >> n) || n < 0)
        throw parse_error("line " + std::to_string(lineno) + ": bad vertex count header");
      std::string extra;
      if (ls >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens after header");
      declared_n = static_cast<int>(n);
      continue;
    }
    saw_content = true;
    auto parse_int = [&](const std::string& s) {
      try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        if (v < 0) throw parse_error("line " + std::to_string(lineno) + ": negative vertex index");
        return static_cast<int>(v);
      } catch (const parse_error&) {
        throw;
      } catch (...) {
        throw parse_error("line " + std::to_string(lineno) + ": bad token '" + s + "'");
      }
    };
    int u = parse_int(tok);
    std::string tok2;
    if (!(ls >> tok2)) throw parse_error("line " + std::to_string(lineno) + ": edge needs two endpoints");
    int v = parse_int(tok2);
    std::string extra;
    if (ls >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens after edge");
    if (u == v) throw parse_error("line " + std::to_string(lineno) + ": self-loop");
    edge_list.emplace_back(u, v);
  }
  if (!saw_content) throw parse_error("empty input");
  int max_idx = -1;
  for (auto [u, v] : edge_list) max_idx = std::max(max_idx, std::max(u, v));
  int n = (declared_n >= 0) ? declared_n : max_idx + 1;
  if (max_idx >= n) throw parse_error("vertex index exceeds declared count");
  if (n == 0) throw parse_error("graph has no vertices");
  Graph g(n);
  for (auto [u, v] : edge_list) {
    if (g.has_edge(u, v)) throw parse_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

bool is_shorthand(const std::string& s) {
  return s.rfind("p:", 0) == 0 || s.rfind("c:", 0) == 0 || s.rfind("star:", 0) == 0 ||
         s.rfind("corona:", 0) == 0;
}

static int parse_count(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument("");
    return static_cast<int>(v);
  } catch (...) {
    throw parse_error(std::string("bad ") + what + " in shorthand: '" + s + "'");
  }
}

static Graph parse_inline_edges(const std::string& s) {
  // "0-1,1-2" style; vertex count is max index + 1.
  std::vector<std::pair<int, int>> edge_list;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
      throw parse_error("bad inline edge '" + item + "' (want u-v)");
    int u = parse_count(item.substr(0, dash), "vertex");
    int v = parse_count(item.substr(dash + 1), "vertex");
    if (u == v) throw parse_error("self-loop in inline edges");
    edge_list.emplace_back(u, v);
  }
  if (edge_list.empty()) throw parse_error("empty inline edge list");
  int n = 0;
  for (auto [u, v] : edge_list) n = std::max(n, std::max(u, v) + 1);
  Graph g(n);
  for (auto [u, v] : edge_list) {
    if (g.has_edge(u, v)) throw parse_error("duplicate inline edge");
    g.add_edge(u, v);
  }
  return g;
}

Graph expand_shorthand(const std::string& s) {
  if (s.rfind("p:", 0) == 0) return path_graph(parse_count(s.substr(2), "path length"));
  if (s.rfind("c:", 0) == 0) return cycle_graph(parse_count(s.substr(2), "cycle length"));
  if (s.rfind("star:", 0) == 0) return star_graph(parse_count(s.substr(5), "leaf count"));
  if (s.rfind("corona:", 0) == 0) {
    std::string inner = s.substr(7);
    Graph h = is_shorthand(inner) ? expand_shorthand(inner) : parse_inline_edges(inner);
    if (!is_connected(h)) throw parse_error("corona base must be connected");
    return corona_graph(h);
  }
  throw parse_error("unknown shorthand '" + s + "'");
}

}  // namespace rdx

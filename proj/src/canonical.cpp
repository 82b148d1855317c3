#include "rdx/canonical.hpp"

#include <algorithm>
#include <deque>

namespace rdx {

std::string rooted_code(const Graph& tree, int root, int parent, const std::string* sta) {
  std::vector<std::string> child_codes;
  for (int w : tree.neighbors(root))
    if (w != parent) child_codes.push_back(rooted_code(tree, w, root, sta));
  std::sort(child_codes.begin(), child_codes.end());
  std::string s = "(";
  s.push_back(sta ? (*sta)[static_cast<size_t>(root)] : '.');
  for (const auto& c : child_codes) s += c;
  s.push_back(')');
  return s;
}

std::vector<int> tree_centers(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_centers: input is not a tree");
  int n = tree.n();
  if (n == 1) return {0};
  std::vector<int> deg(static_cast<size_t>(n));
  std::deque<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = tree.degree(v);
    if (deg[static_cast<size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<char> gone(static_cast<size_t>(n), 0);
  while (remaining > 2) {
    std::deque<int> next;
    for (int v : layer) {
      gone[static_cast<size_t>(v)] = 1;
      --remaining;
      for (int w : tree.neighbors(v))
        if (!gone[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1) next.push_back(w);
    }
    layer.swap(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!gone[static_cast<size_t>(v)]) centers.push_back(v);
  return centers;
}

std::string free_code(const Graph& tree, const std::string* sta) {
  auto centers = tree_centers(tree);
  if (centers.size() == 1) return rooted_code(tree, centers[0], -1, sta);
  std::string a = rooted_code(tree, centers[0], centers[1], sta);
  std::string b = rooted_code(tree, centers[1], centers[0], sta);
  return "<" + std::min(a + b, b + a) + ">";
}

namespace {

// Matches two subtrees with equal codes child-by-child; any alignment of
// equal-coded children is a valid isomorphism, so we take them in code order
// (ties broken by vertex index, which keeps the witness deterministic).
void align(const Graph& ga, const std::string* sa, int va, int pa,
           const Graph& gb, const std::string* sb, int vb, int pb, std::vector<int>& mapping) {
  mapping[static_cast<size_t>(va)] = vb;
  std::vector<std::pair<std::string, int>> ca, cb;
  for (int w : ga.neighbors(va))
    if (w != pa) ca.emplace_back(rooted_code(ga, w, va, sa), w);
  for (int w : gb.neighbors(vb))
    if (w != pb) cb.emplace_back(rooted_code(gb, w, vb, sb), w);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  for (size_t i = 0; i < ca.size(); ++i)
    align(ga, sa, ca[i].second, va, gb, sb, cb[i].second, vb, mapping);
}

}  // namespace

std::optional<std::vector<int>> labeled_iso(const Graph& a, const std::string& sa,
                                            const Graph& b, const std::string& sb) {
  if (a.n() != b.n()) return std::nullopt;
  if (free_code(a, &sa) != free_code(b, &sb)) return std::nullopt;
  auto ca = tree_centers(a);
  auto cb = tree_centers(b);
  std::vector<int> mapping(static_cast<size_t>(a.n()), -1);
  if (ca.size() == 1) {
    align(a, &sa, ca[0], -1, b, &sb, cb[0], -1, mapping);
    return mapping;
  }
  // Orient both bicentral edges the same way: the half whose rooted code
  // leads the canonical concatenation goes first. Codes are balanced-paren
  // strings, so equal concatenations imply equal first halves.
  auto orient = [](const Graph& g, const std::string* sta, std::vector<int>& c) {
    std::string x = rooted_code(g, c[0], c[1], sta);
    std::string y = rooted_code(g, c[1], c[0], sta);
    if (y + x < x + y) std::swap(c[0], c[1]);
  };
  orient(a, &sa, ca);
  orient(b, &sb, cb);
  align(a, &sa, ca[0], ca[1], b, &sb, cb[0], cb[1], mapping);
  align(a, &sa, ca[1], ca[0], b, &sb, cb[1], cb[0], mapping);
  return mapping;
}

uint64_t graph_cert(const Graph& g) {
  int n = g.n();
  if (n < 1 || n > 8) throw std::invalid_argument("graph_cert: 1 <= n <= 8");
  uint8_t rows[8] = {0};
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) rows[v] |= static_cast<uint8_t>(1u << w);
  int perm[8];
  for (int i = 0; i < n; ++i) perm[i] = i;
  uint64_t best = ~0ULL;
  do {
    uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      uint8_t row = rows[perm[i]];
      for (int j = i + 1; j < n; ++j, ++bit)
        if (row & (1u << perm[j])) mask |= 1ULL << bit;
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm, perm + n));
  return (static_cast<uint64_t>(n) << 56) | best;
}

}  // namespace rdx

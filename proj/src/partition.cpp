#include "rdx/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdx/roman.hpp"

namespace rdx {

namespace {
constexpr int kForestCap = 10000;
}  // namespace

std::string value_set_name(ValueSet vs) {
  std::string name;
  for (int c = 0; c <= 2; ++c)
    if (attains(vs, c)) name += static_cast<char>('0' + c);
  return name;
}

const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {"0", "1", "2", "01", "02", "12", "012"};
  return names;
}

PartitionReport partition_report(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("partition_report: empty graph");
  PartitionReport rep;
  rep.n = g.n();
  rep.value_sets.assign(static_cast<size_t>(g.n()), 0);
  if (is_forest(g)) {
    if (g.n() > kForestCap) throw std::invalid_argument("partition_report: forest exceeds the size cap");
    rep.gamma_r = gamma_r_forest(g);
    for (int v = 0; v < g.n(); ++v)
      for (int c = 0; c <= 2; ++c)
        if (gamma_r_constrained(g, v, c) == rep.gamma_r)
          rep.value_sets[static_cast<size_t>(v)] |= static_cast<ValueSet>(1u << c);
  } else {
    auto sweep = graph_partition_sweep(g);
    rep.gamma_r = sweep.gamma_r;
    rep.value_sets = sweep.value_sets;
  }
  rep.excellent = report_excellent(rep);
  for (int v = 0; v < g.n(); ++v)
    if (attains(rep.value_sets[static_cast<size_t>(v)], 1)) rep.v_minus.push_back(v);
  return rep;
}

std::vector<int> class_members(const PartitionReport& rep, const std::string& name) {
  std::vector<int> out;
  for (int v = 0; v < rep.n; ++v)
    if (value_set_name(rep.value_sets[static_cast<size_t>(v)]) == name) out.push_back(v);
  return out;
}

bool is_excellent(const Graph& g) { return partition_report(g).excellent; }

std::vector<int> v_minus_by_deletion(const Graph& g) {
  int base = gamma_r_auto(g);
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    auto del = delete_vertices(g, {v});
    if (gamma_r_auto(del.graph) < base) out.push_back(v);
  }
  return out;
}

bool is_cvr(const Graph& g) {
  return static_cast<int>(v_minus_by_deletion(g).size()) == g.n();
}

bool is_cea(const Graph& g) {
  int base = gamma_r_auto(g);
  bool tree = is_tree(g);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      if (tree) {
        if (gamma_r_plus_edge(g, u, v) >= base) return false;
      } else {
        Graph plus = g;
        plus.add_edge(u, v);
        if (gamma_r_auto(plus) >= base) return false;
      }
    }
  return true;
}

bool is_uvr(const Graph& g) {
  int base = gamma_auto(g);
  for (int v = 0; v < g.n(); ++v) {
    auto del = delete_vertices(g, {v});
    if (gamma_auto(del.graph) != base) return false;
  }
  return true;
}

std::string derive_statuses(const Graph& g) { return derive_statuses(g, partition_report(g)); }

std::string derive_statuses(const Graph& g, const PartitionReport& rep) {
  if (!is_tree(g)) throw std::invalid_argument("derive_statuses: input is not a tree");
  if (g.n() < 2) throw std::invalid_argument("derive_statuses: tree must have order at least 2");
  if (!rep.excellent) throw std::invalid_argument("derive_statuses: tree is not excellent");
  auto name_of = [&](int v) { return value_set_name(rep.value_sets[static_cast<size_t>(v)]); };
  std::string sta(static_cast<size_t>(g.n()), '?');
  for (int v = 0; v < g.n(); ++v) {
    const std::string name = name_of(v);
    if (name == "01") {
      sta[static_cast<size_t>(v)] = 'A';
    } else if (name == "012") {
      sta[static_cast<size_t>(v)] = 'D';
    } else if (name == "02") {
      int in02 = 0;
      for (int w : g.neighbors(v))
        if (name_of(w) == "02") ++in02;
      sta[static_cast<size_t>(v)] = (g.degree(v) == 2 && in02 == 1) ? 'B' : 'C';
    } else {
      throw invariant_error("excellent tree has a vertex outside classes 01/02/012");
    }
  }
  return sta;
}

}  // namespace rdx

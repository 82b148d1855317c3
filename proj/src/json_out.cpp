#include "rdx/json_out.hpp"

namespace rdx {

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Json partition_json(const Graph& g, const PartitionReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["gamma_r"] = rep.gamma_r;
  Json sets = Json::array();
  for (int v = 0; v < rep.n; ++v) sets.push_back(value_set_name(rep.value_sets[static_cast<size_t>(v)]));
  j["value_sets"] = std::move(sets);
  Json classes;
  for (const auto& name : class_names()) classes["V" + name] = class_members(rep, name);
  j["classes"] = std::move(classes);
  j["v_minus"] = rep.v_minus;
  j["excellent"] = rep.excellent;
  if (rep.excellent && rep.n >= 2 && is_tree(g)) j["statuses"] = derive_statuses(g, rep);
  return j;
}

}  // namespace rdx

// Acceptance battery: eight go/no-go criteria, one line each on standard
// output, exit code = number of failing criteria. Diagnostics (failing claim
// names and first counterexamples) go to standard error.

#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include "rdx/catalog.hpp"
#include "rdx/verify.hpp"

namespace {

using namespace rdx;

// All verification rows, keyed by claim name, at the default desk-scale caps.
std::map<std::string, ClaimResult> run_battery() {
  std::map<std::string, ClaimResult> rows;
  for (ClaimResult& r : run_verify_suite("all", VerifyOptions{}))
    rows.emplace(r.claim, std::move(r));
  return rows;
}

bool rows_clean(const std::map<std::string, ClaimResult>& rows,
                const std::vector<std::string>& claims) {
  bool ok = true;
  for (const std::string& name : claims) {
    auto it = rows.find(name);
    if (it == rows.end()) {
      std::fprintf(stderr, "  missing claim: %s\n", name.c_str());
      ok = false;
      continue;
    }
    const ClaimResult& r = it->second;
    if (r.instances <= 0 || r.failures > 0) {
      std::fprintf(stderr, "  %s: %lld failures over %lld instances\n", name.c_str(),
                   static_cast<long long>(r.failures), static_cast<long long>(r.instances));
      if (!r.counterexamples.empty())
        std::fprintf(stderr, "    first counterexample: %s\n",
                     r.counterexamples.front().dump().c_str());
      ok = false;
    }
  }
  return ok;
}

// The catalog pins that are not already a verification row: entry count,
// strata, the three fixed shapes, the three recorded optima, and the
// one-less deletion law at every designated merge vertex.
bool catalog_pins() {
  const Catalog& cat = catalog();
  bool ok = true;
  auto expect = [&ok](bool cond, const char* what) {
    if (!cond) {
      std::fprintf(stderr, "  catalog pin failed: %s\n", what);
      ok = false;
    }
  };
  expect(cat.entries.size() == 11, "eleven entries");
  int by_k[3] = {0, 0, 0};
  for (const CatalogEntry& e : cat.entries)
    if (e.k >= 0 && e.k <= 2) ++by_k[e.k];
  expect(by_k[0] == 1 && by_k[1] == 1 && by_k[2] == 9, "strata 1/1/9");
  expect(cat.entry("H1").statuses == "DD", "two-vertex entry is D,D");
  expect(cat.entry("H2").statuses == "ABBA", "four-path entry is A,B,B,A");
  expect(cat.entry("H11").statuses == "DDCDD", "five-path entry is D,D,C,D,D");
  expect(cat.entry("H3").gamma_r == 4, "optimum 4 at the six-vertex entry");
  expect(cat.entry("H4").gamma_r == 5, "optimum 5 at the seven-vertex entry");
  expect(cat.entry("H5").gamma_r == 6, "optimum 6 at the eight-vertex two-leaf entry");
  for (const CatalogEntry& e : cat.entries)
    for (int v : e.o4_vertices)
      expect(e.gamma_r_minus_v[static_cast<size_t>(v)] == e.gamma_r - 1,
             "deleting a designated merge vertex lowers the optimum by one");
  return ok;
}

}  // namespace

int main() {
  int failed = 0;
  auto grade = [&failed](int idx, const char* label, bool ok) {
    std::printf("%s: criterion %d — %s\n", ok ? "PASS" : "FAIL", idx, label);
    if (!ok) ++failed;
  };

  std::map<std::string, ClaimResult> rows;
  try {
    rows = run_battery();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "battery aborted: %s\n", e.what());
    for (int i = 1; i <= 8; ++i) grade(i, "verification battery aborted", false);
    return failed;
  }

  grade(1, "optimum oracles agree with brute force (trees to order 12 and 14)",
        rows_clean(rows, {"gamma_r_tree_vs_brute", "gamma_tree_vs_brute"}));

  grade(2, "value-class partition matches full enumeration (trees to 10, graphs to 6)",
        rows_clean(rows, {"partition_trees_vs_enumeration", "partition_graphs_vs_enumeration"}));

  grade(3, "deletion, edge-addition, structure and gluing laws hold exactly",
        rows_clean(rows, {"deletion_drop", "edge_add_sandwich", "function_structure",
                          "excellent_value_classes", "v_minus_components", "v02_adjacency",
                          "coalescence_laws"}));

  grade(4, "recognition is complete and generation sound (trees to 14, closure to 16)",
        rows_clean(rows, {"recognizer_complete", "generation_sound_exhaustive",
                          "generation_sound_random"}));

  bool c5 = rows_clean(rows, {"base_catalog"});
  try {
    c5 = catalog_pins() && c5;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "  catalog pins aborted: %s\n", e.what());
    c5 = false;
  }
  grade(5, "base catalog derives eleven pinned entries in strata 1/1/9", c5);

  grade(6, "class families: trichotomy, two-class and stability equivalences, coronas",
        rows_clean(rows, {"signature_trichotomy", "two_class_threeway", "uvr_threeway",
                          "corona_family"}));

  grade(7, "four-fifths bound with its equality family; 02-class sandwich",
        rows_clean(rows, {"four_fifths_bound", "four_fifths_family", "v02_sandwich"}));

  grade(8, "minimum-size census, saturation census, cycle minimality",
        rows_clean(rows, {"min_edges", "cea_census", "saturation_excellent", "cea_completion",
                          "cycle_minimality", "bipartite_minus_edge"}));

  return failed;
}

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rdx/enumerate.hpp"
#include "rdx/graph.hpp"
#include "rdx/json_out.hpp"
#include "rdx/partition.hpp"
#include "rdx/roman.hpp"

using namespace rdx;

namespace {

// Independent oracle: value sets straight from the list of all optimal
// functions.
std::vector<std::string> value_sets_by_enumeration(const Graph& g) {
  auto funcs = enumerate_gamma_r_functions(g);
  std::vector<uint8_t> masks(static_cast<size_t>(g.n()), 0);
  for (const auto& f : funcs)
    for (int v = 0; v < g.n(); ++v) masks[static_cast<size_t>(v)] |= static_cast<uint8_t>(1u << f[static_cast<size_t>(v)]);
  std::vector<std::string> names;
  for (uint8_t m : masks) names.push_back(value_set_name(m));
  return names;
}

std::vector<std::string> report_names(const PartitionReport& rep) {
  std::vector<std::string> names;
  for (auto vs : rep.value_sets) names.push_back(value_set_name(vs));
  return names;
}

Graph two_p5_centers() { return attach_edge(path_graph(5), 2, path_graph(5), 2); }

}  // namespace

TEST_CASE("value set names") {
  CHECK(value_set_name(0b001) == "0");
  CHECK(value_set_name(0b010) == "1");
  CHECK(value_set_name(0b100) == "2");
  CHECK(value_set_name(0b011) == "01");
  CHECK(value_set_name(0b101) == "02");
  CHECK(value_set_name(0b111) == "012");
  CHECK(class_names().size() == 7);
  CHECK(attains(0b101, 2));
  CHECK_FALSE(attains(0b101, 1));
}

TEST_CASE("partition of small fixed graphs") {
  SUBCASE("K_2: both vertices swing through all three values") {
    auto rep = partition_report(path_graph(2));
    CHECK(rep.gamma_r == 2);
    CHECK(report_names(rep) == std::vector<std::string>{"012", "012"});
    CHECK(rep.excellent);
    CHECK(rep.v_minus == std::vector<int>{0, 1});
  }
  SUBCASE("K_1: the lone vertex attains exactly 1") {
    auto rep = partition_report(path_graph(1));
    CHECK(rep.gamma_r == 1);
    CHECK(report_names(rep) == std::vector<std::string>{"1"});
    CHECK(rep.excellent);
    CHECK(rep.v_minus == std::vector<int>{0});
  }
  SUBCASE("P_3: unique optimal function 0-2-0") {
    auto rep = partition_report(path_graph(3));
    CHECK(rep.gamma_r == 2);
    CHECK(report_names(rep) == std::vector<std::string>{"0", "2", "0"});
    CHECK_FALSE(rep.excellent);
    CHECK(rep.v_minus.empty());
  }
  SUBCASE("P_4") {
    auto rep = partition_report(path_graph(4));
    CHECK(rep.gamma_r == 3);
    CHECK(report_names(rep) == std::vector<std::string>{"01", "02", "02", "01"});
    CHECK(rep.excellent);
    // Interior vertices attain only 0 and 2: removing one leaves K_1 + K_2
    // whose value is still 3, so only the ends sit in V^-.
    CHECK(rep.v_minus == std::vector<int>{0, 3});
  }
  SUBCASE("P_5") {
    auto rep = partition_report(path_graph(5));
    CHECK(rep.gamma_r == 4);
    CHECK(report_names(rep) == std::vector<std::string>{"012", "012", "02", "012", "012"});
    CHECK(rep.excellent);
    CHECK(rep.v_minus == std::vector<int>{0, 1, 3, 4});
    CHECK(class_members(rep, "02") == std::vector<int>{2});
    CHECK(class_members(rep, "012") == std::vector<int>{0, 1, 3, 4});
    CHECK(class_members(rep, "1").empty());
  }
  SUBCASE("P_7: exactly three optimal functions") {
    auto rep = partition_report(path_graph(7));
    CHECK(rep.gamma_r == 5);
    CHECK(report_names(rep) ==
          std::vector<std::string>{"01", "02", "02", "01", "02", "02", "01"});
    CHECK(rep.excellent);
    CHECK(rep.v_minus == std::vector<int>{0, 3, 6});
  }
  SUBCASE("K_{1,3}: leaves are stuck at 0") {
    auto rep = partition_report(star_graph(3));
    CHECK(rep.gamma_r == 2);
    CHECK(report_names(rep) == std::vector<std::string>{"2", "0", "0", "0"});
    CHECK_FALSE(rep.excellent);
  }
  SUBCASE("C_5: fully flexible") {
    auto rep = partition_report(cycle_graph(5));
    CHECK(rep.gamma_r == 4);
    CHECK(report_names(rep) ==
          std::vector<std::string>{"012", "012", "012", "012", "012"});
    CHECK(rep.excellent);
  }
  SUBCASE("C_6: excellent with nobody attaining 1") {
    auto rep = partition_report(cycle_graph(6));
    CHECK(rep.gamma_r == 4);
    CHECK(report_names(rep) ==
          std::vector<std::string>{"02", "02", "02", "02", "02", "02"});
    CHECK(rep.excellent);
    CHECK(rep.v_minus.empty());
  }
  SUBCASE("two P_5 centers joined: stems and leaves flexible, centers 02") {
    auto rep = partition_report(two_p5_centers());
    CHECK(rep.gamma_r == 8);
    CHECK(report_names(rep) ==
          std::vector<std::string>{"012", "012", "02", "012", "012", "012", "012", "02", "012", "012"});
    CHECK(rep.v_minus == std::vector<int>{0, 1, 3, 4, 5, 6, 8, 9});
  }
}

TEST_CASE("cycles are excellent") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(is_excellent(cycle_graph(n)));
  }
  CHECK_FALSE(is_excellent(path_graph(3)));
  CHECK(is_excellent(path_graph(4)));
  CHECK_FALSE(is_excellent(star_graph(3)));
}

TEST_CASE("status letters of excellent trees") {
  CHECK(derive_statuses(path_graph(2)) == "DD");
  CHECK(derive_statuses(path_graph(4)) == "ABBA");
  CHECK(derive_statuses(path_graph(5)) == "DDCDD");
  CHECK(derive_statuses(path_graph(7)) == "ABBABBA");
  CHECK(derive_statuses(two_p5_centers()) == "DDCDDDDCDD");
  CHECK_THROWS_AS(derive_statuses(path_graph(3)), std::invalid_argument);   // not excellent
  CHECK_THROWS_AS(derive_statuses(path_graph(1)), std::invalid_argument);   // order 1
  CHECK_THROWS_AS(derive_statuses(cycle_graph(5)), std::invalid_argument);  // not a tree
}

TEST_CASE("v_minus by deletion agrees with the value sets") {
  CHECK(v_minus_by_deletion(path_graph(4)) == std::vector<int>{0, 3});
  CHECK(v_minus_by_deletion(path_graph(3)).empty());
  CHECK(v_minus_by_deletion(path_graph(5)) == std::vector<int>{0, 1, 3, 4});
  CHECK(v_minus_by_deletion(path_graph(1)) == std::vector<int>{0});

  for (int n = 2; n <= 8; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      auto rep = partition_report(t);
      CHECK(v_minus_by_deletion(t) == rep.v_minus);
    });
  for (int n = 2; n <= 5; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      auto rep = partition_report(g);
      CHECK(v_minus_by_deletion(g) == rep.v_minus);
    });
}

TEST_CASE("criticality classes") {
  SUBCASE("vertex-removal critical") {
    CHECK(is_cvr(path_graph(2)));
    CHECK(is_cvr(cycle_graph(5)));
    CHECK_FALSE(is_cvr(path_graph(3)));
    CHECK_FALSE(is_cvr(path_graph(4)));  // interior deletions keep the value
    CHECK_FALSE(is_cvr(path_graph(5)));
    CHECK_FALSE(is_cvr(cycle_graph(6)));
  }
  SUBCASE("edge-addition critical") {
    CHECK(is_cea(path_graph(2)));        // complete, vacuous
    CHECK(is_cea(complete_graph(4)));    // complete, vacuous
    CHECK(is_cea(cycle_graph(4)));
    CHECK_FALSE(is_cea(path_graph(4)));  // the chord to C_4 keeps the value
    CHECK_FALSE(is_cea(path_graph(5)));  // closing the cycle keeps the value
  }
  SUBCASE("domination survives every deletion") {
    CHECK_FALSE(is_uvr(cycle_graph(4)));  // gamma falls from 2 to 1
    CHECK(is_uvr(cycle_graph(5)));
    CHECK(is_uvr(cycle_graph(6)));
    CHECK(is_uvr(path_graph(5)));
    CHECK(is_uvr(path_graph(2)));
    CHECK(is_uvr(two_p5_centers()));
    CHECK_FALSE(is_uvr(path_graph(4)));
    CHECK_FALSE(is_uvr(path_graph(1)));
    CHECK_FALSE(is_uvr(star_graph(3)));
  }
}

TEST_CASE("constrained DP value sets match enumeration on all small trees") {
  for (int n = 2; n <= 8; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      auto rep = partition_report(t);
      CHECK(report_names(rep) == value_sets_by_enumeration(t));
    });
}

TEST_CASE("sweep value sets match enumeration on all small connected graphs") {
  for (int n = 2; n <= 5; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      auto rep = partition_report(g);
      CHECK(report_names(rep) == value_sets_by_enumeration(g));
    });
}

TEST_CASE("coalescing two trees at flexible-01 vertices") {
  SUBCASE("P_4 glued to P_4 end-to-end is P_7") {
    auto glued = coalesce(path_graph(4), 0, path_graph(4), 0);
    auto rep = partition_report(glued.graph);
    CHECK(rep.gamma_r == 3 + 3 - 1);
    // Classes of the glue restrict to the classes of the parts.
    auto rep1 = partition_report(path_graph(4));
    for (int v = 0; v < 4; ++v)
      CHECK(rep.value_sets[static_cast<size_t>(v)] == rep1.value_sets[static_cast<size_t>(v)]);
    for (int w = 0; w < 4; ++w)
      CHECK(rep.value_sets[static_cast<size_t>(glued.b_map[static_cast<size_t>(w)])] ==
            rep1.value_sets[static_cast<size_t>(w)]);
  }
  SUBCASE("exhaustive small pairs: weight law and pointwise class union") {
    struct Part {
      Graph tree;
      PartitionReport rep;
      int at01;
    };
    std::vector<Part> parts;
    for (int n = 2; n <= 8; ++n)
      for_each_free_tree(n, [&](const Graph& t) {
        auto rep = partition_report(t);
        auto v01 = class_members(rep, "01");
        if (!v01.empty()) parts.push_back({t, rep, v01.front()});
      });
    int checked = 0;
    for (const auto& a : parts)
      for (const auto& b : parts) {
        auto glued = coalesce(a.tree, a.at01, b.tree, b.at01);
        auto rep = partition_report(glued.graph);
        CHECK(rep.gamma_r == a.rep.gamma_r + b.rep.gamma_r - 1);
        for (int v = 0; v < a.tree.n(); ++v)
          CHECK(rep.value_sets[static_cast<size_t>(v)] == a.rep.value_sets[static_cast<size_t>(v)]);
        for (int w = 0; w < b.tree.n(); ++w)
          CHECK(rep.value_sets[static_cast<size_t>(glued.b_map[static_cast<size_t>(w)])] ==
                b.rep.value_sets[static_cast<size_t>(w)]);
        ++checked;
      }
    CHECK(checked >= 25);
  }
  SUBCASE("gluing a 012 vertex to a 01 vertex keeps the weight law") {
    // Stem of P_5 (class 012) onto an end of P_4 (class 01).
    auto glued = coalesce(path_graph(5), 1, path_graph(4), 0);
    auto rep = partition_report(glued.graph);
    CHECK(rep.gamma_r == 4 + 3 - 1);
    CHECK(value_set_name(rep.value_sets[1]) == "012");
  }
}

TEST_CASE("partition scales to long paths") {
  auto rep = partition_report(path_graph(100));
  CHECK(rep.gamma_r == 67);
  CHECK(rep.excellent);
  CHECK(derive_statuses(path_graph(100), rep).size() == 100);
}

TEST_CASE("partition caps and errors") {
  CHECK_THROWS_AS(partition_report(Graph()), std::invalid_argument);
  CHECK_THROWS_AS(partition_report(cycle_graph(21)), std::invalid_argument);
}

TEST_CASE("partition report serializes deterministically") {
  auto g = path_graph(4);
  auto j = partition_json(g, partition_report(g));
  CHECK(j.dump() ==
        R"({"n":4,"gamma_r":3,"value_sets":["01","02","02","01"],)"
        R"("classes":{"V0":[],"V1":[],"V2":[],"V01":[0,3],"V02":[1,2],"V12":[],"V012":[]},)"
        R"("v_minus":[0,3],"excellent":true,"statuses":"ABBA"})");
  auto h = cycle_graph(5);
  auto jh = partition_json(h, partition_report(h));
  CHECK_FALSE(jh.contains("statuses"));  // not a tree
  CHECK(jh["excellent"] == true);
  CHECK(graph_json(path_graph(3)).dump() == R"({"n":3,"edges":[[0,1],[1,2]]})");
}

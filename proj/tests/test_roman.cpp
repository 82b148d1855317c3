#include "doctest.h"
#include "rdx/enumerate.hpp"
#include "rdx/graph.hpp"
#include "rdx/roman.hpp"

using namespace rdx;

TEST_CASE("is_rdf and weights") {
  Graph p3 = path_graph(3);
  CHECK(is_rdf(p3, {0, 2, 0}));
  CHECK_FALSE(is_rdf(p3, {0, 1, 0}));
  CHECK_FALSE(is_rdf(p3, {0, 2}));
  CHECK(is_rdf(p3, {1, 1, 1}));
  CHECK(weight(RdFunction{0, 2, 1}) == 3);
  CHECK(function_digits(RdFunction{1, 0, 2, 0}) == "1020");
}

TEST_CASE("gamma_r on fixed instances") {
  CHECK(gamma_r_tree(path_graph(1)) == 1);
  CHECK(gamma_r_tree(path_graph(2)) == 2);
  CHECK(gamma_r_tree(path_graph(3)) == 2);
  CHECK(gamma_r_tree(path_graph(4)) == 3);
  CHECK(gamma_r_tree(path_graph(5)) == 4);
  CHECK(gamma_r_tree(path_graph(7)) == 5);
  CHECK(gamma_r_tree(star_graph(5)) == 2);
  CHECK(gamma_r_graph(cycle_graph(5)) == 4);
  CHECK(gamma_r_graph(cycle_graph(9)) == 6);
  CHECK(gamma_r_graph(complete_graph(6)) == 2);
  CHECK(gamma_r_graph(complete_bipartite(3, 3)) == 4);
  // two P_5 centers joined by an edge
  Graph two_p5 = attach_edge(path_graph(5), 2, path_graph(5), 2);
  CHECK(two_p5.n() == 10);
  CHECK(gamma_r_tree(two_p5) == 8);
  CHECK_THROWS_AS(gamma_r_tree(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("constrained solves") {
  Graph p3 = path_graph(3);
  CHECK(gamma_r_constrained(p3, 1, 2) == 2);
  CHECK(gamma_r_constrained(p3, 0, 2) == 3);
  CHECK(gamma_r_constrained(p3, 1, 0) == 3);
  Graph k1 = path_graph(1);
  CHECK(gamma_r_constrained(k1, 0, 0) == -1);  // a lone vertex cannot take 0
}

TEST_CASE("forest solver handles disconnected inputs") {
  Graph f = parse_graph("n 5\n0 1\n3 4\n");  // P_2 + K_1 + P_2
  CHECK(gamma_r_forest(f) == 5);
  CHECK(gamma_forest(f) == 3);
}

TEST_CASE("brute force agrees with the DP and the sweep on all small trees") {
  for (int n = 1; n <= 9; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      int dp = gamma_r_tree(t);
      CHECK(dp == gamma_r_bruteforce(t));
      CHECK(dp == gamma_r_graph(t));
      CHECK(gamma_tree(t) == gamma_bruteforce(t));
    });
}

TEST_CASE("sweep agrees with brute force on all small connected graphs") {
  for (int n = 1; n <= 6; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      CHECK(gamma_r_graph(g) == gamma_r_bruteforce(g));
    });
}

TEST_CASE("enumerating minimum functions") {
  auto fs = enumerate_gamma_r_functions(path_graph(3));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == RdFunction{0, 2, 0});

  fs = enumerate_gamma_r_functions(path_graph(2));
  REQUIRE(fs.size() == 3);  // lexicographic
  CHECK(fs[0] == RdFunction{0, 2});
  CHECK(fs[1] == RdFunction{1, 1});
  CHECK(fs[2] == RdFunction{2, 0});

  fs = enumerate_gamma_r_functions(path_graph(4));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == RdFunction{0, 2, 0, 1});
  CHECK(fs[1] == RdFunction{1, 0, 2, 0});

  for (const auto& f : enumerate_gamma_r_functions(cycle_graph(6))) {
    CHECK(is_rdf(cycle_graph(6), f));
    CHECK(weight(f) == 4);
  }
}

TEST_CASE("plus-edge solve agrees with building the graph") {
  for (int n = 4; n <= 8; ++n)
    for_each_free_tree(n, [&](const Graph& t) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (t.has_edge(x, y)) continue;
          Graph g(n);
          for (auto [u, v] : t.edges()) g.add_edge(u, v);
          g.add_edge(x, y);
          CHECK(gamma_r_plus_edge(t, x, y) == gamma_r_graph(g));
        }
    });
}

TEST_CASE("ordinary domination") {
  CHECK(gamma_tree(path_graph(4)) == 2);
  CHECK(gamma_tree(path_graph(7)) == 3);
  CHECK(gamma_tree(star_graph(3)) == 1);
  CHECK(gamma_graph(cycle_graph(7)) == 3);
  CHECK(gamma_graph(complete_graph(5)) == 1);
}

TEST_CASE("graph partition sweep basics") {
  auto part = graph_partition_sweep(path_graph(4));
  CHECK(part.gamma_r == 3);
  // P_4 value sets: {0,1}, {0,2}, {0,2}, {0,1}
  CHECK(part.value_sets == std::vector<uint8_t>{3, 5, 5, 3});
  auto c5 = graph_partition_sweep(cycle_graph(5));
  for (auto vs : c5.value_sets) CHECK(vs == 7);  // vertex-transitive, all labels attained
}

TEST_CASE("one optimal function is optimal") {
  for (const Graph& g : {path_graph(7), star_graph(4), cycle_graph(6), complete_graph(4)}) {
    auto f = one_gamma_r_function(g);
    CHECK(is_rdf(g, f));
    CHECK(weight(f) == gamma_r_graph(g));
  }
  // tree reconstruction path (n > 20 forces the DP pinning route)
  Graph big = path_graph(25);
  auto f = one_gamma_r_function(big);
  CHECK(is_rdf(big, f));
  CHECK(weight(f) == gamma_r_tree(big));
}

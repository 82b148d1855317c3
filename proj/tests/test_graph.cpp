#include <set>

#include "doctest.h"
#include "rdx/canonical.hpp"
#include "rdx/enumerate.hpp"
#include "rdx/graph.hpp"

using namespace rdx;

TEST_CASE("graph basics and builders") {
  Graph p4 = path_graph(4);
  CHECK(p4.n() == 4);
  CHECK(p4.m() == 3);
  CHECK(p4.has_edge(1, 2));
  CHECK_FALSE(p4.has_edge(0, 2));
  CHECK(p4.degree(1) == 2);
  CHECK(is_tree(p4));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK(is_connected(cycle_graph(5)));
  CHECK(star_graph(3).degree(0) == 3);
  CHECK(complete_graph(4).m() == 6);
  CHECK(complete_bipartite(3, 3).m() == 9);
  CHECK_THROWS_AS(p4.add_edge(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(p4.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(p4.add_edge(0, 9), std::invalid_argument);
}

TEST_CASE("corona construction") {
  Graph c = corona_graph(path_graph(2));
  CHECK(c.n() == 6);
  CHECK(c.m() == 5);
  CHECK(c.degree(0) == 3);  // stem: partner + two leaves
  CHECK(c.degree(2) == 1);
  Graph c3 = corona_graph(path_graph(3));
  CHECK(c3.n() == 9);
  for (int v = 3; v < 9; ++v) CHECK(c3.degree(v) == 1);
}

TEST_CASE("parse and format round-trip") {
  Graph g = parse_graph("# a path\n0 1\n1 2\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  Graph h = parse_graph("n 4\n0 1\n");
  CHECK(h.n() == 4);
  CHECK(h.m() == 1);
  CHECK(parse_graph(format_graph(g)).m() == 2);

  CHECK_THROWS_AS(parse_graph(""), parse_error);
  CHECK_THROWS_AS(parse_graph("# only comments\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("0 zero"), parse_error);
  CHECK_THROWS_AS(parse_graph("1 1"), parse_error);
  CHECK_THROWS_AS(parse_graph("0 1\n0 1"), parse_error);
  CHECK_THROWS_AS(parse_graph("0 1\n1 0"), parse_error);
  CHECK_THROWS_AS(parse_graph("n 2\n0 5"), parse_error);
  CHECK_THROWS_AS(parse_graph("0 1 2"), parse_error);
  CHECK_THROWS_AS(parse_graph("0"), parse_error);
}

TEST_CASE("shorthand expansion") {
  CHECK(is_shorthand("p:7"));
  CHECK(is_shorthand("corona:p:3"));
  CHECK_FALSE(is_shorthand("edges.txt"));
  CHECK(expand_shorthand("p:7").n() == 7);
  CHECK(expand_shorthand("c:5").m() == 5);
  CHECK(expand_shorthand("star:3").n() == 4);
  CHECK(expand_shorthand("corona:p:3").n() == 9);
  Graph inline_corona = expand_shorthand("corona:0-1,1-2");
  CHECK(inline_corona.n() == 9);
  CHECK_THROWS_AS(expand_shorthand("p:x"), parse_error);
  CHECK_THROWS_AS(expand_shorthand("corona:0-1,3-4"), parse_error);  // disconnected base
  CHECK_THROWS_AS(expand_shorthand("q:4"), parse_error);
}

TEST_CASE("traversal and surgery") {
  Graph t = parse_graph("0 1\n1 2\n1 3\n3 4\n");
  auto comp = components(t);
  CHECK(comp == std::vector<int>{0, 0, 0, 0, 0});
  auto path = diametral_path(t);
  CHECK(path.size() == 4);  // 0..4 has diameter 3
  CHECK(path.front() != path.back());

  auto del = delete_vertices(t, {1});
  CHECK(del.graph.n() == 4);
  CHECK(del.graph.m() == 1);
  CHECK(del.new_of_old[1] == -1);
  CHECK(del.old_of_new[del.new_of_old[3]] == 3);

  Graph joined = attach_edge(path_graph(2), 1, path_graph(3), 0);
  CHECK(joined.n() == 5);
  CHECK(joined.has_edge(1, 2));
  CHECK(is_tree(joined));

  auto merged = coalesce(path_graph(3), 2, path_graph(3), 0);
  CHECK(merged.graph.n() == 5);
  CHECK(is_tree(merged.graph));
  CHECK(merged.b_map[0] == 2);
  CHECK(merged.b_map[1] == 3);
  CHECK(merged.b_map[2] == 4);
  CHECK(merged.graph.has_edge(2, 3));
}

TEST_CASE("canonical codes distinguish trees") {
  // same free shape, different labelings of the vertices
  Graph a = parse_graph("0 1\n1 2\n2 3\n");
  Graph b = parse_graph("3 1\n1 0\n0 2\n");  // P_4 with scrambled names
  CHECK(free_code(a) == free_code(b));
  CHECK(free_code(a) != free_code(star_graph(3)));

  std::string sa = "ABBA";
  std::string sb = "BBAA";  // statuses follow the scrambled names: path 3-1-0-2
  auto iso = labeled_iso(a, sa, b, sb);
  REQUIRE(iso.has_value());
  for (auto [u, v] : a.edges()) CHECK(b.has_edge((*iso)[u], (*iso)[v]));
  for (int v = 0; v < 4; ++v) CHECK(sa[v] == sb[(*iso)[v]]);
  CHECK_FALSE(labeled_iso(a, "ABBA", b, "AABB").has_value());

  // bicentral orientation: P_6 with an asymmetric labeling
  Graph p6 = path_graph(6);
  std::string s6 = "ABCDAB";
  auto self = labeled_iso(p6, s6, p6, s6);
  REQUIRE(self.has_value());
  for (int v = 0; v < 6; ++v) CHECK(s6[v] == s6[(*self)[v]]);
}

TEST_CASE("tree centers") {
  CHECK(tree_centers(path_graph(5)) == std::vector<int>{2});
  CHECK(tree_centers(path_graph(6)) == std::vector<int>{2, 3});
  CHECK(tree_centers(star_graph(5)) == std::vector<int>{0});
}

TEST_CASE("free tree enumeration matches known counts") {
  const long want[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) CHECK(count_free_trees(n) == want[n]);
  // every emitted tree really is a tree on n vertices, pairwise non-isomorphic
  std::set<std::string> codes;
  for_each_free_tree(9, [&](const Graph& t) {
    CHECK(is_tree(t));
    CHECK(t.n() == 9);
    CHECK(codes.insert(free_code(t)).second);
  });
  CHECK(codes.size() == 47);
}

TEST_CASE("free tree enumeration agrees with the parent-array generator") {
  for (int n = 2; n <= 12; ++n) CHECK(count_free_trees(n) == count_free_trees_brute(n));
}

TEST_CASE("connected graph enumeration") {
  const long want[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(count_connected_graphs(n) == want[n]);
  for (int n = 1; n <= 6; ++n) CHECK(count_connected_graphs_brute(n) == want[n]);
  std::set<uint64_t> certs;
  for_each_connected_graph(5, [&](const Graph& g) {
    CHECK(g.n() == 5);
    CHECK(is_connected(g));
    CHECK(certs.insert(graph_cert(g)).second);
  });
  CHECK(certs.size() == 21);
}

TEST_CASE("graph certificates are isomorphism invariants") {
  CHECK(graph_cert(path_graph(4)) == graph_cert(parse_graph("2 0\n0 3\n3 1\n")));
  CHECK(graph_cert(path_graph(4)) != graph_cert(star_graph(3)));
  CHECK(graph_cert(cycle_graph(5)) != graph_cert(path_graph(5)));
}

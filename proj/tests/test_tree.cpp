#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "oracle.hpp"
#include "treespectra/pair_matrix.hpp"
#include "treespectra/tree.hpp"

using namespace treespectra;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::bad_params;
}

std::set<VertexPair> edge_set(const Tree& t) {
  return std::set<VertexPair>(t.edges().begin(), t.edges().end());
}

}  // namespace

TEST_CASE("vertex pair canonical form") {
  VertexPair p(4, 2);
  CHECK(p.first() == 2);
  CHECK(p.second() == 4);
  CHECK(p == VertexPair(2, 4));
  CHECK(p.label() == "2-4");
  CHECK(p.other(2) == 4);
  CHECK_THROWS_AS(VertexPair(3, 3), Error);
  CHECK_THROWS_AS(VertexPair(0, 1), Error);
}

TEST_CASE("build_tree validates") {
  Tree p2 = Tree::from_edges({VertexPair(1, 2)}, 2);
  CHECK(p2.vertex_count() == 2);

  // the worked example tree builds from either edge order
  Tree t = Tree::from_edges(
      {VertexPair(1, 2), VertexPair(2, 3), VertexPair(2, 4), VertexPair(4, 5)}, 5);
  CHECK(t.edges().size() == 4);
  CHECK(edge_set(t) == edge_set(oracle::figure_tree()));

  CHECK(code_of([] {
          Tree::from_edges({VertexPair(1, 2), VertexPair(3, 4)}, 4);
        }) == Errc::disconnected_input);
  CHECK(code_of([] {
          Tree::from_edges({VertexPair(1, 2), VertexPair(1, 2), VertexPair(3, 4)}, 4);
        }) == Errc::cycle_detected);
  CHECK(code_of([] {
          Tree::from_edges({VertexPair(1, 2), VertexPair(2, 5)}, 3);
        }) == Errc::bad_label);
  CHECK(code_of([] {
          Tree::from_edges({VertexPair(1, 2), VertexPair(2, 3), VertexPair(1, 3)}, 3);
        }) == Errc::wrong_edge_count);
  CHECK(code_of([] { Tree::from_edges({}, 1); }) == Errc::size_too_small);
}

TEST_CASE("family generators") {
  Tree s4 = make_star(4);
  CHECK(s4.edges() ==
        std::vector<VertexPair>{VertexPair(1, 2), VertexPair(1, 3), VertexPair(1, 4)});

  Tree p5 = make_path(5);
  for (int i = 1; i < 5; ++i) CHECK(p5.edges()[std::size_t(i - 1)] == VertexPair(i, i + 1));

  // bi-star labeling: e_1={1,2}, e_2={2,3}, e_i={3,i+1}
  Tree b6 = make_bistar(6);
  CHECK(b6.edges() == std::vector<VertexPair>{VertexPair(1, 2), VertexPair(2, 3), VertexPair(3, 4),
                                              VertexPair(3, 5), VertexPair(3, 6)});
  CHECK(b6.degree(2) == 2);
  CHECK(b6.degree(3) == 4);

  CHECK(code_of([] { make_bistar(3); }) == Errc::size_too_small);

  // P_3 and S_3 are the same unlabeled tree
  CHECK(make_path(3).leaves().first == make_star(3).leaves().first);
}

TEST_CASE("prufer decode") {
  Tree s = prufer_decode(std::vector<int>{2, 2}, 4);
  CHECK(edge_set(s) ==
        std::set<VertexPair>{VertexPair(1, 2), VertexPair(2, 3), VertexPair(2, 4)});

  CHECK(code_of([] { prufer_decode(std::vector<int>{1}, 4); }) == Errc::bad_prufer_seq);
  CHECK(code_of([] { prufer_decode(std::vector<int>{9, 1}, 4); }) == Errc::bad_prufer_seq);

  // cross-check against an independently written decoder, all sequences n=4,5
  for (int n : {4, 5}) {
    std::vector<int> seq(std::size_t(n - 2), 1);
    for (;;) {
      Tree fast = prufer_decode(seq, n);
      auto naive = oracle::prufer_decode_naive(seq, n);
      CHECK(edge_set(fast) == std::set<VertexPair>(naive.begin(), naive.end()));
      int i = n - 3;
      while (i >= 0 && seq[std::size_t(i)] == n) seq[std::size_t(i--)] = 1;
      if (i < 0) break;
      ++seq[std::size_t(i)];
    }
  }
}

TEST_CASE("distances and path edge sets") {
  Tree p3 = make_path(3);
  CHECK(p3.distance(1, 3) == 2);

  Tree s6 = make_star(6);
  for (int a = 2; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) CHECK(s6.distance(a, b) == 2);

  Tree fig = oracle::figure_tree();
  CHECK(fig.distance(1, 5) == 3);
  CHECK(fig.path_edge_set(VertexPair(1, 4)) == std::vector<int>{0, 1});
  CHECK(fig.path_edge_set(VertexPair(3, 5)) == std::vector<int>{1, 2, 3});
  for (int e = 0; e < 4; ++e)
    CHECK(fig.path_edge_set(fig.edges()[std::size_t(e)]) == std::vector<int>{e});

  // |path_edge_set| equals the distance
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Tree t = random_tree(9, seed);
    for (int i = 1; i <= 9; ++i)
      for (int j = i + 1; j <= 9; ++j)
        CHECK(int(t.path_edge_set(VertexPair(i, j)).size()) == t.distance(i, j));
  }
}

TEST_CASE("distance matrix is exact and symmetric") {
  Tree p3 = make_path(3);
  ExactMatrix d = p3.distance_matrix();
  CHECK(d(0, 2) == 2);
  CHECK(d.is_symmetric());
  for (std::size_t i = 0; i < 3; ++i) CHECK(d(i, i) == 0);
}

TEST_CASE("leaves") {
  CHECK(make_path(7).leaves() == std::pair<int, std::vector<int>>{2, {1, 7}});
  CHECK(make_star(7).leaves().first == 6);
  CHECK(make_bistar(8).leaves().first == 6);  // n-2 pendant vertices
}

TEST_CASE("line graph blocks") {
  auto star_blocks = make_star(6).line_graph_blocks();
  REQUIRE(star_blocks.size() == 1);
  CHECK(star_blocks[0].edge_indices.size() == 5);

  auto path_blocks = make_path(6).line_graph_blocks();
  CHECK(path_blocks.size() == 4);
  for (const auto& b : path_blocks) CHECK(b.edge_indices.size() == 2);

  auto bistar_blocks = make_bistar(7).line_graph_blocks();
  REQUIRE(bistar_blocks.size() == 2);
  CHECK(bistar_blocks[0].edge_indices.size() == 2);
  CHECK(bistar_blocks[1].edge_indices.size() == 5);

  CHECK(code_of([] { make_path(2).line_graph_blocks(); }) == Errc::no_internal_vertex);

  // block count = n - p and total block size = sum of internal degrees
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Tree t = random_tree(8, seed);
    auto blocks = t.line_graph_blocks();
    auto [p, leaf_list] = t.leaves();
    CHECK(int(blocks.size()) == 8 - p);
    std::size_t total = 0;
    int degree_total = 0;
    for (const auto& b : blocks) total += b.edge_indices.size();
    for (int v = 1; v <= 8; ++v)
      if (t.degree(v) >= 2) degree_total += t.degree(v);
    CHECK(total == std::size_t(degree_total));
  }
}

TEST_CASE("labeled tree enumeration") {
  CHECK(labeled_tree_count(3) == 3);
  CHECK(labeled_tree_count(4) == 16);
  CHECK(labeled_tree_count(6) == 1296);

  for (int n : {2, 3, 4, 6}) {
    std::set<std::set<VertexPair>> seen;
    for (const Tree& t : LabeledTreeRange(n)) seen.insert(edge_set(t));
    CHECK(seen.size() == labeled_tree_count(n));
  }

  CHECK(code_of([] { LabeledTreeRange(9); }) == Errc::cap_exceeded);
}

TEST_CASE("random trees are deterministic per seed") {
  Tree a = random_tree(10, 42);
  Tree b = random_tree(10, 42);
  CHECK(a.edges() == b.edges());
  CHECK(edge_set(random_tree(10, 1)) != edge_set(random_tree(10, 2)));
}

TEST_CASE("four point condition holds exhaustively") {
  std::vector<Tree> trees;
  for (int n = 2; n <= 9; ++n) {
    trees.push_back(make_path(n));
    if (n >= 3) trees.push_back(make_star(n));
    if (n >= 4) trees.push_back(make_bistar(n));
    trees.push_back(random_tree(n, std::uint64_t(n)));
  }
  for (const Tree& t : trees) {
    const int n = t.vertex_count();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            auto s = quadruple_sums(t, i, j, k, l);
            std::sort(s.begin(), s.end());
            CHECK(s[1] == s[2]);
          }
  }
}

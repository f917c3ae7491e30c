#pragma once

#include <compare>
#include <iterator>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "treespectra/error.hpp"
#include "treespectra/matrix.hpp"

namespace treespectra {

/// Unordered pair of distinct vertex labels, stored min-first so equality,
/// ordering and hashing are canonical.
class VertexPair {
 public:
  VertexPair(int a, int b) : lo_(a < b ? a : b), hi_(a < b ? b : a) {
    if (a == b) fail(Errc::bad_label, "vertex pair needs two distinct vertices");
    if (lo_ < 1) fail(Errc::bad_label, "vertex labels are 1-based");
  }

  int first() const { return lo_; }
  int second() const { return hi_; }
  bool contains(int v) const { return v == lo_ || v == hi_; }
  /// The vertex of the pair that is not `v`.
  int other(int v) const { return v == lo_ ? hi_ : lo_; }

  std::string label() const { return std::to_string(lo_) + "-" + std::to_string(hi_); }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;

 private:
  int lo_;
  int hi_;
};

/// Clique of line-graph vertices (tree edges) sharing one internal tree vertex.
struct LineGraphBlock {
  int vertex;                    // the internal vertex, degree >= 2
  std::vector<int> edge_indices; // 0-based indices into Tree::edges(), ascending
};

/// Labeled tree on vertices 1..n with a fixed edge order. Edge identity is
/// positional: edges()[i] is e_{i+1} for the lifetime of the value. Immutable
/// after construction and safe to share across threads.
class Tree {
 public:
  /// Validates label range, edge count, simplicity and connectivity.
  static Tree from_edges(std::span<const VertexPair> edges, int n);
  static Tree from_edges(std::initializer_list<VertexPair> edges, int n) {
    return from_edges(std::span<const VertexPair>(edges.begin(), edges.size()), n);
  }

  int vertex_count() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }

  bool has_edge(const VertexPair& p) const { return edge_index_or(p) >= 0; }
  /// 0-based index of p in the edge sequence, or -1 if p is a non-edge.
  int edge_index_or(const VertexPair& p) const;

  /// d(i,j); table computed once at construction (BFS per root).
  int distance(int i, int j) const { return dist_[size_t(i - 1) * n_ + (j - 1)]; }
  int distance(const VertexPair& p) const { return distance(p.first(), p.second()); }
  /// The n x n distance matrix as an exact matrix (symmetric, zero diagonal).
  ExactMatrix distance_matrix() const;

  /// Edge indices (0-based, ascending) on the unique path between the pair's
  /// endpoints; size equals the tree distance.
  std::vector<int> path_edge_set(const VertexPair& p) const;
  /// Same path as a bitmask over edge coordinates (word w, bit b = edge 64w+b).
  std::vector<std::uint64_t> path_edge_bits(const VertexPair& p) const;

  std::pair<int, std::vector<int>> leaves() const;

  /// Blocks B_1..B_{n-p} of the line graph: one per internal vertex, ascending
  /// by vertex label. Errors with NoInternalVertex when n = 2.
  std::vector<LineGraphBlock> line_graph_blocks() const;

 private:
  Tree(int n, std::vector<VertexPair> edges);

  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> adj_;   // adj_[v], v in 1..n
  std::vector<int> parent_;             // BFS tree rooted at 1: parent_[v]
  std::vector<int> parent_edge_;        // edge index to parent
  std::vector<int> dist_;               // row-major n*n
};

// Generators. Families follow fixed labelings: path(n) has e_i = {i, i+1};
// star(n) has center 1 and e_i = {1, i+1}; bistar(n) maps the standard
// labeling v_0..v_{n-1} to 1..n, giving e_1 = {1,2}, e_2 = {2,3} and
// e_i = {3, i+1} for 3 <= i <= n-1 (so vertex 2 carries one pendant vertex
// and vertex 3 carries n-3 of them).
Tree make_path(int n);
Tree make_star(int n);
Tree make_bistar(int n);

/// Standard Prüfer decode; seq has length n-2 with labels in 1..n.
Tree prufer_decode(std::span<const int> seq, int n);

/// Uniform labeled tree via a uniform Prüfer sequence from a seeded mt19937_64.
Tree random_tree(int n, std::uint64_t seed);

std::uint64_t labeled_tree_count(int n);  // n^(n-2)

/// All n^(n-2) labeled trees on n vertices by Prüfer odometer, 2 <= n <= 8.
/// Forward range; independent iterators may run on different threads.
class LabeledTreeRange {
 public:
  explicit LabeledTreeRange(int n);

  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Tree;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Tree;

    Iterator() = default;
    Iterator(int n, bool end);

    Tree operator*() const;
    Iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const Iterator& o) const { return done_ == o.done_ && seq_ == o.seq_; }

   private:
    int n_ = 0;
    bool done_ = true;
    std::vector<int> seq_;
  };

  Iterator begin() const { return Iterator(n_, false); }
  Iterator end() const { return Iterator(n_, true); }
  std::uint64_t size() const { return labeled_tree_count(n_); }

 private:
  int n_;
};

}  // namespace treespectra

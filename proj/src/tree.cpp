#include "treespectra/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "treespectra/numbers.hpp"

namespace treespectra {

Tree::Tree(int n, std::vector<VertexPair> edges) : n_(n), edges_(std::move(edges)) {
  adj_.assign(size_t(n_) + 1, {});
  for (int i = 0; i < int(edges_.size()); ++i) {
    adj_[edges_[i].first()].push_back(edges_[i].second());
    adj_[edges_[i].second()].push_back(edges_[i].first());
  }

  // BFS tree rooted at 1, used by path queries.
  parent_.assign(size_t(n_) + 1, 0);
  parent_edge_.assign(size_t(n_) + 1, -1);
  std::vector<int> order;
  order.reserve(n_);
  std::vector<char> seen(size_t(n_) + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    order.push_back(u);
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent_[w] = u;
        q.push(w);
      }
    }
  }
  for (int i = 0; i < int(edges_.size()); ++i) {
    const VertexPair& e = edges_[i];
    if (parent_[e.second()] == e.first()) parent_edge_[e.second()] = i;
    if (parent_[e.first()] == e.second()) parent_edge_[e.first()] = i;
  }

  // All-pairs distances, BFS per root.
  dist_.assign(size_t(n_) * n_, 0);
  std::vector<int> d(size_t(n_) + 1);
  for (int s = 1; s <= n_; ++s) {
    std::fill(d.begin(), d.end(), -1);
    d[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : adj_[u]) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          bfs.push(w);
        }
      }
    }
    for (int t = 1; t <= n_; ++t) dist_[size_t(s - 1) * n_ + (t - 1)] = d[t];
  }
}

Tree Tree::from_edges(std::span<const VertexPair> edges, int n) {
  if (n < 2) fail(Errc::size_too_small, "a tree needs at least 2 vertices");
  std::set<VertexPair> distinct;
  for (const VertexPair& e : edges) {
    if (e.second() > n)
      fail(Errc::bad_label, "vertex " + std::to_string(e.second()) + " out of range 1.." +
                                std::to_string(n));
    if (!distinct.insert(e).second)
      fail(Errc::cycle_detected, "duplicate edge " + e.label());
  }

  std::vector<std::vector<int>> adj(size_t(n) + 1);
  for (const VertexPair& e : edges) {
    adj[e.first()].push_back(e.second());
    adj[e.second()].push_back(e.first());
  }
  std::vector<char> seen(size_t(n) + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n) fail(Errc::disconnected_input, "graph is not connected");
  // Connected with distinct simple edges: exactly n-1 of them means a tree;
  // more means a cycle somewhere, fewer is impossible.
  if (int(edges.size()) != n - 1)
    fail(Errc::wrong_edge_count, "expected " + std::to_string(n - 1) + " edges, got " +
                                     std::to_string(edges.size()));

  return Tree(n, std::vector<VertexPair>(edges.begin(), edges.end()));
}

int Tree::edge_index_or(const VertexPair& p) const {
  if (p.second() > n_) return -1;
  // Walk the shorter adjacency list; trees are shallow so this is plenty.
  for (int i = 0; i < int(edges_.size()); ++i)
    if (edges_[i] == p) return i;
  return -1;
}

std::vector<int> Tree::path_edge_set(const VertexPair& p) const {
  if (p.second() > n_) fail(Errc::bad_label, "pair " + p.label() + " out of range");
  // Climb both endpoints toward the root until they meet.
  std::vector<int> left, right;
  int a = p.first(), b = p.second();
  int da = distance(1, a), db = distance(1, b);
  while (da > db) {
    left.push_back(parent_edge_[a]);
    a = parent_[a];
    --da;
  }
  while (db > da) {
    right.push_back(parent_edge_[b]);
    b = parent_[b];
    --db;
  }
  while (a != b) {
    left.push_back(parent_edge_[a]);
    right.push_back(parent_edge_[b]);
    a = parent_[a];
    b = parent_[b];
  }
  left.insert(left.end(), right.begin(), right.end());
  std::sort(left.begin(), left.end());
  return left;
}

std::vector<std::uint64_t> Tree::path_edge_bits(const VertexPair& p) const {
  std::vector<std::uint64_t> bits((edges_.size() + 63) / 64, 0);
  for (int i : path_edge_set(p)) bits[size_t(i) / 64] |= std::uint64_t(1) << (i % 64);
  return bits;
}

ExactMatrix Tree::distance_matrix() const {
  ExactMatrix m{std::size_t(n_), std::size_t(n_)};
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m(std::size_t(i - 1), std::size_t(j - 1)) = distance(i, j);
  return m;
}

std::pair<int, std::vector<int>> Tree::leaves() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (degree(v) == 1) out.push_back(v);
  return {int(out.size()), out};
}

std::vector<LineGraphBlock> Tree::line_graph_blocks() const {
  if (n_ == 2) fail(Errc::no_internal_vertex, "n = 2 has no internal vertex");
  std::vector<LineGraphBlock> blocks;
  for (int v = 1; v <= n_; ++v) {
    if (degree(v) < 2) continue;
    LineGraphBlock b;
    b.vertex = v;
    for (int i = 0; i < int(edges_.size()); ++i)
      if (edges_[i].contains(v)) b.edge_indices.push_back(i);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

Tree make_path(int n) {
  if (n < 2) fail(Errc::size_too_small, "path needs n >= 2");
  std::vector<VertexPair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(edges, n);
}

Tree make_star(int n) {
  if (n < 2) fail(Errc::size_too_small, "star needs n >= 2");
  std::vector<VertexPair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(1, i + 1);
  return Tree::from_edges(edges, n);
}

Tree make_bistar(int n) {
  if (n < 4) fail(Errc::size_too_small, "bi-star needs n >= 4");
  std::vector<VertexPair> edges;
  edges.emplace_back(1, 2);
  edges.emplace_back(2, 3);
  for (int i = 3; i < n; ++i) edges.emplace_back(3, i + 1);
  return Tree::from_edges(edges, n);
}

Tree prufer_decode(std::span<const int> seq, int n) {
  if (n < 2) fail(Errc::size_too_small, "need n >= 2");
  if (int(seq.size()) != n - 2)
    fail(Errc::bad_prufer_seq, "sequence length must be n-2 = " + std::to_string(n - 2));
  for (int s : seq)
    if (s < 1 || s > n) fail(Errc::bad_prufer_seq, "label " + std::to_string(s) + " out of range");

  std::vector<int> deg(size_t(n) + 1, 1);
  for (int s : seq) ++deg[s];

  std::vector<VertexPair> edges;
  edges.reserve(size_t(n) - 1);
  // Smallest-leaf-first decode with a pointer sweep.
  int ptr = 1;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n);
  return Tree::from_edges(edges, n);
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 2) fail(Errc::size_too_small, "need n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<int> seq(size_t(std::max(0, n - 2)));
  for (int& s : seq) s = int(uniform_below(rng, std::uint64_t(n))) + 1;
  return prufer_decode(seq, n);
}

std::uint64_t labeled_tree_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= std::uint64_t(n);
  return c;
}

LabeledTreeRange::LabeledTreeRange(int n) : n_(n) {
  if (n < 2) fail(Errc::size_too_small, "need n >= 2");
  if (n > 8) fail(Errc::cap_exceeded, "enumeration is capped at n = 8 (n^(n-2) growth)");
}

LabeledTreeRange::Iterator::Iterator(int n, bool end) : n_(n), done_(end) {
  if (!end) seq_.assign(size_t(std::max(0, n - 2)), 1);
}

Tree LabeledTreeRange::Iterator::operator*() const { return prufer_decode(seq_, n_); }

LabeledTreeRange::Iterator& LabeledTreeRange::Iterator::operator++() {
  // Odometer over Prüfer sequences, least-significant position last.
  for (int i = int(seq_.size()) - 1; i >= 0; --i) {
    if (seq_[i] < n_) {
      ++seq_[i];
      return *this;
    }
    seq_[i] = 1;
  }
  done_ = true;
  seq_.clear();
  return *this;
}

}  // namespace treespectra

#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// a charpoly by naive cofactor expansion over polynomial entries, a second
// Prüfer decoder, and seeded random matrix generators.

#include <random>
#include <vector>

#include "treespectra/linalg.hpp"
#include "treespectra/tree.hpp"

namespace oracle {

using treespectra::ExactMatrix;
using treespectra::Int;
using treespectra::Poly;
using treespectra::Rat;
using treespectra::Tree;
using treespectra::VertexPair;

// Determinant of a matrix of polynomials by cofactor expansion along row 0.
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub(n - 1, std::vector<Poly>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) sub[i - 1][c++] = m[i][k];
    Poly term = m[0][j] * poly_det(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// det(xI - M) by cofactor expansion; usable up to order ~7.
inline Poly charpoly_cofactor(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) entries[i][j] = Poly(std::vector<Rat>{-m(i, j), Rat(1)});
      else entries[i][j] = Poly::constant(-m(i, j));
    }
  return poly_det(entries);
}

inline Rat random_rat(std::mt19937_64& rng) {
  long num = long(rng() % 19) - 9;
  long den = long(rng() % 9) + 1;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t order) {
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m(i, j) = random_rat(rng);
  return m;
}

inline ExactMatrix random_symmetric_matrix(std::mt19937_64& rng, std::size_t order) {
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i; j < order; ++j) {
      Rat v = random_rat(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

// Quadratic-time Prüfer decode: repeatedly join the smallest leaf that does
// not occur in the remaining sequence. Structured differently from the
// library's pointer-sweep decoder on purpose.
inline std::vector<VertexPair> prufer_decode_naive(const std::vector<int>& seq, int n) {
  std::vector<int> remaining(seq.begin(), seq.end());
  std::vector<char> used(std::size_t(n) + 1, 0);
  std::vector<VertexPair> edges;
  for (std::size_t step = 0; step < seq.size(); ++step) {
    int leaf = 0;
    for (int v = 1; v <= n && leaf == 0; ++v) {
      if (used[std::size_t(v)]) continue;
      bool occurs = false;
      for (std::size_t k = step; k < remaining.size(); ++k) occurs |= remaining[k] == v;
      if (!occurs) leaf = v;
    }
    edges.emplace_back(leaf, remaining[step]);
    used[std::size_t(leaf)] = 1;
  }
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!used[std::size_t(v)]) rest.push_back(v);
  edges.emplace_back(rest[0], rest[1]);
  return edges;
}

// The worked 5-vertex example tree, with the edge order that matches its
// published embedding table (e_2 = {2,4}, e_3 = {2,3}).
inline Tree figure_tree() {
  return Tree::from_edges({VertexPair(1, 2), VertexPair(2, 4), VertexPair(2, 3), VertexPair(4, 5)},
                          5);
}

}  // namespace oracle

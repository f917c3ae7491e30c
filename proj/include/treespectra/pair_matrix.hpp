#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "treespectra/linalg.hpp"
#include "treespectra/matrix.hpp"
#include "treespectra/tree.hpp"

namespace treespectra {

enum class PairKind { min4pc, max4pc, steiner2 };

const char* pair_kind_name(PairKind k);

/// Lexicographic enumeration of the C(n,2) vertex pairs of 1..n.
class PairSpace {
 public:
  explicit PairSpace(int n);

  std::size_t size() const { return pairs_.size(); }
  const std::vector<VertexPair>& pairs() const { return pairs_; }
  const VertexPair& pair(std::size_t idx) const { return pairs_[idx]; }
  std::size_t index_of(const VertexPair& p) const;  // PairNotFound when out of range

 private:
  int n_;
  std::vector<VertexPair> pairs_;
};

/// The three pairing sums of d over {i,j},{k,l}, in the fixed order
/// (d_il + d_jk, d_ik + d_jl, d_ij + d_kl). Repeated vertices are allowed.
std::array<int, 3> quadruple_sums(const Tree& t, int i, int j, int k, int l);

/// Edge count of the smallest connected subtree containing both pairs: the
/// union of the pairwise paths between the four endpoints.
int steiner_distance(const Tree& t, const VertexPair& p, const VertexPair& q);

/// Single entry of the requested pair matrix, computed on demand.
int pair_entry(const Tree& t, PairKind kind, const VertexPair& p, const VertexPair& q);

/// Fully materialized C(n,2) x C(n,2) pair matrix in lexicographic pair order.
/// Construction is guarded to n <= 64 (quadratic memory); use restricted
/// construction beyond that.
class PairMatrix {
 public:
  static PairMatrix build(const Tree& t, PairKind kind);

  PairKind kind() const { return kind_; }
  const PairSpace& index() const { return space_; }
  const ExactMatrix& entries() const { return entries_; }
  const Rat& at(const VertexPair& p, const VertexPair& q) const {
    return entries_(space_.index_of(p), space_.index_of(q));
  }

 private:
  PairMatrix(PairSpace space, ExactMatrix entries, PairKind kind)
      : space_(std::move(space)), entries_(std::move(entries)), kind_(kind) {}

  PairSpace space_;
  ExactMatrix entries_;
  PairKind kind_;
};

enum class BasisTag { min4pc, steiner, path_ordered };

/// Ordered list of vertex pairs indexing rows/columns of a restricted matrix,
/// together with how it was built.
class PairBasis {
 public:
  PairBasis(std::vector<VertexPair> pairs, BasisTag tag)
      : pairs_(std::move(pairs)), tag_(tag) {}

  const std::vector<VertexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  BasisTag tag() const { return tag_; }

  // min4pc provenance: the non-edge f and its distance d.
  std::optional<VertexPair> f() const { return f_; }
  int f_distance() const { return f_distance_; }

  // steiner provenance: per block, the chosen pair of tree edge indices.
  const std::vector<std::pair<int, int>>& block_choices() const { return block_choices_; }

  std::string describe() const;

  friend PairBasis min4pc_basis(const Tree&, const VertexPair&);
  friend PairBasis steiner_basis(const Tree&, const std::vector<std::pair<int, int>>&);
  friend PairBasis path_ordered_basis(const Tree&);

 private:
  std::vector<VertexPair> pairs_;
  BasisTag tag_;
  std::optional<VertexPair> f_;
  int f_distance_ = 0;
  std::vector<std::pair<int, int>> block_choices_;
};

/// (e_1, ..., e_{n-1}, f) where f is a non-edge at distance >= 2. Errors
/// FIsAnEdge / DistanceTooSmall / NoNonEdgeExists (n = 2).
PairBasis min4pc_basis(const Tree& t, const VertexPair& f);

/// All non-edges of t in lexicographic order (the valid f choices).
std::vector<VertexPair> non_edges(const Tree& t);

/// (e_1, ..., e_{n-1}, f_1, ..., f_{n-p}) where f_j is the symmetric
/// difference of the endpoints of two tree edges chosen inside line-graph
/// block B_j. `choices` gives the chosen edge-index pair per block (0-based,
/// in block order); errors BadChoice when a pair is not inside its block.
PairBasis steiner_basis(const Tree& t, const std::vector<std::pair<int, int>>& choices);
/// Default choice: the lexicographically first edge pair of each block.
PairBasis steiner_basis(const Tree& t);

/// The interleaved basis (e_1, f_1, e_2, f_2, ..., e_{n-2}, f_{n-2}, e_{n-1})
/// of a path with edges e_i = {i, i+1}, where f_j = {j, j+2}. Errors
/// BadParams when t is not such a path.
PairBasis path_ordered_basis(const Tree& t);

/// Square restriction of a materialized pair matrix in basis order.
ExactMatrix restrict(const PairMatrix& m, const PairBasis& rows, const PairBasis& cols);

/// Restriction computed entry-wise on demand, never materializing the full
/// C(n,2)^2 matrix.
ExactMatrix restricted_pair_matrix(const Tree& t, PairKind kind, const PairBasis& basis);

/// The rational vector with v_{f_i} = |B_i| - 1 and
/// v_{e_i} = 1 - sum over blocks whose chosen edge pair contains e_i of
/// (|B_j| - 1), indexed by basis order. Both defining identities
/// (1^t v = 1 and D2[B,B] v = (n-1) 1) are verified on construction.
struct SteinerV {
  std::vector<Rat> values;
};
SteinerV steiner_v(const Tree& t, const PairBasis& basis);

}  // namespace treespectra

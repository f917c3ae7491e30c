#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "treespectra/pair_matrix.hpp"

namespace treespectra {

/// The map sending each vertex pair {i,j} to the 0/1 incidence vector of the
/// unique i-j path over the n-1 edge coordinates. The image of a pair has
/// exactly d(i,j) ones; the image of an edge is a standard unit vector.
class Embedding {
 public:
  explicit Embedding(const Tree& t);

  std::size_t coordinates() const { return coords_; }
  const PairSpace& index() const { return space_; }
  const std::vector<int>& vector_for(const VertexPair& p) const {
    return vectors_[space_.index_of(p)];
  }

 private:
  PairSpace space_;
  std::size_t coords_;
  std::vector<std::vector<int>> vectors_;
};

inline Embedding embed(const Tree& t) { return Embedding(t); }

/// Hamming distance of two 0/1 vectors; errors LengthMismatch.
int l1_distance(const std::vector<int>& u, const std::vector<int>& v);

struct EmbeddingCheck {
  bool ok = true;
  std::optional<std::pair<VertexPair, VertexPair>> violation;
};

/// Checks Min4PC(p,q) = ||phi_p - phi_q||_1 over every pair of pairs.
EmbeddingCheck verify_embedding(const Tree& t);

enum class FormConstraint {
  hypermetric,    // integer x with sum 1
  negative_type,  // integer x with sum 0
};

struct SpotCheckResult {
  bool ok = true;           // no trial produced a positive form value
  Int worst;                // maximum attained value of the form
  std::size_t trials = 0;   // accepted evaluations
  std::size_t rejected = 0; // samples discarded by the sum projection
  std::uint64_t seed = 0;
  int entry_bound = 0;
};

/// Randomized check of sum_{P<Q} x_P x_Q M(P,Q) <= 0 over integer vectors x
/// indexed by the pair set, entries in [-entry_bound, entry_bound]. The last
/// coordinate is adjusted to meet the sum constraint and the sample is
/// rejected when the adjustment leaves the box. M must be symmetric with zero
/// diagonal (min4pc / max4pc kinds).
SpotCheckResult quadratic_form_spot_check(const PairMatrix& m, FormConstraint constraint,
                                          std::size_t trials, std::uint64_t seed, int entry_bound);

/// The hypermetric-family quadratic form sum_{P<Q} x_P x_Q M(P,Q), exact.
Int pair_quadratic_form(const ExactMatrix& entries, const std::vector<long>& x);

struct TriangleCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> violation;  // (a, b, c) with M(a,c) > M(a,b)+M(b,c)
};

/// Exhaustive triangle inequality over all index triples of a symmetric
/// zero-diagonal matrix.
TriangleCheck triangle_check(const ExactMatrix& m);
inline TriangleCheck triangle_check(const PairMatrix& m) { return triangle_check(m.entries()); }

}  // namespace treespectra

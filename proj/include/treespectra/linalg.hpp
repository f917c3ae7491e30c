#pragma once

#include <span>
#include <vector>

#include "treespectra/matrix.hpp"
#include "treespectra/polynomial.hpp"

namespace treespectra {

struct InertiaTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t order() const { return positive + negative + zero; }
  bool operator==(const InertiaTriple&) const = default;
};

/// det(xI - M), exact and monic; fraction-free determinant evaluation at
/// order+1 integer points followed by exact interpolation. Debug builds
/// cross-check against Faddeev-LeVerrier.
Poly charpoly(const ExactMatrix& m);

/// Faddeev-LeVerrier recurrence in rational arithmetic; second route used by
/// the debug cross-check and the algorithm-equivalence tests.
Poly charpoly_faddeev(const ExactMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination; rational input is
/// row-scaled to integers first.
Rat determinant(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Exact inverse; errors Singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Eigenvalue sign counts of a symmetric matrix, computed exactly: zero roots
/// stripped from the charpoly, then Descartes sign variations on p(x) and
/// p(-x). Exact because symmetric matrices have real-rooted charpolys.
InertiaTriple inertia(const ExactMatrix& m);

/// M[comp] - M[comp,alpha] M[alpha]^-1 M[alpha,comp]; errors SingularBlock.
ExactMatrix schur_complement(const ExactMatrix& m, std::span<const std::size_t> alpha);

/// Verifies (M^-1[alpha])^-1 = M[alpha] - M[alpha,comp] M[comp]^-1 M[comp,alpha]
/// exactly. Errors SingularBlock when a required block is not invertible.
bool block_inverse_check(const ExactMatrix& m, std::span<const std::size_t> alpha);

/// Quotient matrix of an equitable partition (blocks of row/col indices).
/// Errors NotEquitable, naming the offending block pair, if any block of M has
/// non-constant row sums. The result need not be symmetric.
ExactMatrix equitable_quotient(const ExactMatrix& m,
                               const std::vector<std::vector<std::size_t>>& blocks);

}  // namespace treespectra

#pragma once

#include <vector>

#include "treespectra/pair_matrix.hpp"

namespace treespectra {

/// Everything tied to the interleaved path basis
/// B = (e_1, f_1, e_2, f_2, ..., e_{n-2}, f_{n-2}, e_{n-1}) of D2(P_n):
/// the order-(2n-3) restricted matrix, the v-vector, and the tridiagonal
/// Laplacian-like matrix L with diagonal (1, 2, ..., 2, 1).
struct PathSteinerInstance {
  int n = 0;
  Tree tree;
  PairBasis basis;
  ExactMatrix matrix;          // D2(P_n)[B,B], built by the interval-hull rule
  SteinerV v;                  // both defining identities assert on construction
  ExactMatrix laplacian_like;  // L, with L 1 = 0
};

/// Errors SizeTooSmall for n < 3.
PathSteinerInstance build_path_instance(int n);

/// True iff D * (-L + v v^t / (n-1)) = I exactly.
bool verify_inverse_formula(const PathSteinerInstance& inst);

struct MinorScanEntry {
  VertexPair element;   // the deleted basis element
  bool pendant_edge;    // e_1 or e_{n-1}
  Rat minor;            // det D(alpha|alpha), order 2n-4
  Rat expected;         // -(n-1) for pendant edges, -(2n-3) otherwise
  bool matches = false;
};

/// One order-(2n-4) principal minor per basis element, each recomputed by
/// fraction-free elimination (independent of the inverse-formula code path).
std::vector<MinorScanEntry> principal_minor_scan(const PathSteinerInstance& inst);

struct PathCoefficientFacts {
  Poly charpoly;
  Int a0, a1, a_2n4, a_2n5;      // a_0, a_1, a_{2n-4}, a_{2n-5}
  bool a0_ok = false;            // |a_0| = n-1
  bool a1_ok = false;            // |a_1| = 4n^2 - 14n + 13
  bool a_2n4_ok = false;         // |a_{2n-4}| = 3n-5
  std::vector<std::size_t> peak_set;  // argmax of |a_k| over 0..2n-4
};

PathCoefficientFacts path_coefficient_facts(const PathSteinerInstance& inst);

struct PathPeakBoundDetail {
  Rat f_n;                 // (2n-3)(4n^2-15n+14) / (3(2n-3)(n-2) + 2(n-1))
  std::size_t bound = 0;   // floor(7n/5)
  bool f_below_bound = false;  // f(n) < 7n/5
};

PathPeakBoundDetail path_peak_bound_detail(int n);

struct ConjectureRow {
  int n = 0;
  std::size_t peak_lo = 0, peak_hi = 0;   // argmax plateau over 0..2n-4
  bool peak_is_n_minus_1 = false;         // plateau == {n-1}
  Int a_2n5;
  Int conjectured;                        // -(1/6)(n-1)(n-2)(2n^2+6n-15)
  bool a_2n5_matches = false;
};

/// Exact verdicts per n; reports only, never asserts the conjectures.
/// Requires 6 <= lo <= hi <= 60 (RangeError otherwise).
std::vector<ConjectureRow> conjecture_scan(int lo, int hi);

}  // namespace treespectra

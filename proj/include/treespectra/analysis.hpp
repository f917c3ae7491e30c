#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treespectra/linalg.hpp"
#include "treespectra/polynomial.hpp"

namespace treespectra {

/// Inclusive coefficient-index range.
struct Window {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool operator==(const Window&) const = default;
};

/// Analysis of the absolute coefficient sequence |a_lo| .. |a_hi|.
struct CoefficientReport {
  Poly poly;
  Window window;
  std::vector<Rat> abs_seq;  // |a_k| for k in window

  bool unimodal = false;
  std::optional<std::size_t> unimodal_violation;       // absolute index of the offending dip
  std::pair<std::size_t, std::size_t> peak_plateau{};  // absolute indices [lo, hi] of the argmax run

  bool log_concave = false;
  std::vector<std::size_t> log_concave_violations;  // absolute indices i with a_i^2 < a_{i-1} a_{i+1}

  std::vector<std::size_t> peak_set;  // absolute indices attaining max |a_k| over the window

  std::optional<std::pair<std::size_t, std::size_t>> bound_interval;
  std::optional<bool> bound_ok;  // peak_set (whole plateau) inside bound_interval
};

/// Errors EmptyWindow when the window misses the coefficient range entirely.
CoefficientReport analyze(const Poly& p, Window window);
/// Same, then checks peak_set against [bound.lo, bound.hi].
CoefficientReport analyze(const Poly& p, Window window, std::pair<std::size_t, std::size_t> bound);

struct SignCheck {
  bool ok = false;
  Window window;                       // the k-range the theorem constrains
  std::vector<std::size_t> violations; // k in window with a_k >= 0
};

/// Coefficient-sign theorem for a symmetric matrix with inertia (1, r-1, n-r)
/// and trace >= 0: a_k < 0 for n-r <= k <= n-2 (trace zero) or n-1 (trace
/// positive). Errors PreconditionUnmet when the hypotheses do not hold —
/// meaning the theorem does not apply, not that it failed.
SignCheck sign_pattern_check(const Poly& p, const InertiaTriple& in, const Rat& trace);

/// d_k = -c_k / 2^(n-k-2) for 0 <= k <= n-2, from the charpoly of an n-vertex
/// tree distance matrix.
std::vector<Rat> normalized_tree_coeffs(const Poly& charpoly_coeffs, int n);

/// (x+2)^(n-3) (x^3 - (2n-6)x^2 - (nd^2-5d^2+2nd-2d+5n-9)x - 2(d-1)^2(n-1)),
/// the Min4PC[B,B] charpoly for any tree on n vertices with d = d(f).
Poly closed_form_min4pc(int n, int d);

/// (x+1)^(n-3) (x^3 - 2(n-1)x^2 - 7(n-2)x - (n-1)), the D2(S_n)[B,B] charpoly.
Poly closed_form_star_steiner(int n);

/// (x+1)^(n-5) h_which for the bi-star S_{1,n-3}; which selects the basis
/// B_1 or B_2 sextic.
Poly closed_form_bistar_steiner(int n, int which);

enum class PeakFamily { min4pc, star, bistar, path };

/// Peak-location bound [lo, hi] for the family's restricted-matrix charpoly:
/// min4pc [(n-2)/3, ceil((n+1)/3)] (n >= 8), star [(n-2)/2, ceil(n/2)]
/// (n >= 6), bistar [(n-4)/2, ceil((n+4)/2)] (n >= 6), path [0, floor(7n/5)]
/// (upper bound only). Errors OutOfValidityRange below the family's range.
std::pair<std::size_t, std::size_t> peak_bound(PeakFamily family, int n);

}  // namespace treespectra

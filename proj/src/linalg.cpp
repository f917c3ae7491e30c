#include "treespectra/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace treespectra {

namespace {

// Bareiss fraction-free elimination on an integer matrix, destructive.
// Divisions are exact at every step. Column pivoting only (row swaps flip the
// sign); returns 0 on rank deficiency.
Int bareiss_det(std::vector<Int>& a, std::size_t n) {
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    const Int& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(t);
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign > 0 ? a[(n - 1) * n + (n - 1)] : Int(-a[(n - 1) * n + (n - 1)]);
}

// Clears denominators row by row; det(M) = bareiss_det(scaled) / prod(scales).
Rat det_by_bareiss(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Int> a(n * n);
  Int scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = m(i, j) * Rat(row_lcm);
      a[i * n + j] = v.get_num();
    }
    scale_product *= row_lcm;
  }
  Rat det(bareiss_det(a, n), scale_product);
  det.canonicalize();
  return det;
}

}  // namespace

Rat determinant(const ExactMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "determinant needs a square matrix");
  return det_by_bareiss(m);
}

std::size_t rank(const ExactMatrix& m) {
  // Fraction-free row echelon with full column search.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Int> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Int row_lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = Rat(m(i, j) * Rat(row_lcm)).get_num();
  }
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = a[i * cols + j] * a[r * cols + c] - a[i * cols + c] * a[r * cols + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = std::move(t);
      }
      a[i * cols + c] = 0;
    }
    prev = a[r * cols + c];
    ++r;
  }
  return r;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "inverse needs a square matrix");
  const std::size_t n = m.rows();
  // Gauss-Jordan on [M | I] in rational arithmetic.
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) fail(Errc::singular, "matrix is singular");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Rat p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

namespace {

Poly interpolate_points(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Lagrange form assembled with exact rational arithmetic. master(x) is the
  // full node product; each basis numerator comes from one synthetic division.
  const std::size_t n = xs.size();
  Poly master = Poly::constant(1);
  for (const Rat& x : xs) master = master * Poly(std::vector<Rat>{-x, Rat(1)});
  Poly out;
  for (std::size_t t = 0; t < n; ++t) {
    if (ys[t] == 0) continue;
    Poly numer = exact_divide(master, Poly(std::vector<Rat>{-xs[t], Rat(1)}));
    Rat denom = 1;
    for (std::size_t s = 0; s < n; ++s)
      if (s != t) denom *= xs[t] - xs[s];
    out = out + numer.scaled(ys[t] / denom);
  }
  return out;
}

}  // namespace

Poly charpoly_faddeev(const ExactMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "charpoly needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  ExactMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat ck = -mk.trace() / Rat(long(k));
    coeffs[n - k] = ck;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    mk = m * mk;
  }
  return Poly(std::move(coeffs));
}

Poly charpoly(const ExactMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "charpoly needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Rat> xs(n + 1), ys(n + 1);
  if (m.all_integer()) {
    // Hot path: det(tI - M) over mpz only.
    std::vector<Int> negated(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) negated[i * n + j] = -m(i, j).get_num();
    for (std::size_t t = 0; t <= n; ++t) {
      xs[t] = Rat(long(t));
      std::vector<Int> a = negated;
      for (std::size_t i = 0; i < n; ++i) a[i * n + i] += long(t);
      ys[t] = Rat(bareiss_det(a, n));
    }
  } else {
    ExactMatrix shifted = m.scaled(Rat(-1));
    for (std::size_t t = 0; t <= n; ++t) {
      xs[t] = Rat(long(t));
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) = Rat(long(t)) - m(i, i);
      ys[t] = det_by_bareiss(shifted);
    }
  }
  Poly p = interpolate_points(xs, ys);
  assert(p.is_monic() && p.degree() == int(n));
#ifndef NDEBUG
  // Second exact route; disagreement means a bug in one of them.
  assert(p == charpoly_faddeev(m));
#endif
  return p;
}

InertiaTriple inertia(const ExactMatrix& m) {
  if (!m.is_symmetric()) fail(Errc::not_symmetric, "inertia needs a symmetric matrix");
  Poly p = charpoly(m);
  std::size_t zero = 0;
  while (p.coeff(zero) == 0) ++zero;

  auto variations = [&](bool negate) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t k = zero; k <= std::size_t(p.degree()); ++k) {
      Rat c = p.coeff(k);
      if (c == 0) continue;
      int s = sign_of(c);
      if (negate && (k % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };

  InertiaTriple out;
  out.zero = zero;
  out.positive = variations(false);
  out.negative = variations(true);
  return out;
}

namespace {

std::vector<std::size_t> complement_of(std::span<const std::size_t> alpha, std::size_t n) {
  std::vector<char> in(n, 0);
  for (std::size_t i : alpha) {
    if (i >= n) fail(Errc::bad_params, "index out of range");
    in[i] = 1;
  }
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) comp.push_back(i);
  return comp;
}

}  // namespace

ExactMatrix schur_complement(const ExactMatrix& m, std::span<const std::size_t> alpha) {
  if (!m.is_square()) fail(Errc::not_square, "schur complement needs a square matrix");
  std::vector<std::size_t> a(alpha.begin(), alpha.end());
  std::vector<std::size_t> c = complement_of(alpha, m.rows());
  if (a.empty() || c.empty()) fail(Errc::bad_params, "alpha must be a proper nonempty subset");
  ExactMatrix maa = m.submatrix(a, a);
  if (determinant(maa) == 0) fail(Errc::singular_block, "M[alpha] is singular");
  return m.submatrix(c, c) - m.submatrix(c, a) * inverse(maa) * m.submatrix(a, c);
}

bool block_inverse_check(const ExactMatrix& m, std::span<const std::size_t> alpha) {
  if (!m.is_square()) fail(Errc::not_square, "needs a square matrix");
  std::vector<std::size_t> a(alpha.begin(), alpha.end());
  std::vector<std::size_t> c = complement_of(alpha, m.rows());
  if (a.empty() || c.empty()) fail(Errc::bad_params, "alpha must be a proper nonempty subset");
  if (determinant(m) == 0) fail(Errc::singular_block, "M is singular");
  ExactMatrix minv = inverse(m);
  ExactMatrix minv_aa = minv.submatrix(a, a);
  if (determinant(minv_aa) == 0) fail(Errc::singular_block, "M^-1[alpha] is singular");
  ExactMatrix mcc = m.submatrix(c, c);
  if (determinant(mcc) == 0) fail(Errc::singular_block, "M[comp] is singular");
  ExactMatrix lhs = inverse(minv_aa);
  ExactMatrix rhs = m.submatrix(a, a) - m.submatrix(a, c) * inverse(mcc) * m.submatrix(c, a);
  return lhs == rhs;
}

ExactMatrix equitable_quotient(const ExactMatrix& m,
                               const std::vector<std::vector<std::size_t>>& blocks) {
  if (!m.is_square()) fail(Errc::not_square, "quotient needs a square matrix");
  std::vector<char> seen(m.rows(), 0);
  std::size_t covered = 0;
  for (const auto& b : blocks) {
    if (b.empty()) fail(Errc::bad_params, "empty partition block");
    for (std::size_t i : b) {
      if (i >= m.rows() || seen[i]) fail(Errc::bad_params, "blocks must partition the index set");
      seen[i] = 1;
      ++covered;
    }
  }
  if (covered != m.rows()) fail(Errc::bad_params, "blocks must cover the index set");

  const std::size_t p = blocks.size();
  ExactMatrix q(p, p);
  for (std::size_t bi = 0; bi < p; ++bi) {
    for (std::size_t bj = 0; bj < p; ++bj) {
      Rat common;
      bool first = true;
      for (std::size_t i : blocks[bi]) {
        Rat row_sum = 0;
        for (std::size_t j : blocks[bj]) row_sum += m(i, j);
        if (first) {
          common = row_sum;
          first = false;
        } else if (row_sum != common) {
          fail(Errc::not_equitable, "block pair (" + std::to_string(bi + 1) + "," +
                                        std::to_string(bj + 1) + ") has non-constant row sums");
        }
      }
      q(bi, bj) = common;
    }
  }
  return q;
}

}  // namespace treespectra

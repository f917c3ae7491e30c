#include "treespectra/path_steiner.hpp"

#include <algorithm>

#include "treespectra/analysis.hpp"

namespace treespectra {

PathSteinerInstance build_path_instance(int n) {
  if (n < 3) fail(Errc::size_too_small, "path instance needs n >= 3");
  Tree tree = make_path(n);
  PairBasis basis = path_ordered_basis(tree);
  const std::size_t m = basis.size();  // 2n-3

  // On a path the smallest subtree containing {a,b} and {c,d} is the interval
  // hull, so the entry is max - min of the four endpoints.
  ExactMatrix mat(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const VertexPair& p = basis.pairs()[i];
    for (std::size_t j = i; j < m; ++j) {
      const VertexPair& q = basis.pairs()[j];
      int hi = std::max(p.second(), q.second());
      int lo = std::min(p.first(), q.first());
      mat(i, j) = hi - lo;
      mat(j, i) = hi - lo;
    }
  }

  SteinerV v = steiner_v(tree, basis);

  ExactMatrix lap(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    lap(i, i) = (i == 0 || i == m - 1) ? 1 : 2;
    if (i + 1 < m) {
      lap(i, i + 1) = -1;
      lap(i + 1, i) = -1;
    }
  }

  return PathSteinerInstance{n, std::move(tree), std::move(basis), std::move(mat), std::move(v),
                             std::move(lap)};
}

bool verify_inverse_formula(const PathSteinerInstance& inst) {
  const std::size_t m = inst.basis.size();
  ExactMatrix vvt(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) vvt(i, j) = inst.v.values[i] * inst.v.values[j];
  ExactMatrix candidate =
      inst.laplacian_like.scaled(Rat(-1)) + vvt.scaled(Rat(1, inst.n - 1));
  return inst.matrix * candidate == ExactMatrix::identity(m);
}

std::vector<MinorScanEntry> principal_minor_scan(const PathSteinerInstance& inst) {
  const std::size_t m = inst.basis.size();
  std::vector<MinorScanEntry> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    MinorScanEntry e{inst.basis.pairs()[k], k == 0 || k == m - 1,
                     determinant(inst.matrix.minor_matrix(k, k)), Rat(0)};
    e.expected = e.pendant_edge ? Rat(-(inst.n - 1)) : Rat(-(2 * inst.n - 3));
    e.matches = e.minor == e.expected;
    out.push_back(std::move(e));
  }
  return out;
}

PathCoefficientFacts path_coefficient_facts(const PathSteinerInstance& inst) {
  const long n = inst.n;
  PathCoefficientFacts facts;
  facts.charpoly = charpoly(inst.matrix);
  std::vector<Int> a = facts.charpoly.integer_coeffs();
  facts.a0 = a[0];
  facts.a1 = a[1];
  facts.a_2n4 = a[std::size_t(2 * n - 4)];
  facts.a_2n5 = a[std::size_t(2 * n - 5)];
  facts.a0_ok = abs(facts.a0) == n - 1;
  facts.a1_ok = abs(facts.a1) == 4 * n * n - 14 * n + 13;
  facts.a_2n4_ok = abs(facts.a_2n4) == 3 * n - 5;
  facts.peak_set = analyze(facts.charpoly, Window{0, std::size_t(2 * n - 4)}).peak_set;
  return facts;
}

PathPeakBoundDetail path_peak_bound_detail(int n) {
  if (n < 3) fail(Errc::size_too_small, "needs n >= 3");
  const long ln = n;
  PathPeakBoundDetail d;
  d.f_n = Rat((2 * ln - 3) * (4 * ln * ln - 15 * ln + 14),
              3 * (2 * ln - 3) * (ln - 2) + 2 * (ln - 1));
  d.f_n.canonicalize();
  d.bound = std::size_t(7 * ln / 5);
  d.f_below_bound = d.f_n < Rat(7 * ln, 5);
  return d;
}

std::vector<ConjectureRow> conjecture_scan(int lo, int hi) {
  if (lo < 6 || lo > hi || hi > 60)
    fail(Errc::range_error, "scan range must satisfy 6 <= lo <= hi <= 60");
  std::vector<ConjectureRow> out;
  for (int n = lo; n <= hi; ++n) {
    PathSteinerInstance inst = build_path_instance(n);
    PathCoefficientFacts facts = path_coefficient_facts(inst);
    ConjectureRow row;
    row.n = n;
    row.peak_lo = facts.peak_set.front();
    row.peak_hi = facts.peak_set.back();
    row.peak_is_n_minus_1 =
        facts.peak_set.size() == 1 && facts.peak_set.front() == std::size_t(n - 1);
    row.a_2n5 = facts.a_2n5;
    Int prod = Int(n - 1) * Int(n - 2) * Int(2 * long(n) * n + 6 * n - 15);
    mpz_divexact_ui(prod.get_mpz_t(), prod.get_mpz_t(), 6);
    row.conjectured = -prod;
    row.a_2n5_matches = row.a_2n5 == row.conjectured;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace treespectra

#include "treespectra/analysis.hpp"

#include <algorithm>

namespace treespectra {

CoefficientReport analyze(const Poly& p, Window window) {
  if (p.is_zero() || window.lo > window.hi || int(window.lo) > p.degree())
    fail(Errc::empty_window, "window misses the coefficient range");
  window.hi = std::min(window.hi, std::size_t(p.degree()));

  CoefficientReport r;
  r.poly = p;
  r.window = window;
  for (std::size_t k = window.lo; k <= window.hi; ++k) r.abs_seq.push_back(rat_abs(p.coeff(k)));
  const std::size_t m = r.abs_seq.size();

  // Literal unimodality: weakly rising, then weakly falling.
  r.unimodal = true;
  bool falling = false;
  for (std::size_t i = 1; i < m; ++i) {
    if (r.abs_seq[i] < r.abs_seq[i - 1]) {
      falling = true;
    } else if (falling && r.abs_seq[i] > r.abs_seq[i - 1]) {
      r.unimodal = false;
      r.unimodal_violation = window.lo + i - 1;  // the dip a later coefficient rises above
      break;
    }
  }

  r.log_concave = true;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (r.abs_seq[i] * r.abs_seq[i] < r.abs_seq[i - 1] * r.abs_seq[i + 1]) {
      r.log_concave = false;
      r.log_concave_violations.push_back(window.lo + i);
    }
  }

  const Rat peak = *std::max_element(r.abs_seq.begin(), r.abs_seq.end());
  for (std::size_t i = 0; i < m; ++i)
    if (r.abs_seq[i] == peak) r.peak_set.push_back(window.lo + i);
  r.peak_plateau = {r.peak_set.front(), r.peak_set.back()};
  return r;
}

CoefficientReport analyze(const Poly& p, Window window,
                          std::pair<std::size_t, std::size_t> bound) {
  CoefficientReport r = analyze(p, window);
  r.bound_interval = bound;
  // The theorem's t is any argmax, so the whole plateau must sit inside.
  bool ok = true;
  for (std::size_t t : r.peak_set)
    if (t < bound.first || t > bound.second) ok = false;
  r.bound_ok = ok;
  return r;
}

SignCheck sign_pattern_check(const Poly& p, const InertiaTriple& in, const Rat& trace) {
  const std::size_t n = in.order();
  if (p.degree() != int(n))
    fail(Errc::precondition_unmet, "polynomial degree does not match the inertia order");
  if (in.positive != 1)
    fail(Errc::precondition_unmet, "theorem needs exactly one positive eigenvalue");
  if (trace < 0) fail(Errc::precondition_unmet, "theorem needs trace >= 0");
  const std::size_t r = in.positive + in.negative;
  if (r < 2) fail(Errc::precondition_unmet, "theorem needs r >= 2");

  SignCheck out;
  out.window.lo = n - r;
  out.window.hi = trace == 0 ? n - 2 : n - 1;
  out.ok = true;
  for (std::size_t k = out.window.lo; k <= out.window.hi; ++k) {
    if (p.coeff(k) >= 0) {
      out.ok = false;
      out.violations.push_back(k);
    }
  }
  return out;
}

std::vector<Rat> normalized_tree_coeffs(const Poly& cp, int n) {
  if (cp.degree() != n) fail(Errc::bad_params, "charpoly degree must equal n");
  std::vector<Rat> d;
  d.reserve(std::size_t(n - 1));
  for (int k = 0; k <= n - 2; ++k) {
    Rat scale(Int(1), int_pow(Int(2), (unsigned long)(n - k - 2)));
    scale.canonicalize();
    d.push_back(-cp.coeff(std::size_t(k)) * scale);
  }
  return d;
}

Poly closed_form_min4pc(int n, int d) {
  if (n < 3 || d < 2 || d > n - 1) fail(Errc::bad_params, "need n >= 3 and 2 <= d <= n-1");
  long ln = n, ld = d;
  Poly cubic(std::vector<Rat>{Rat(-2 * (ld - 1) * (ld - 1) * (ln - 1)),
                              Rat(-(ln * ld * ld - 5 * ld * ld + 2 * ln * ld - 2 * ld + 5 * ln - 9)),
                              Rat(-(2 * ln - 6)), Rat(1)});
  return shift_power(cubic, Rat(2), std::size_t(n - 3));
}

Poly closed_form_star_steiner(int n) {
  if (n < 3) fail(Errc::bad_params, "need n >= 3");
  long ln = n;
  Poly cubic(std::vector<Rat>{Rat(-(ln - 1)), Rat(-7 * (ln - 2)), Rat(-2 * (ln - 1)), Rat(1)});
  return shift_power(cubic, Rat(1), std::size_t(n - 3));
}

Poly closed_form_bistar_steiner(int n, int which) {
  if (n < 6) fail(Errc::bad_params, "need n >= 6");
  if (which != 1 && which != 2) fail(Errc::bad_params, "which must be 1 or 2");
  long ln = n;
  Poly sextic =
      which == 1
          ? Poly(std::vector<Rat>{Rat(-(ln - 1)), Rat(-(13 * ln - 28)), Rat(-5 * (9 * ln - 22)),
                                  Rat(-18 * (3 * ln - 7)), Rat(-3 * (7 * ln - 12)),
                                  Rat(-2 * (ln - 1)), Rat(1)})
          : Poly(std::vector<Rat>{Rat(-(ln - 1)), Rat(-(15 * ln - 34)), Rat(-(53 * ln - 133)),
                                  Rat(-(62 * ln - 141)), Rat(-(21 * ln - 22)),
                                  Rat(-2 * (ln - 1)), Rat(1)});
  return shift_power(sextic, Rat(1), std::size_t(n - 5));
}

std::pair<std::size_t, std::size_t> peak_bound(PeakFamily family, int n) {
  auto floor_div = [](long a, long b) { return std::size_t(a / b); };
  auto ceil_div = [](long a, long b) { return std::size_t((a + b - 1) / b); };
  switch (family) {
    case PeakFamily::min4pc:
      if (n < 8) fail(Errc::out_of_validity_range, "min4pc peak bound is proved for n >= 8");
      return {floor_div(n - 2, 3), ceil_div(n + 1, 3)};
    case PeakFamily::star:
      if (n < 6) fail(Errc::out_of_validity_range, "star peak bound is proved for n >= 6");
      return {floor_div(n - 2, 2), ceil_div(n, 2)};
    case PeakFamily::bistar:
      if (n < 6) fail(Errc::out_of_validity_range, "bi-star peak bound is proved for n >= 6");
      return {floor_div(n - 4, 2), ceil_div(n + 4, 2)};
    case PeakFamily::path:
      if (n < 3) fail(Errc::out_of_validity_range, "path peak bound needs n >= 3");
      return {0, floor_div(7 * long(n), 5)};
  }
  fail(Errc::bad_params, "unknown family");
}

}  // namespace treespectra

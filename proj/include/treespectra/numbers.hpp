#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace treespectra {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals from GMP. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string int_string(const Int& z) { return z.get_str(); }

/// Exact decimal form: "p" when integral, "p/q" otherwise (canonical lowest terms).
inline std::string rat_string(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int sign_of(const Rat& q) { return sgn(q); }

/// Deterministic uniform draw in [0, bound) by rejection; mt19937_64's output
/// sequence is fully specified, so results are reproducible across platforms.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace treespectra

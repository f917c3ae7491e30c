#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "treespectra/error.hpp"
#include "treespectra/numbers.hpp"

namespace treespectra {

/// Polynomial with exact rational coefficients, index = degree. Trailing zero
/// coefficients are trimmed, so the zero polynomial has degree -1. Charpolys
/// of integer matrices have integer coefficients; integer_coeffs() asserts so.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
  /// c * x^k
  static Poly monomial(const Rat& c, std::size_t k);
  /// (x + c)^k
  static Poly linear_power(const Rat& c, std::size_t k);

  int degree() const { return int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_integral() const;
  std::vector<Int> integer_coeffs() const;

  Rat evaluate(const Rat& x0) const;
  Poly compose_negate() const;  // p(-x)

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const = default;

  std::string to_string() const;  // human-readable, highest degree first

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// (x + c)^k * p
Poly shift_power(const Poly& p, const Rat& c, std::size_t k);

/// quotient and remainder of a / b; errors DivisionByZeroPoly when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// true iff p divides q exactly (zero remainder).
bool divides(const Poly& p, const Poly& q);

/// q / p; errors InexactDivision when the remainder is nonzero.
Poly exact_divide(const Poly& q, const Poly& p);

}  // namespace treespectra

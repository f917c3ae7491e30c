#include "treespectra/polynomial.hpp"

#include <algorithm>

namespace treespectra {

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_power(const Rat& c, std::size_t k) {
  Poly base(std::vector<Rat>{c, Rat(1)});
  Poly out = Poly::constant(1);
  for (std::size_t i = 0; i < k; ++i) out = out * base;
  return out;
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

std::vector<Int> Poly::integer_coeffs() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) {
    if (!is_integer(c)) fail(Errc::inexact_division, "non-integer coefficient " + rat_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

Rat Poly::evaluate(const Rat& x0) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

Poly Poly::compose_negate() const {
  std::vector<Rat> v(coeffs_);
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> v(coeffs_);
  for (Rat& c : v) c *= s;
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(std::size_t(k));
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rat a = rat_abs(c);
    bool unit = a == 1 && k > 0;
    if (!unit) out += rat_string(a);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly shift_power(const Poly& p, const Rat& c, std::size_t k) {
  return Poly::linear_power(c, k) * p;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::division_by_zero_poly, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> quo(std::size_t(a.degree() - b.degree()) + 1);
  const Rat& lead = b.coeff(std::size_t(b.degree()));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[std::size_t(k + b.degree())] / lead;
    quo[std::size_t(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[std::size_t(k + j)] -= q * b.coeff(std::size_t(j));
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool divides(const Poly& p, const Poly& q) {
  if (q.is_zero()) return !p.is_zero();
  if (p.is_zero()) return false;
  return poly_divmod(q, p).second.is_zero();
}

Poly exact_divide(const Poly& q, const Poly& p) {
  auto [quo, rem] = poly_divmod(q, p);
  if (!rem.is_zero()) fail(Errc::inexact_division, "remainder " + rem.to_string());
  return quo;
}

}  // namespace treespectra

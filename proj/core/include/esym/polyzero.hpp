#pragma once

// Single-variable polynomials stored leading coefficient first:
//
//   f(z) = t_0 z^n + t_1 z^(n-1) + ... + t_n.
//
// from_roots builds the monic polynomial with the given zeroes from signed
// elementary symmetric values, t_k = (-1)^k eps_k(roots). Zeroes are added
// one at a time with mul_linear (multiply by z + x) or insert_zero (multiply
// by z - lambda), and removed with deflate.

#include "esym/esp.hpp"
#include "esym/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace esym {

template <ComplexScalar T>
class Poly1 {
 public:
  /// The zero polynomial.
  Poly1() : coeffs_{T::zero()} {}

  /// Leading zero coefficients are dropped; at least one coefficient remains.
  explicit Poly1(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw UsageError("a polynomial needs at least one coefficient");
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && is_zero(coeffs_[lead])) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  }

  std::span<const T> coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const T& leading() const { return coeffs_.front(); }
  bool is_zero_poly() const { return coeffs_.size() == 1 && is_zero(coeffs_.front()); }

  friend bool operator==(const Poly1&, const Poly1&) = default;

 private:
  std::vector<T> coeffs_;
};

/// Horner evaluation: n multiplications, n additions.
template <ComplexScalar T>
T eval(const Poly1<T>& p, const T& z) {
  const auto c = p.coeffs();
  T acc = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) acc = acc * z + c[k];
  return acc;
}

/// Monic polynomial prod (z - lambda_j); the empty list gives the constant 1.
template <ComplexScalar T>
Poly1<T> from_roots(std::span<const T> roots) {
  std::vector<T> coeffs{T::one()};
  if (roots.empty()) return Poly1<T>(std::move(coeffs));
  std::vector<T> negated;
  negated.reserve(roots.size());
  for (const T& r : roots) negated.push_back(-r);
  const auto table = build_table(std::span<const T>(negated));
  const auto top = table.top_row();
  coeffs.insert(coeffs.end(), top.begin(), top.end());
  return Poly1<T>(std::move(coeffs));
}

template <ComplexScalar T>
Poly1<T> from_roots(const std::vector<T>& roots) {
  return from_roots(std::span<const T>(roots));
}

/// p(z) * (z + x): s_0 = t_0, s_k = t_k + x t_{k-1}, s_{n+1} = x t_n.
template <ComplexScalar T>
Poly1<T> mul_linear(const Poly1<T>& p, const T& x) {
  const auto t = p.coeffs();
  std::vector<T> s;
  s.reserve(t.size() + 1);
  s.push_back(t[0]);
  for (std::size_t k = 1; k < t.size(); ++k) s.push_back(t[k] + x * t[k - 1]);
  s.push_back(x * t.back());
  return Poly1<T>(std::move(s));
}

/// p(z) * (z - lambda); the result vanishes at lambda.
template <ComplexScalar T>
Poly1<T> insert_zero(const Poly1<T>& p, const T& lambda) {
  return mul_linear(p, -lambda);
}

template <ComplexScalar T>
struct Deflation {
  Poly1<T> quotient;
  T remainder;
};

/// Synthetic division: p(z) = quotient(z) (z - lambda) + remainder.
template <ComplexScalar T>
Deflation<T> deflate(const Poly1<T>& p, const T& lambda) {
  if (p.degree() < 1) throw UsageError("cannot deflate a constant polynomial");
  const auto t = p.coeffs();
  std::vector<T> q;
  q.reserve(t.size() - 1);
  T acc = t[0];
  for (std::size_t k = 1; k < t.size(); ++k) {
    q.push_back(acc);
    acc = t[k] + lambda * acc;
  }
  return {Poly1<T>(std::move(q)), acc};
}

struct CoefficientText {
  std::string re;
  std::string im;
};

std::string format_polynomial(std::span<const CoefficientText> coeffs);

/// "z^5 + (-2+i) z^4 - 2i z^3 + z^2 + (3+i) z + 3i".
template <ComplexScalar T>
std::string to_string(const Poly1<T>& p) {
  std::vector<CoefficientText> text;
  text.reserve(p.coeffs().size());
  for (const T& c : p.coeffs()) text.push_back({part_to_string(c.re), part_to_string(c.im)});
  return format_polynomial(text);
}

}  // namespace esym

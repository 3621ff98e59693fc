#pragma once

// Polynomials in abstract generator symbols e1..en, standing for the
// elementary symmetric polynomials of n variables. Generator monomials are
// treated as a linear basis; coefficients are Gaussian integers.
//
// The maps over this algebra:
//
//   shift                   e_k -> e_{k-1} factor by factor, e_0 = 1, and
//                           constants -> 0. Linear, not unital.
//   embed_generator(k, n)   e_k -> e_k + e_{k-1} * g, where g = e_{n+1} is the
//                           adjoined single-variable generator.
//   embed                   linear multiplicative extension of
//                           embed_generator, fixing constants.
//
// evaluate() substitutes the concrete elementary symmetric values of an
// assignment for the generators.

#include "esym/scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace esym {

/// Ordered set of distinct variable names.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  std::span<const std::string> names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool contains(std::string_view name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// a's names in order, then b's names that a does not already have.
VarSet merge_varsets(const VarSet& a, const VarSet& b);

/// Product of generators, held as a sorted multiset of 1-based indices.
/// The empty multiset is the constant monomial 1.
class GenMonomial {
 public:
  GenMonomial() = default;
  explicit GenMonomial(std::vector<std::size_t> factors);

  static GenMonomial generator(std::size_t k) { return GenMonomial({k}); }

  std::span<const std::size_t> factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool is_constant() const { return factors_.empty(); }
  std::size_t max_index() const { return factors_.empty() ? 0 : factors_.back(); }
  bool contains(std::size_t k) const;

  friend GenMonomial operator*(const GenMonomial& a, const GenMonomial& b);
  friend bool operator==(const GenMonomial&, const GenMonomial&) = default;
  // Canonical order: total degree first, then the index sequence.
  friend std::strong_ordering operator<=>(const GenMonomial& a, const GenMonomial& b);

 private:
  std::vector<std::size_t> factors_;
};

class GenPoly {
 public:
  using Terms = std::map<GenMonomial, ExactComplex>;

  /// The zero polynomial over `ambient` generators.
  explicit GenPoly(std::size_t ambient = 0) : ambient_(ambient) {}

  static GenPoly constant(std::size_t ambient, const ExactComplex& c);
  static GenPoly generator(std::size_t ambient, std::size_t k);
  static GenPoly term(std::size_t ambient, const GenMonomial& m, const ExactComplex& c);

  std::size_t ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  ExactComplex coefficient(const GenMonomial& m) const;

  /// Adds c * m, dropping the term if it cancels. Every index of m must lie
  /// in 1..ambient.
  void add_term(const GenMonomial& m, const ExactComplex& c);

  friend bool operator==(const GenPoly&, const GenPoly&) = default;

 private:
  std::size_t ambient_;
  Terms terms_;
};

// Binary operations require equal ambient counts.
GenPoly gp_add(const GenPoly& p, const GenPoly& q);
GenPoly gp_sub(const GenPoly& p, const GenPoly& q);
GenPoly gp_neg(const GenPoly& p);
GenPoly gp_mul(const GenPoly& p, const GenPoly& q);
GenPoly gp_scale(const GenPoly& p, const ExactComplex& c);

inline GenPoly operator+(const GenPoly& p, const GenPoly& q) { return gp_add(p, q); }
inline GenPoly operator-(const GenPoly& p, const GenPoly& q) { return gp_sub(p, q); }
inline GenPoly operator-(const GenPoly& p) { return gp_neg(p); }
inline GenPoly operator*(const GenPoly& p, const GenPoly& q) { return gp_mul(p, q); }

GenPoly shift(const GenPoly& p);

/// e_k + e_{k-1} * e_{n+1} over n + 1 generators; requires 1 <= k <= n.
GenPoly embed_generator(std::size_t k, std::size_t n);

/// Maps a polynomial over n generators to one over n + 1.
GenPoly embed(const GenPoly& p);

struct GeneratorPartition {
  std::vector<GenPoly> image;  // embed_generator(1..n, n)
  GenPoly complement;          // e_n * e_{n+1}
};

/// The n + 1 generators of the extended algebra, split into the embedded
/// old generators and the single new one. Requires n >= 1.
GeneratorPartition generator_partition(std::size_t n);

struct TopSplit {
  GenPoly without_top;
  GenPoly with_top;
};

/// Separates the monomials that contain the highest generator index.
TopSplit split_by_top_generator(const GenPoly& p);

/// Substitutes values[k - 1] for generator k; values.size() == ambient.
ExactComplex evaluate_generators(const GenPoly& p, std::span<const ExactComplex> values);

/// Substitutes eps_k(xs) for generator k; xs.size() == ambient.
ExactComplex evaluate(const GenPoly& p, std::span<const ExactComplex> xs);

/// For a polynomial over n + 1 generators in the embedded picture:
/// generators 1..n take eps_k(xs) and generator n + 1 takes y.
ExactComplex evaluate_extended(const GenPoly& p, std::span<const ExactComplex> xs,
                               const ExactComplex& y);

/// "3 + 2*e1*e2 - e3^2", terms in canonical order.
std::string to_string(const GenPoly& p);

/// Inverse of to_string. Also accepts unsimplified input such as
/// "e2*e1 + 2*e1*e2" or "(1,2)*e1".
GenPoly parse_genpoly(std::string_view text, std::size_t ambient);

}  // namespace esym

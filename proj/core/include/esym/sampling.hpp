#pragma once

// Seeded random instances for property checks: Gaussian integers with
// bounded parts, generator monomials and generator polynomials.

#include "esym/scalar.hpp"
#include "esym/symalg.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace esym {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  /// Both parts uniform in [-bound, bound].
  ExactComplex gaussian(std::int64_t bound) {
    return ExactComplex::from_int(integer(-bound, bound), integer(-bound, bound));
  }

  std::vector<ExactComplex> gaussians(std::size_t count, std::int64_t bound) {
    std::vector<ExactComplex> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gaussian(bound));
    return out;
  }

  /// Nonzero Gaussian integer with parts in [-bound, bound].
  ExactComplex nonzero_gaussian(std::int64_t bound) {
    while (true) {
      ExactComplex z = gaussian(bound);
      if (!is_zero(z)) return z;
    }
  }

  GenMonomial monomial(std::size_t ambient, std::size_t max_degree) {
    const std::size_t degree = ambient == 0 ? 0 : index(0, max_degree);
    std::vector<std::size_t> factors;
    factors.reserve(degree);
    for (std::size_t i = 0; i < degree; ++i) factors.push_back(index(1, ambient));
    return GenMonomial(std::move(factors));
  }

  /// Nonconstant monomial; ambient and max_degree must be at least 1.
  GenMonomial nonconstant_monomial(std::size_t ambient, std::size_t max_degree) {
    const std::size_t degree = index(1, max_degree);
    std::vector<std::size_t> factors;
    factors.reserve(degree);
    for (std::size_t i = 0; i < degree; ++i) factors.push_back(index(1, ambient));
    return GenMonomial(std::move(factors));
  }

  GenPoly genpoly(std::size_t ambient, std::size_t max_degree, std::size_t max_terms,
                  std::int64_t bound) {
    GenPoly p(ambient);
    const std::size_t terms = index(0, max_terms);
    for (std::size_t i = 0; i < terms; ++i) p.add_term(monomial(ambient, max_degree), gaussian(bound));
    return p;
  }

  template <class It>
  void shuffle(It first, It last) {
    std::shuffle(first, last, engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace esym

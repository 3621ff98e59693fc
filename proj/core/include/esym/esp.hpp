#pragma once

// Elementary symmetric polynomials over a concrete assignment x_1..x_n.
//
// build_table fills the triangle e[i][k] = eps_k(x_1..x_i) row by row with
//
//   e[i][k] = e[i-1][k] + e[i-1][k-1] * x_i,   e[.][0] = 1,  e[i-1][i] = 0,
//
// in O(n^2) ring operations. direct_eps is the subset-expansion oracle:
// it sums the product over every increasing k-tuple of indices.
//
// Indices are 1-based throughout (row i covers the prefix x_1..x_i, column k
// is the degree). eps_0 = 1 and eps_k = 0 for k beyond the variable count.

#include "esym/scalar.hpp"

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace esym {

template <ComplexScalar T>
class EpsTable {
 public:
  std::size_t size() const { return n_; }

  /// Entries e[i][1..i].
  std::span<const T> row(std::size_t i) const {
    check_row(i);
    return {entries_.data() + offset(i), i};
  }

  /// e[i][k], with the constant conventions for k = 0 and k > i.
  T at(std::size_t i, std::size_t k) const {
    check_row(i);
    if (k == 0) return T::one();
    if (k > i) return T::zero();
    return entries_[offset(i) + k - 1];
  }

  /// Row n, the elementary symmetric values of the whole assignment.
  std::span<const T> top_row() const { return row(n_); }

  friend bool operator==(const EpsTable&, const EpsTable&) = default;

  template <ComplexScalar U>
  friend EpsTable<U> build_table(std::span<const U> xs);

 private:
  static std::size_t offset(std::size_t i) { return i * (i - 1) / 2; }

  void check_row(std::size_t i) const {
    if (i < 1 || i > n_) {
      throw UsageError("row index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<T> entries_;
};

template <ComplexScalar T>
EpsTable<T> build_table(std::span<const T> xs) {
  if (xs.empty()) throw UsageError("cannot build an elementary symmetric table of zero variables");
  const std::size_t n = xs.size();
  EpsTable<T> table;
  table.n_ = n;
  table.entries_.reserve(n * (n + 1) / 2);
  table.entries_.push_back(xs[0]);
  for (std::size_t i = 2; i <= n; ++i) {
    const T& x = xs[i - 1];
    const std::size_t prev = EpsTable<T>::offset(i - 1);
    // k = 1: e[i-1][0] = 1
    table.entries_.push_back(table.entries_[prev] + x);
    for (std::size_t k = 2; k < i; ++k) {
      table.entries_.push_back(table.entries_[prev + k - 1] + table.entries_[prev + k - 2] * x);
    }
    // k = i: e[i-1][i] = 0
    table.entries_.push_back(table.entries_[prev + i - 2] * x);
  }
  return table;
}

template <ComplexScalar T>
EpsTable<T> build_table(const std::vector<T>& xs) {
  return build_table(std::span<const T>(xs));
}

/// Lookup with the constant conventions; row index must lie in 1..n.
template <ComplexScalar T>
T query(const EpsTable<T>& table, std::size_t i, std::size_t k) {
  return table.at(i, k);
}

/// Sum over all increasing k-tuples of the product of the selected values.
/// Enumerates tuples iteratively, so memory stays O(k).
template <ComplexScalar T>
T direct_eps(std::span<const T> xs, std::size_t k) {
  const std::size_t n = xs.size();
  if (k == 0) return T::one();
  if (k > n) return T::zero();

  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  T total = T::zero();
  while (true) {
    T product = xs[idx[0]];
    for (std::size_t j = 1; j < k; ++j) product = product * xs[idx[j]];
    total = total + product;

    // Advance to the lexicographic successor.
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t m = j; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
  return total;
}

template <ComplexScalar T>
T direct_eps(const std::vector<T>& xs, std::size_t k) {
  return direct_eps(std::span<const T>(xs), k);
}

template <ComplexScalar T>
struct OmitPair {
  T lhs;
  T rhs;
};

/// lhs = eps_k(all values); rhs = eps_k(rest) + eps_{k-1}(rest) * x_{i0},
/// where rest drops the value at 1-based position i0. Both sides use the
/// direct oracle.
template <ComplexScalar T>
OmitPair<T> eps_omit_identity(std::span<const T> xs, std::size_t i0, std::size_t k) {
  if (i0 < 1 || i0 > xs.size()) {
    throw UsageError("omitted index " + std::to_string(i0) + " outside 1.." +
                     std::to_string(xs.size()));
  }
  std::vector<T> rest;
  rest.reserve(xs.size() - 1);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j != i0 - 1) rest.push_back(xs[j]);
  }
  const std::span<const T> view(rest);
  const T lower = k == 0 ? T::zero() : direct_eps(view, k - 1);
  return {direct_eps(xs, k), direct_eps(view, k) + lower * xs[i0 - 1]};
}

template <ComplexScalar T>
OmitPair<T> eps_omit_identity(const std::vector<T>& xs, std::size_t i0, std::size_t k) {
  return eps_omit_identity(std::span<const T>(xs), i0, k);
}

}  // namespace esym

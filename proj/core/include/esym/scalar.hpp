#pragma once

// Complex scalars in three arithmetic modes.
//
//   ExactComplex   Gaussian integers over arbitrary-precision integers.
//   Wrap64Complex  pairs of 64-bit signed integers with two's-complement
//                  wrapping on every add and multiply.
//   FloatComplex   pairs of doubles, compared with an absolute tolerance.
//
// All three model ComplexScalar, so the evaluation kernels are written once
// as templates. Scalar is the runtime-tagged form used where the mode is only
// known at run time (CLI input, mixed-mode checks).

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace esym {

/// Raised for precondition violations: bad indices, mode mismatches,
/// malformed literals. Maps to exit status 2 in the CLI.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using BigInt = boost::multiprecision::cpp_int;

enum class Mode { exact, wrap64, floating };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view name);

inline constexpr double kDefaultTolerance = 1e-9;

struct ExactComplex {
  BigInt re;
  BigInt im;

  static ExactComplex zero() { return {}; }
  static ExactComplex one() { return {1, 0}; }
  static ExactComplex from_int(std::int64_t re, std::int64_t im = 0) {
    return {re, im};
  }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ExactComplex& operator+=(const ExactComplex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

namespace detail {

constexpr std::int64_t wrapping_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) +
                                   static_cast<std::uint64_t>(b));
}
constexpr std::int64_t wrapping_sub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) -
                                   static_cast<std::uint64_t>(b));
}
constexpr std::int64_t wrapping_mul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) *
                                   static_cast<std::uint64_t>(b));
}

}  // namespace detail

struct Wrap64Complex {
  std::int64_t re = 0;
  std::int64_t im = 0;

  static constexpr Wrap64Complex zero() { return {}; }
  static constexpr Wrap64Complex one() { return {1, 0}; }
  static constexpr Wrap64Complex from_int(std::int64_t re, std::int64_t im = 0) {
    return {re, im};
  }

  friend constexpr Wrap64Complex operator+(Wrap64Complex a, Wrap64Complex b) {
    return {detail::wrapping_add(a.re, b.re), detail::wrapping_add(a.im, b.im)};
  }
  friend constexpr Wrap64Complex operator-(Wrap64Complex a, Wrap64Complex b) {
    return {detail::wrapping_sub(a.re, b.re), detail::wrapping_sub(a.im, b.im)};
  }
  friend constexpr Wrap64Complex operator-(Wrap64Complex a) {
    return {detail::wrapping_sub(0, a.re), detail::wrapping_sub(0, a.im)};
  }
  friend constexpr Wrap64Complex operator*(Wrap64Complex a, Wrap64Complex b) {
    return {detail::wrapping_sub(detail::wrapping_mul(a.re, b.re),
                                 detail::wrapping_mul(a.im, b.im)),
            detail::wrapping_add(detail::wrapping_mul(a.re, b.im),
                                 detail::wrapping_mul(a.im, b.re))};
  }
  constexpr Wrap64Complex& operator+=(Wrap64Complex b) { return *this = *this + b; }
  friend constexpr bool operator==(Wrap64Complex, Wrap64Complex) = default;
};

struct FloatComplex {
  double re = 0.0;
  double im = 0.0;

  static constexpr FloatComplex zero() { return {}; }
  static constexpr FloatComplex one() { return {1.0, 0.0}; }
  static constexpr FloatComplex from_int(std::int64_t re, std::int64_t im = 0) {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend constexpr FloatComplex operator+(FloatComplex a, FloatComplex b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr FloatComplex operator-(FloatComplex a, FloatComplex b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr FloatComplex operator-(FloatComplex a) { return {-a.re, -a.im}; }
  friend constexpr FloatComplex operator*(FloatComplex a, FloatComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr FloatComplex& operator+=(FloatComplex b) { return *this = *this + b; }
  // Bitwise equality; use approx_equal for tolerance comparisons.
  friend constexpr bool operator==(FloatComplex, FloatComplex) = default;
};

/// |a - b| <= tolerance, measured as the modulus of the difference.
bool approx_equal(FloatComplex a, FloatComplex b, double tolerance = kDefaultTolerance);
double magnitude(FloatComplex z);

template <class T>
concept ComplexScalar = std::regular<T> && requires(const T& a, const T& b) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { T::zero() } -> std::same_as<T>;
  { T::one() } -> std::same_as<T>;
  { T::from_int(std::int64_t{}, std::int64_t{}) } -> std::same_as<T>;
};

template <class T>
inline constexpr Mode mode_of = Mode::exact;
template <>
inline constexpr Mode mode_of<Wrap64Complex> = Mode::wrap64;
template <>
inline constexpr Mode mode_of<FloatComplex> = Mode::floating;

template <ComplexScalar T>
bool is_zero(const T& z) {
  return z == T::zero();
}

/// Reduces each part modulo 2^64 into the signed range, which is exactly
/// what wrapping arithmetic produces for the same expression.
Wrap64Complex to_wrap64(const ExactComplex& z);
FloatComplex to_float(const ExactComplex& z);

// Decimal text of a single part. Floats use the shortest round-trip form.
std::string part_to_string(const BigInt& v);
std::string part_to_string(std::int64_t v);
std::string part_to_string(double v);

/// "(re,im)" with no spaces.
template <ComplexScalar T>
std::string to_pair_string(const T& z) {
  return "(" + part_to_string(z.re) + "," + part_to_string(z.im) + ")";
}

std::string literal_from_parts(const std::string& re, const std::string& im);

/// Algebraic literal: "3", "-2i", "i", "-2+i", "3-4i".
template <ComplexScalar T>
std::string to_literal(const T& z) {
  return literal_from_parts(part_to_string(z.re), part_to_string(z.im));
}

/// Parses "a", "bi", "a+bi", "a-bi" or "(a,b)". Integer modes reject
/// fractional parts; wrap64 rejects parts outside the signed 64-bit range.
template <ComplexScalar T>
T parse_scalar(std::string_view text);
template <>
ExactComplex parse_scalar<ExactComplex>(std::string_view text);
template <>
Wrap64Complex parse_scalar<Wrap64Complex>(std::string_view text);
template <>
FloatComplex parse_scalar<FloatComplex>(std::string_view text);

/// A scalar tagged with its arithmetic mode at run time.
class Scalar {
 public:
  using Value = std::variant<ExactComplex, Wrap64Complex, FloatComplex>;

  Scalar() = default;
  Scalar(ExactComplex z) : value_(std::move(z)) {}
  Scalar(Wrap64Complex z) : value_(z) {}
  Scalar(FloatComplex z) : value_(z) {}

  Mode mode() const { return static_cast<Mode>(value_.index()); }
  const Value& value() const { return value_; }

  template <ComplexScalar T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&value_)) return *p;
    throw UsageError("scalar is in " + std::string(mode_name(mode())) +
                     " mode, expected " + std::string(mode_name(mode_of<T>)));
  }

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Value value_;
};

/// Both operands must share a mode; otherwise UsageError.
Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);

std::string to_pair_string(const Scalar& z);
std::string to_literal(const Scalar& z);
Scalar parse_scalar(std::string_view text, Mode mode);

}  // namespace esym

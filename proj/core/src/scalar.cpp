#include "esym/scalar.hpp"

#include <charconv>
#include <cmath>
#include <regex>
#include <system_error>

namespace esym {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::exact:
      return "exact";
    case Mode::wrap64:
      return "wrap64";
    case Mode::floating:
      return "float";
  }
  return "unknown";
}

Mode parse_mode(std::string_view name) {
  if (name == "exact") return Mode::exact;
  if (name == "wrap64") return Mode::wrap64;
  if (name == "float") return Mode::floating;
  throw UsageError("unknown arithmetic mode '" + std::string(name) +
                   "' (expected exact, wrap64 or float)");
}

bool approx_equal(FloatComplex a, FloatComplex b, double tolerance) {
  return magnitude(a - b) <= tolerance;
}

double magnitude(FloatComplex z) { return std::hypot(z.re, z.im); }

Wrap64Complex to_wrap64(const ExactComplex& z) {
  static const BigInt modulus = BigInt(1) << 64;
  auto reduce = [](const BigInt& v) {
    BigInt r = v % modulus;
    if (r < 0) r += modulus;
    return static_cast<std::int64_t>(r.convert_to<std::uint64_t>());
  };
  return {reduce(z.re), reduce(z.im)};
}

FloatComplex to_float(const ExactComplex& z) {
  return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

std::string part_to_string(const BigInt& v) { return v.str(); }

std::string part_to_string(std::int64_t v) { return std::to_string(v); }

std::string part_to_string(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string literal_from_parts(const std::string& re, const std::string& im) {
  if (im == "0") return re;
  const bool negative = im.front() == '-';
  const std::string magnitude = negative ? im.substr(1) : im;
  const std::string imag = (magnitude == "1" ? "" : magnitude) + "i";
  if (re == "0") return (negative ? "-" : "") + imag;
  return re + (negative ? "-" : "+") + imag;
}

namespace {

struct LiteralParts {
  std::string re;
  std::string im;
};

LiteralParts split_literal(std::string_view text) {
  if (text.empty()) throw UsageError("empty complex literal");
  if (text.front() == '(') {
    const auto comma = text.find(',');
    if (text.back() != ')' || comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      throw UsageError("malformed complex literal '" + std::string(text) + "'");
    }
    return {std::string(text.substr(1, comma - 1)),
            std::string(text.substr(comma + 1, text.size() - comma - 2))};
  }
  if (text.back() != 'i') return {std::string(text), "0"};

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  LiteralParts parts;
  std::string imag;
  if (split == std::string_view::npos) {
    parts.re = "0";
    imag = std::string(body);
  } else {
    parts.re = std::string(body.substr(0, split));
    imag = std::string(body.substr(split));
  }
  if (imag.empty() || imag == "+") {
    imag = "1";
  } else if (imag == "-") {
    imag = "-1";
  }
  parts.im = std::move(imag);
  return parts;
}

std::string_view strip_plus(std::string_view s) {
  return (!s.empty() && s.front() == '+') ? s.substr(1) : s;
}

[[noreturn]] void bad_literal(std::string_view text, std::string_view why) {
  throw UsageError("cannot parse '" + std::string(text) + "' as a complex number: " +
                   std::string(why));
}

const std::regex& integer_pattern() {
  static const std::regex re("[+-]?[0-9]+");
  return re;
}

const std::regex& float_pattern() {
  static const std::regex re("[+-]?([0-9]+\\.?[0-9]*|\\.[0-9]+)([eE][+-]?[0-9]+)?");
  return re;
}

BigInt parse_big(const std::string& part, std::string_view text) {
  if (!std::regex_match(part, integer_pattern())) bad_literal(text, "expected an integer part");
  return BigInt(std::string(strip_plus(part)));
}

std::int64_t parse_i64(const std::string& part, std::string_view text) {
  if (!std::regex_match(part, integer_pattern())) bad_literal(text, "expected an integer part");
  const std::string_view digits = strip_plus(part);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) bad_literal(text, "part outside the 64-bit range");
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    bad_literal(text, "expected an integer part");
  }
  return value;
}

double parse_double(const std::string& part, std::string_view text) {
  if (!std::regex_match(part, float_pattern())) bad_literal(text, "expected a decimal part");
  const std::string_view digits = strip_plus(part);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    bad_literal(text, "expected a decimal part");
  }
  return value;
}

}  // namespace

template <>
ExactComplex parse_scalar<ExactComplex>(std::string_view text) {
  const auto parts = split_literal(text);
  return {parse_big(parts.re, text), parse_big(parts.im, text)};
}

template <>
Wrap64Complex parse_scalar<Wrap64Complex>(std::string_view text) {
  const auto parts = split_literal(text);
  return {parse_i64(parts.re, text), parse_i64(parts.im, text)};
}

template <>
FloatComplex parse_scalar<FloatComplex>(std::string_view text) {
  const auto parts = split_literal(text);
  return {parse_double(parts.re, text), parse_double(parts.im, text)};
}

namespace {

void require_same_mode(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) {
    throw UsageError("arithmetic mode mismatch: " + std::string(mode_name(a.mode())) +
                     " vs " + std::string(mode_name(b.mode())));
  }
}

}  // namespace

Scalar add(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  return std::visit(
      [&b](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return x + std::get<T>(b.value());
      },
      a.value());
}

Scalar mul(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  return std::visit(
      [&b](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return x * std::get<T>(b.value());
      },
      a.value());
}

std::string to_pair_string(const Scalar& z) {
  return std::visit([](const auto& x) { return to_pair_string(x); }, z.value());
}

std::string to_literal(const Scalar& z) {
  return std::visit([](const auto& x) { return to_literal(x); }, z.value());
}

Scalar parse_scalar(std::string_view text, Mode mode) {
  switch (mode) {
    case Mode::exact:
      return parse_scalar<ExactComplex>(text);
    case Mode::wrap64:
      return parse_scalar<Wrap64Complex>(text);
    case Mode::floating:
      return parse_scalar<FloatComplex>(text);
  }
  throw UsageError("unknown arithmetic mode");
}

}  // namespace esym

#include "esym/polyzero.hpp"

namespace esym {

std::string format_polynomial(std::span<const CoefficientText> coeffs) {
  const std::size_t degree = coeffs.size() - 1;
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& [re, im] = coeffs[k];
    if (re == "0" && im == "0") continue;
    const std::size_t power = degree - k;
    const std::string lit = literal_from_parts(re, im);

    // Mixed coefficients are parenthesised and always joined with '+'.
    const bool mixed = re != "0" && im != "0";
    bool negative = false;
    std::string body;
    if (mixed) {
      body = "(" + lit + ")";
    } else {
      negative = lit.front() == '-';
      body = negative ? lit.substr(1) : lit;
    }
    if (power > 0 && body == "1") body.clear();

    std::string term = body;
    if (power > 0) {
      if (!term.empty()) term += ' ';
      term += power == 1 ? "z" : "z^" + std::to_string(power);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace esym

#include "esym/cli/java_compat.hpp"

#include "esym/scalar.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

namespace esym::cli {
namespace {

constexpr const char* kCountPrompt = "Enter number of generating variables: ";
constexpr const char* kValuesPrompt =
    "Enter the values of the n generators as a white space separating list: ";
constexpr const char* kQueryPrompt = "Enter the values of n and k for the desired iteration: ";

// Beyond this many table entries the original runs out of heap.
constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 26;

struct JavaException {
  std::string type;
  std::string message;
};

/// Whitespace-delimited int reader with the original's acceptance rules:
/// optional sign, plain or comma-grouped digits, 32-bit range.
class IntScanner {
 public:
  explicit IntScanner(std::istream& in) : in_(in) {}

  std::int32_t next_int() {
    std::string token;
    if (!(in_ >> token)) throw JavaException{"java.util.NoSuchElementException", ""};
    static const std::regex pattern("[+-]?([0-9]+|[0-9]{1,3}(,[0-9]{3})+)");
    if (!std::regex_match(token, pattern)) throw JavaException{"java.util.InputMismatchException", ""};

    std::string digits;
    for (char c : token) {
      if (c != ',' && c != '+') digits += c;
    }
    std::int32_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw JavaException{"java.util.InputMismatchException", "For input string: \"" + token + "\""};
    }
    return value;
  }

 private:
  std::istream& in_;
};

void run(IntScanner& scan, std::ostream& out) {
  out << kCountPrompt << std::flush;
  const std::int32_t n = scan.next_int();
  out << '\n';

  out << kValuesPrompt << std::flush;
  if (n < 0) throw JavaException{"java.lang.NegativeArraySizeException", ""};
  std::vector<Wrap64Complex> xs(static_cast<std::size_t>(n));
  for (auto& x : xs) {
    x.re = scan.next_int();
    x.im = scan.next_int();
  }
  out << '\n';

  // epsilon[i][k] holds eps_{k+1} of the first i+1 inputs.
  const auto count = static_cast<std::uint64_t>(n);
  if (count * (count + 1) / 2 > kMaxEntries) {
    throw JavaException{"java.lang.OutOfMemoryError", "Java heap space"};
  }
  std::vector<std::vector<Wrap64Complex>> epsilon(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) epsilon[i].resize(i + 1);
  if (xs.empty()) throw JavaException{"java.lang.ArrayIndexOutOfBoundsException", "0"};
  epsilon[0][0] = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < epsilon[i].size(); ++k) {
      if (k == 0) {
        epsilon[i][k] = epsilon[i - 1][k] + xs[i];
      } else if (k > i - 1) {
        epsilon[i][k] = epsilon[i - 1][k - 1] * xs[i];
      } else {
        epsilon[i][k] = epsilon[i - 1][k] + epsilon[i - 1][k - 1] * xs[i];
      }
    }
  }

  out << kQueryPrompt << std::flush;
  // int arithmetic in the original: nextInt() - 1 wraps at INT_MIN.
  const auto minus_one = [](std::int32_t v) {
    return static_cast<std::int32_t>(static_cast<std::uint32_t>(v) - 1u);
  };
  const std::int32_t row = minus_one(scan.next_int());
  const std::int32_t col = minus_one(scan.next_int());
  out << '\n';

  if (row < 0 || row >= n) {
    throw JavaException{"java.lang.ArrayIndexOutOfBoundsException", std::to_string(row)};
  }
  const auto& entries = epsilon[static_cast<std::size_t>(row)];
  if (col < 0 || static_cast<std::size_t>(col) >= entries.size()) {
    throw JavaException{"java.lang.ArrayIndexOutOfBoundsException", std::to_string(col)};
  }
  const Wrap64Complex value = entries[static_cast<std::size_t>(col)];
  out << "epsilon[" << std::int64_t{row} + 1 << "][" << std::int64_t{col} + 1 << "] = ("
      << value.re << "," << value.im << ")\n";
}

}  // namespace

int run_java_compat(std::istream& in, std::ostream& out, std::ostream& err) {
  IntScanner scan(in);
  try {
    run(scan, out);
  } catch (const JavaException& e) {
    out.flush();
    err << "Exception in thread \"main\" " << e.type;
    if (!e.message.empty()) err << ": " << e.message;
    err << '\n';
    return 2;
  }
  out.flush();
  return 0;
}

}  // namespace esym::cli

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Exact criteria use zero tolerance.

#include "esym/cli/java_compat.hpp"
#include "esym/esp.hpp"
#include "esym/polyzero.hpp"
#include "esym/sampling.hpp"
#include "esym/symalg.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace {

using namespace esym;
using esym::testing::gi;
using esym::testing::subset_eps;

namespace fs = std::filesystem;

struct Criterion {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;

  void check(bool pass, const std::string& what) {
    ++checks;
    if (!pass && ok) detail = what;
    ok = ok && pass;
  }
};

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<ExactComplex> top(const EpsTable<ExactComplex>& t) { return {t.top_row().begin(), t.top_row().end()}; }

Criterion worked_example() {
  Criterion c;
  const Poly1<ExactComplex> f(testing::reals({1, -2, 0, 1, 3}));
  const auto g = mul_linear(f, gi(0, 1));
  const std::vector<ExactComplex> expected{gi(1), gi(-2, 1), gi(0, -2), gi(1), gi(3, 1), gi(0, 3)};
  c.check(std::vector(g.coeffs().begin(), g.coeffs().end()) == expected, "coefficients differ");
  return c;
}

Criterion table_vs_direct() {
  Criterion c;
  Sampler rng(2002);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int t = 0; t < 200; ++t) {
      const auto xs = rng.gaussians(n, 9);
      const auto table = build_table(xs);
      for (std::size_t k = 1; k <= n; ++k) {
        c.check(table.at(n, k) == direct_eps(xs, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check(seconds < 30.0, "runtime " + std::to_string(seconds) + " s");
  return c;
}

Criterion omit_identity() {
  Criterion c;
  Sampler rng(2004);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int t = 0; t < 50; ++t) {
      const auto xs = rng.gaussians(n, 9);
      for (std::size_t i0 = 1; i0 <= n; ++i0) {
        for (std::size_t k = 1; k <= n; ++k) {
          const auto p = eps_omit_identity(xs, i0, k);
          c.check(p.lhs == p.rhs, "n=" + std::to_string(n) + " i0=" + std::to_string(i0));
        }
      }
    }
  }
  return c;
}

Criterion symmetry() {
  Criterion c;
  Sampler rng(1001);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int t = 0; t < 25; ++t) {
      auto xs = rng.gaussians(n, 9);
      const auto expected = top(build_table(xs));
      for (int p = 0; p < 20; ++p) {
        rng.shuffle(xs.begin(), xs.end());
        c.check(top(build_table(xs)) == expected, "n=" + std::to_string(n));
      }
    }
  }
  return c;
}

Criterion alpha_embedding() {
  Criterion c;
  Sampler rng(3303);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto part = generator_partition(n);
    for (int t = 0; t < 25; ++t) {
      const auto xs = rng.gaussians(n, 9);
      const auto y = rng.gaussian(9);
      auto full = xs;
      full.push_back(y);
      for (std::size_t k = 1; k <= n; ++k) {
        c.check(evaluate_extended(embed_generator(k, n), xs, y) == direct_eps(full, k),
                "alpha n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
      c.check(evaluate_extended(part.complement, xs, y) == direct_eps(full, n + 1),
              "complement n=" + std::to_string(n));
    }
  }
  return c;
}

Criterion shift_checks() {
  Criterion c;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto expected = k == 1 ? GenPoly::constant(n, ExactComplex::one()) : GenPoly::generator(n, k - 1);
      c.check(shift(GenPoly::generator(n, k)) == expected, "U(e" + std::to_string(k) + ")");
    }
    c.check(shift(GenPoly::constant(n, gi(7, -3))).is_zero(), "U(constant)");
  }
  Sampler rng(3202);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.index(1, 6);
    const auto m = rng.nonconstant_monomial(n, 4);
    std::vector<std::size_t> lowered;
    for (auto k : m.factors()) {
      if (k > 1) lowered.push_back(k - 1);
    }
    c.check(shift(GenPoly::term(n, m, ExactComplex::one())) == GenPoly::term(n, GenMonomial(lowered), ExactComplex::one()),
            "monomial " + to_string(GenPoly::term(n, m, ExactComplex::one())));
  }
  return c;
}

Criterion phi_homomorphism() {
  Criterion c;
  Sampler rng(3305);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.index(1, 4);
    const auto p = rng.genpoly(n, 3, 4, 5);
    const auto q = rng.genpoly(n, 3, 4, 5);
    c.check(embed(p + q) == embed(p) + embed(q), "sum " + to_string(p) + " ; " + to_string(q));
    c.check(embed(p * q) == embed(p) * embed(q), "product " + to_string(p) + " ; " + to_string(q));
  }
  return c;
}

Criterion vieta_bridge() {
  Criterion c;
  Sampler rng(4102);
  for (std::size_t size = 0; size <= 8; ++size) {
    for (int t = 0; t < 25; ++t) {
      const auto roots = rng.gaussians(size, 9);
      const auto p = from_roots(roots);
      for (std::size_t k = 0; k <= size; ++k) {
        const auto e = subset_eps(roots, k);
        c.check(p.coeffs()[k] == (k % 2 == 0 ? e : -e), "coefficient " + std::to_string(k));
      }
      for (const auto& r : roots) c.check(is_zero(eval(p, r)), "nonzero value at a root");
      Poly1<ExactComplex> incremental(std::vector<ExactComplex>{ExactComplex::one()});
      for (const auto& r : roots) incremental = insert_zero(incremental, r);
      c.check(incremental == p, "incremental insertion differs");
    }
  }
  return c;
}

Criterion deflation() {
  Criterion c;
  Sampler rng(4200);
  for (int t = 0; t < 100; ++t) {
    std::vector<ExactComplex> coeffs{rng.nonzero_gaussian(9)};
    const std::size_t degree = rng.index(0, 8);
    for (std::size_t k = 0; k < degree; ++k) coeffs.push_back(rng.gaussian(9));
    const Poly1<ExactComplex> p(coeffs);
    const auto lambda = rng.gaussian(9);
    const auto d = deflate(insert_zero(p, lambda), lambda);
    c.check(d.quotient == p && is_zero(d.remainder), to_string(p));
  }
  return c;
}

Criterion golden_transcripts() {
  Criterion c;
  const fs::path dir = fs::path(ESYM_GOLDEN_DIR) / "java_compat";
  std::size_t cases = 0;
  bool saw_product = false;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".stdin") continue;
    auto expected_path = entry.path();
    expected_path.replace_extension(".stdout");
    const std::string expected = slurp(expected_path);
    std::istringstream in(slurp(entry.path()));
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_java_compat(in, out, err);
    c.check(code == 0 && out.str() == expected, entry.path().filename().string());
    saw_product = saw_product || expected.find("epsilon[2][2] = (-5,10)\n") != std::string::npos;
    ++cases;
  }
  c.check(cases >= 5, "only " + std::to_string(cases) + " transcripts");
  c.check(saw_product, "no (-5,10) transcript");

  // (2^31 - 1)^3 = 2^93 - 3*2^62 + 3*2^31 - 1. Mod 2^64 the first term
  // vanishes and -3*2^62 == 2^62, leaving 2^62 + 3*2^31 - 1.
  const std::int64_t cube = (std::int64_t{1} << 62) + 3 * (std::int64_t{1} << 31) - 1;
  const std::string cube_line = "epsilon[3][3] = (" + std::to_string(cube) + ",0)\n";
  c.check(slurp(dir / "wrap_real_cube.stdout").ends_with(cube_line), "wrap transcript vs hand value");
  return c;
}

Criterion binomial() {
  Criterion c;
  for (unsigned n = 1; n <= 20; ++n) {
    const auto t = build_table(std::vector<ExactComplex>(n, ExactComplex::one()));
    BigInt choose = 1;
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) choose = choose * (n - k + 1) / k;
      c.check(t.at(n, k) == ExactComplex{choose, 0}, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*run)();
  };
  const Entry criteria[] = {
      {"1 worked-example-coefficients", worked_example},
      {"2 table-vs-direct-oracle", table_vs_direct},
      {"3 omit-one-identity", omit_identity},
      {"4 permutation-symmetry", symmetry},
      {"5 alpha-embedding", alpha_embedding},
      {"6 shift", shift_checks},
      {"7 phi-homomorphism", phi_homomorphism},
      {"8 vieta-bridge", vieta_bridge},
      {"9 deflation-roundtrip", deflation},
      {"10 java-compat-transcripts", golden_transcripts},
      {"11 binomial-specialization", binomial},
  };
  int failures = 0;
  for (const auto& e : criteria) {
    Criterion result;
    try {
      result = e.run();
    } catch (const std::exception& ex) {
      result.ok = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    std::cout << (result.ok ? "PASS " : "FAIL ") << e.name << " (" << result.checks << " checks)";
    if (!result.ok) std::cout << " first failure: " << result.detail;
    std::cout << '\n';
    failures += result.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}

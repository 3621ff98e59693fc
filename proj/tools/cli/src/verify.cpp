#include "esym/cli/verify.hpp"

#include "esym/esp.hpp"
#include "esym/polyzero.hpp"
#include "esym/sampling.hpp"
#include "esym/symalg.hpp"

#include <algorithm>
#include <ostream>

namespace esym::cli {
namespace {

constexpr std::int64_t kPartBound = 9;

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failed == 0) result_.first_failure = describe();
    ++result_.failed;
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string list_text(std::span<const ExactComplex> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_literal(xs[i]);
  }
  return out + "]";
}

ExactComplex power(const ExactComplex& c, std::size_t k) {
  ExactComplex out = ExactComplex::one();
  for (std::size_t i = 0; i < k; ++i) out = out * c;
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

struct Context {
  const VerifyConfig& config;
  const TopRowFn& top_row;
  Sampler& rng;

  std::size_t cycle_n(std::size_t trial, std::size_t lo, std::size_t hi) const {
    return lo + trial % (hi - lo + 1);
  }
};

PropertyResult ring_axioms(Context& ctx) {
  Property prop("scalar-ring-axioms");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const auto a = ctx.rng.gaussian(1'000'000);
    const auto b = ctx.rng.gaussian(1'000'000);
    const auto c = ctx.rng.gaussian(1'000'000);
    const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) &&
                    a * b == b * a && a * (b + c) == a * b + a * c;
    prop.check(ok, [&] { return "a=" + to_literal(a) + " b=" + to_literal(b) + " c=" + to_literal(c); });
  }
  return prop.take();
}

PropertyResult wrap64_agreement(Context& ctx) {
  Property prop("wrap64-agreement");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    // Small operands: no wrap occurs, the modes agree numerically. Three
    // factors with parts up to 10^6 stay below 2^62; a fourth needs 10^4.
    const bool four = t % 2 == 1;
    const auto factors = ctx.rng.gaussians(four ? 4 : 3, four ? 10'000 : 1'000'000);
    ExactComplex exact = ExactComplex::one();
    Wrap64Complex wrapped = Wrap64Complex::one();
    for (const auto& f : factors) {
      exact = exact * f;
      wrapped = wrapped * to_wrap64(f);
    }
    const bool fits = BigInt(wrapped.re) == exact.re && BigInt(wrapped.im) == exact.im;
    prop.check(fits, [&] { return "small factors " + list_text(factors); });

    // Operands near 2^62: the exact product leaves the 64-bit range and the
    // wrapped product equals its reduction modulo 2^64.
    const std::int64_t base = std::int64_t{1} << 62;
    const ExactComplex a = ExactComplex::from_int(base - ctx.rng.integer(0, 1000), ctx.rng.integer(-1000, 1000));
    const ExactComplex b = ExactComplex::from_int(base - ctx.rng.integer(0, 1000), ctx.rng.integer(-1000, 1000));
    const ExactComplex big = a * b;
    const Wrap64Complex wrapped_big = to_wrap64(a) * to_wrap64(b);
    const bool diverges = BigInt(wrapped_big.re) != big.re;
    prop.check(diverges && wrapped_big == to_wrap64(big),
               [&] { return "large factors " + to_literal(a) + ", " + to_literal(b); });
  }
  return prop.take();
}

PropertyResult recurrence_oracle(Context& ctx) {
  Property prop("recurrence-oracle");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    const auto row = ctx.top_row(xs);
    bool ok = row.size() == n;
    for (std::size_t k = 1; ok && k <= n; ++k) ok = row[k - 1] == direct_eps(xs, k);
    prop.check(ok, [&] { return "xs=" + list_text(xs); });
  }
  return prop.take();
}

PropertyResult recurrence_entries(Context& ctx) {
  Property prop("recurrence-entries");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    const auto table = build_table(xs);
    bool ok = table.at(1, 1) == xs[0];
    for (std::size_t i = 2; ok && i <= n; ++i) {
      for (std::size_t k = 1; ok && k <= i; ++k) {
        ok = table.at(i, k) == table.at(i - 1, k) + table.at(i - 1, k - 1) * xs[i - 1];
      }
    }
    prop.check(ok, [&] { return "xs=" + list_text(xs); });
  }
  return prop.take();
}

PropertyResult omit_identity(Context& ctx) {
  Property prop("omit-identity");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    bool ok = true;
    for (std::size_t i0 = 1; ok && i0 <= n; ++i0) {
      for (std::size_t k = 1; ok && k <= n; ++k) {
        const auto pair = eps_omit_identity(xs, i0, k);
        ok = pair.lhs == pair.rhs;
      }
    }
    prop.check(ok, [&] { return "xs=" + list_text(xs); });
  }
  return prop.take();
}

PropertyResult permutation_invariance(Context& ctx) {
  Property prop("permutation-invariance");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    auto xs = ctx.rng.gaussians(n, kPartBound);
    const auto reference = ctx.top_row(xs);
    for (int r = 0; r < 5; ++r) {
      ctx.rng.shuffle(xs.begin(), xs.end());
      prop.check(ctx.top_row(xs) == reference, [&] { return "permuted xs=" + list_text(xs); });
    }
  }
  return prop.take();
}

PropertyResult binomial_row(Context& ctx) {
  Property prop("binomial-row");
  for (std::size_t n = 1; n <= 20; ++n) {
    const std::vector<ExactComplex> ones(n, ExactComplex::one());
    const auto row = ctx.top_row(ones);
    bool ok = row.size() == n;
    for (std::size_t k = 1; ok && k <= n; ++k) ok = row[k - 1] == ExactComplex{binomial(n, k), 0};
    prop.check(ok, [&] { return "n=" + std::to_string(n); });
  }
  return prop.take();
}

PropertyResult homogeneity(Context& ctx) {
  Property prop("homogeneity");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    const auto c = ctx.rng.gaussian(5);
    std::vector<ExactComplex> scaled;
    for (const auto& x : xs) scaled.push_back(c * x);
    const auto base = ctx.top_row(xs);
    const auto row = ctx.top_row(scaled);
    bool ok = row.size() == n && base.size() == n;
    for (std::size_t k = 1; ok && k <= n; ++k) ok = row[k - 1] == power(c, k) * base[k - 1];
    prop.check(ok, [&] { return "c=" + to_literal(c) + " xs=" + list_text(xs); });
  }
  return prop.take();
}

PropertyResult alpha_embedding(Context& ctx) {
  Property prop("alpha-embedding");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    const auto y = ctx.rng.gaussian(kPartBound);
    auto full = xs;
    full.push_back(y);
    const auto part = generator_partition(n);
    bool ok = true;
    for (std::size_t k = 1; ok && k <= n; ++k) {
      ok = evaluate_extended(part.image[k - 1], xs, y) == direct_eps(full, k);
    }
    ok = ok && evaluate_extended(part.complement, xs, y) == direct_eps(full, n + 1);
    prop.check(ok, [&] { return "xs=" + list_text(xs) + " y=" + to_literal(y); });
  }
  return prop.take();
}

PropertyResult alpha_injective(Context& ctx) {
  Property prop("alpha-injective");
  for (std::size_t n = 1; n <= ctx.config.max_n; ++n) {
    const auto part = generator_partition(n);
    bool ok = true;
    for (std::size_t a = 0; ok && a < n; ++a) {
      for (std::size_t b = a + 1; ok && b < n; ++b) ok = part.image[a] != part.image[b];
    }
    prop.check(ok, [&] { return "n=" + std::to_string(n); });
  }
  return prop.take();
}

PropertyResult shift_generators(Context& ctx) {
  Property prop("shift-generators");
  const std::size_t limit = std::min<std::size_t>(ctx.config.max_n, 6);
  for (std::size_t n = 1; n <= limit; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const GenPoly expected = k == 1 ? GenPoly::constant(n, ExactComplex::one()) : GenPoly::generator(n, k - 1);
      prop.check(shift(GenPoly::generator(n, k)) == expected,
                 [&] { return "e" + std::to_string(k) + " over n=" + std::to_string(n); });
    }
  }
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, limit);
    const auto c = ctx.rng.nonzero_gaussian(5);
    prop.check(shift(GenPoly::constant(n, c)).is_zero(), [&] { return "constant " + to_literal(c); });

    const auto m = ctx.rng.nonconstant_monomial(n, 4);
    std::vector<std::size_t> lowered;
    for (std::size_t f : m.factors()) {
      if (f > 1) lowered.push_back(f - 1);
    }
    const auto p = GenPoly::term(n, m, c);
    prop.check(shift(p) == GenPoly::term(n, GenMonomial(lowered), c), [&] { return to_string(p); });
  }
  return prop.take();
}

PropertyResult embed_homomorphism(Context& ctx) {
  Property prop("embed-homomorphism");
  const std::size_t limit = std::min<std::size_t>(ctx.config.max_n, 4);
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, limit);
    const auto p = ctx.rng.genpoly(n, 3, 4, 5);
    const auto q = ctx.rng.genpoly(n, 3, 4, 5);
    const bool ok = embed(p + q) == embed(p) + embed(q) && embed(p * q) == embed(p) * embed(q);
    prop.check(ok, [&] { return "p=" + to_string(p) + " q=" + to_string(q); });
  }
  return prop.take();
}

PropertyResult embed_evaluation(Context& ctx) {
  Property prop("embed-evaluation");
  const std::size_t limit = std::min<std::size_t>(ctx.config.max_n, 4);
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, limit);
    const auto p = ctx.rng.genpoly(n, 3, 4, 5);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    const auto y = ctx.rng.gaussian(kPartBound);
    auto full = xs;
    full.push_back(y);
    std::vector<ExactComplex> extended_values;
    for (std::size_t k = 1; k <= n; ++k) extended_values.push_back(direct_eps(full, k));
    prop.check(evaluate_extended(embed(p), xs, y) == evaluate_generators(p, extended_values),
               [&] { return "p=" + to_string(p) + " xs=" + list_text(xs) + " y=" + to_literal(y); });
  }
  return prop.take();
}

PropertyResult mul_pointwise(Context& ctx) {
  Property prop("mul-pointwise");
  const std::size_t limit = std::min<std::size_t>(ctx.config.max_n, 6);
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, limit);
    const auto p = ctx.rng.genpoly(n, 3, 4, 5);
    const auto q = ctx.rng.genpoly(n, 3, 4, 5);
    const auto xs = ctx.rng.gaussians(n, kPartBound);
    prop.check(evaluate(p * q, xs) == evaluate(p, xs) * evaluate(q, xs),
               [&] { return "p=" + to_string(p) + " q=" + to_string(q) + " xs=" + list_text(xs); });
  }
  return prop.take();
}

PropertyResult split_soundness(Context& ctx) {
  Property prop("split-soundness");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t ambient = ctx.cycle_n(t, 1, ctx.config.max_n) + 1;
    const auto p = ctx.rng.genpoly(ambient, 4, 6, 5);
    const auto split = split_by_top_generator(p);
    bool ok = split.without_top + split.with_top == p;
    for (const auto& [m, c] : split.with_top.terms()) ok = ok && m.contains(ambient);
    for (const auto& [m, c] : split.without_top.terms()) ok = ok && !m.contains(ambient);
    prop.check(ok, [&] { return "p=" + to_string(p); });
  }
  return prop.take();
}

PropertyResult omitted_index_partition(Context& ctx) {
  Property prop("omitted-index-partition");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t n = ctx.cycle_n(t, 1, ctx.config.max_n);
    const auto full = ctx.rng.gaussians(n + 1, kPartBound);
    const auto part = generator_partition(n);
    bool ok = true;
    for (std::size_t j = 0; ok && j <= n; ++j) {
      std::vector<ExactComplex> rest;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i != j) rest.push_back(full[i]);
      }
      for (std::size_t k = 1; ok && k <= n; ++k) {
        ok = evaluate_extended(part.image[k - 1], rest, full[j]) == direct_eps(full, k);
      }
      ok = ok && evaluate_extended(part.complement, rest, full[j]) == direct_eps(full, n + 1);
    }
    prop.check(ok, [&] { return "xs=" + list_text(full); });
  }
  return prop.take();
}

PropertyResult vieta_bridge(Context& ctx) {
  Property prop("vieta-bridge");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t m = ctx.cycle_n(t, 0, ctx.config.max_n);
    const auto roots = ctx.rng.gaussians(m, kPartBound);
    const auto p = from_roots(roots);
    bool ok = p.coeffs().size() == m + 1;
    for (std::size_t k = 0; ok && k <= m; ++k) {
      const auto e = direct_eps(roots, k);
      ok = p.coeffs()[k] == (k % 2 == 0 ? e : -e);
    }
    for (const auto& r : roots) ok = ok && is_zero(eval(p, r));
    prop.check(ok, [&] { return "roots=" + list_text(roots); });
  }
  return prop.take();
}

PropertyResult incremental_insertion(Context& ctx) {
  Property prop("incremental-insertion");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t m = ctx.cycle_n(t, 0, ctx.config.max_n - 1);
    auto roots = ctx.rng.gaussians(m, kPartBound);
    const auto a = ctx.rng.gaussian(kPartBound);
    const auto b = ctx.rng.gaussian(kPartBound);
    const auto base = from_roots(roots);
    roots.push_back(a);
    bool ok = from_roots(roots) == insert_zero(base, a);
    ok = ok && insert_zero(insert_zero(base, a), b) == insert_zero(insert_zero(base, b), a);
    prop.check(ok, [&] { return "roots=" + list_text(roots) + " b=" + to_literal(b); });
  }
  return prop.take();
}

Poly1<ExactComplex> random_poly(Sampler& rng, std::size_t degree) {
  std::vector<ExactComplex> coeffs{rng.nonzero_gaussian(kPartBound)};
  for (std::size_t k = 0; k < degree; ++k) coeffs.push_back(rng.gaussian(kPartBound));
  return Poly1<ExactComplex>(std::move(coeffs));
}

PropertyResult deflation_roundtrip(Context& ctx) {
  Property prop("deflation-roundtrip");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const auto p = random_poly(ctx.rng, ctx.cycle_n(t, 0, ctx.config.max_n));
    const auto lambda = ctx.rng.gaussian(kPartBound);
    const auto d = deflate(insert_zero(p, lambda), lambda);
    prop.check(d.quotient == p && is_zero(d.remainder),
               [&] { return "p=" + to_string(p) + " lambda=" + to_literal(lambda); });
  }
  return prop.take();
}

PropertyResult float_insertion_residual(Context& ctx) {
  Property prop("float-insertion-residual");
  for (std::size_t t = 0; t < ctx.config.trials; ++t) {
    const std::size_t degree = ctx.cycle_n(t, 0, ctx.config.max_n);
    std::vector<FloatComplex> coeffs{{1.0, 0.0}};
    std::uniform_real_distribution<double> part(-5.0, 5.0);
    for (std::size_t k = 0; k < degree; ++k) coeffs.push_back({part(ctx.rng.engine()), part(ctx.rng.engine())});
    const FloatComplex lambda{part(ctx.rng.engine()) / 2.5, part(ctx.rng.engine()) / 2.5};
    const auto q = insert_zero(Poly1<FloatComplex>(coeffs), lambda);
    double scale = 0.0;
    for (const auto& c : q.coeffs()) scale = std::max(scale, magnitude(c));
    const double residual = magnitude(eval(q, lambda));
    prop.check(residual <= ctx.config.tolerance * (1.0 + scale),
               [&] { return "residual " + part_to_string(residual) + " at lambda=" + to_literal(lambda); });
  }
  return prop.take();
}

using PropertyFn = PropertyResult (*)(Context&);

constexpr PropertyFn kProperties[] = {
    ring_axioms,         wrap64_agreement,        recurrence_oracle, recurrence_entries,
    omit_identity,       permutation_invariance,  binomial_row,      homogeneity,
    alpha_embedding,     alpha_injective,         shift_generators,  embed_homomorphism,
    embed_evaluation,    mul_pointwise,           split_soundness,   omitted_index_partition,
    vieta_bridge,        incremental_insertion,   deflation_roundtrip,
    float_insertion_residual,
};

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.ok(); });
}

const PropertyResult* VerifyReport::find(std::string_view name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

VerifyReport run_verify(const VerifyConfig& config, const VerifyHooks& hooks) {
  if (config.max_n < 1 || config.max_n > kMaxVerifyN) {
    throw UsageError("--max-n must lie in 1.." + std::to_string(kMaxVerifyN));
  }
  if (config.trials < 1) throw UsageError("--trials must be at least 1");
  if (!(config.tolerance > 0.0)) throw UsageError("--tolerance must be positive");

  const TopRowFn top_row = hooks.top_row ? hooks.top_row : [](std::span<const ExactComplex> xs) {
    const auto table = build_table(xs);
    return std::vector<ExactComplex>(table.top_row().begin(), table.top_row().end());
  };

  VerifyReport report;
  std::uint64_t stream = 0;
  for (PropertyFn property : kProperties) {
    // Independent stream per property, so adding one does not reshuffle the rest.
    Sampler rng(config.seed ^ (0x9E3779B97F4A7C15ULL * ++stream));
    Context ctx{config, top_row, rng};
    report.properties.push_back(property(ctx));
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& p : report.properties) {
    if (p.ok()) {
      out << "PASS " << p.name << " (" << p.checked << " checks)\n";
    } else {
      ++failed;
      out << "FAIL " << p.name << " (" << p.failed << " of " << p.checked
          << " checks failed; first: " << p.first_failure << ")\n";
    }
  }
  if (failed == 0) {
    out << "all " << report.properties.size() << " properties passed\n";
  } else {
    out << failed << " of " << report.properties.size() << " properties failed\n";
  }
}

}  // namespace esym::cli

#include "esym/cli/cli.hpp"

#include "esym/cli/java_compat.hpp"
#include "esym/cli/verify.hpp"
#include "esym/esp.hpp"
#include "esym/polyzero.hpp"
#include "esym/serialize.hpp"
#include "esym/symalg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <type_traits>

namespace esym::cli {
namespace {

struct CommonFlags {
  std::string mode = "exact";
  bool json = false;
  double tolerance = kDefaultTolerance;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--mode", flags.mode, "Arithmetic mode: exact, wrap64 or float")
      ->check(CLI::IsMember({"exact", "wrap64", "float"}));
  cmd.add_flag("--json", flags.json, "Emit JSON instead of text");
  cmd.add_option("--tolerance", flags.tolerance, "Absolute tolerance for float-mode checks");
}

template <class F>
int with_mode(Mode mode, F&& f) {
  switch (mode) {
    case Mode::exact:
      return f(std::type_identity<ExactComplex>{});
    case Mode::wrap64:
      return f(std::type_identity<Wrap64Complex>{});
    case Mode::floating:
      return f(std::type_identity<FloatComplex>{});
  }
  return kExitUsage;
}

/// Splits on commas that are not inside a parenthesised "(a,b)" literal.
std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(std::move(current));
  return out;
}

template <ComplexScalar T>
std::vector<T> parse_values(const std::vector<std::string>& tokens) {
  std::vector<T> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) out.push_back(parse_scalar<T>(tok));
  return out;
}

template <ComplexScalar T>
std::string join_literals(std::span<const T> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_literal(values[i]);
  }
  return out;
}

template <ComplexScalar T>
void print_poly(const Poly1<T>& p, std::ostream& out) {
  out << "coefficients: " << join_literals(p.coeffs()) << '\n';
  out << "polynomial: " << to_string(p) << '\n';
}

template <ComplexScalar T>
void print_value_check(std::string_view label, const T& value, const CommonFlags& flags, std::ostream& out) {
  out << label << ": " << to_literal(value);
  if constexpr (std::is_same_v<T, FloatComplex>) {
    const bool within = magnitude(value) <= flags.tolerance;
    out << " (" << (within ? "within" : "exceeds") << " tolerance " << part_to_string(flags.tolerance) << ")";
  }
  out << '\n';
}

// ---------------------------------------------------------------------------
// Numeric subcommands

int cmd_eps(const std::vector<std::string>& tokens, const CommonFlags& flags, std::ostream& out) {
  return with_mode(parse_mode(flags.mode), [&]<class T>(std::type_identity<T>) {
    const auto xs = parse_values<T>(tokens);
    const auto table = build_table(std::span<const T>(xs));
    if (flags.json) {
      out << to_json(table).dump() << '\n';
      return kExitOk;
    }
    for (std::size_t i = 1; i <= table.size(); ++i) {
      out << "row " << i << ": " << join_literals(table.row(i)) << '\n';
    }
    return kExitOk;
  });
}

int cmd_from_roots(const std::vector<std::string>& tokens, const CommonFlags& flags, std::ostream& out) {
  return with_mode(parse_mode(flags.mode), [&]<class T>(std::type_identity<T>) {
    const auto roots = parse_values<T>(tokens);
    const auto p = from_roots(std::span<const T>(roots));
    if (flags.json) {
      out << to_json(p).dump() << '\n';
      return kExitOk;
    }
    print_poly(p, out);
    if constexpr (std::is_same_v<T, FloatComplex>) {
      FloatComplex worst{};
      for (const auto& r : roots) {
        const auto v = eval(p, r);
        if (magnitude(v) > magnitude(worst)) worst = v;
      }
      if (!roots.empty()) print_value_check("largest value at a root", worst, flags, out);
    }
    return kExitOk;
  });
}

struct InsertArgs {
  std::string coeffs;
  std::string lambda;
  std::string x;
  bool mul_linear = false;
};

int cmd_insert_zero(const InsertArgs& args, const CommonFlags& flags, std::ostream& out) {
  if (args.mul_linear == args.x.empty() || args.mul_linear != args.lambda.empty()) {
    throw UsageError("insert-zero takes either --lambda L, or --mul-linear with --x X");
  }
  return with_mode(parse_mode(flags.mode), [&]<class T>(std::type_identity<T>) {
    const Poly1<T> p(parse_values<T>(split_list(args.coeffs)));
    T new_zero;
    Poly1<T> result;
    if (args.mul_linear) {
      const T x = parse_scalar<T>(args.x);
      result = mul_linear(p, x);
      new_zero = -x;
    } else {
      new_zero = parse_scalar<T>(args.lambda);
      result = insert_zero(p, new_zero);
    }
    if (flags.json) {
      out << to_json(result).dump() << '\n';
      return kExitOk;
    }
    print_poly(result, out);
    out << "new zero: " << to_literal(new_zero) << '\n';
    print_value_check("value at new zero", eval(result, new_zero), flags, out);
    return kExitOk;
  });
}

int cmd_deflate(const std::string& coeffs, const std::string& lambda, const CommonFlags& flags,
                std::ostream& out) {
  return with_mode(parse_mode(flags.mode), [&]<class T>(std::type_identity<T>) {
    const Poly1<T> p(parse_values<T>(split_list(coeffs)));
    const auto d = deflate(p, parse_scalar<T>(lambda));
    if (flags.json) {
      out << nlohmann::json{{"quotient", to_json(d.quotient)}, {"remainder", scalar_to_json(d.remainder)}}.dump()
          << '\n';
      return kExitOk;
    }
    print_poly(d.quotient, out);
    out << "remainder: " << to_literal(d.remainder) << '\n';
    return kExitOk;
  });
}

int cmd_eval(const std::string& coeffs, const std::string& at, const CommonFlags& flags, std::ostream& out) {
  return with_mode(parse_mode(flags.mode), [&]<class T>(std::type_identity<T>) {
    const Poly1<T> p(parse_values<T>(split_list(coeffs)));
    const T value = eval(p, parse_scalar<T>(at));
    if (flags.json) {
      out << nlohmann::json{{"value", scalar_to_json(value)}}.dump() << '\n';
    } else {
      out << "value: " << to_literal(value) << '\n';
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// Generator-algebra subcommands (exact coefficients only)

struct SymArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string poly;
  std::vector<std::string> values;
};

void print_genpoly(const GenPoly& p, bool json, std::ostream& out) {
  if (json) {
    out << nlohmann::json{{"generators", p.ambient()}, {"poly", to_string(p)}}.dump() << '\n';
  } else {
    out << to_string(p) << '\n';
  }
}

int cmd_shift(const SymArgs& a, const CommonFlags& flags, std::ostream& out) {
  print_genpoly(shift(parse_genpoly(a.poly, a.n)), flags.json, out);
  return kExitOk;
}

int cmd_embed(const SymArgs& a, const CommonFlags& flags, std::ostream& out) {
  print_genpoly(embed(parse_genpoly(a.poly, a.n)), flags.json, out);
  return kExitOk;
}

int cmd_alpha(const SymArgs& a, const CommonFlags& flags, std::ostream& out) {
  print_genpoly(embed_generator(a.k, a.n), flags.json, out);
  return kExitOk;
}

int cmd_partition(const SymArgs& a, const CommonFlags& flags, std::ostream& out) {
  const auto part = generator_partition(a.n);
  if (flags.json) {
    nlohmann::json image = nlohmann::json::array();
    for (const auto& g : part.image) image.push_back(to_string(g));
    out << nlohmann::json{{"generators", a.n + 1}, {"image", image}, {"complement", to_string(part.complement)}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (std::size_t k = 1; k <= a.n; ++k) out << "e" << k << " -> " << to_string(part.image[k - 1]) << '\n';
  out << "new: " << to_string(part.complement) << '\n';
  return kExitOk;
}

int cmd_split(const SymArgs& a, const CommonFlags& flags, std::ostream& out) {
  const auto split = split_by_top_generator(parse_genpoly(a.poly, a.n));
  if (flags.json) {
    out << nlohmann::json{{"without_top", to_string(split.without_top)}, {"with_top", to_string(split.with_top)}}
               .dump()
        << '\n';
  } else {
    out << "without e" << a.n << ": " << to_string(split.without_top) << '\n';
    out << "with e" << a.n << ": " << to_string(split.with_top) << '\n';
  }
  return kExitOk;
}

int cmd_eval_gen(const SymArgs& a, const CommonFlags& flags, std::ostream& out) {
  const auto xs = parse_values<ExactComplex>(a.values);
  const auto value = evaluate(parse_genpoly(a.poly, a.n), xs);
  if (flags.json) {
    out << nlohmann::json{{"value", scalar_to_json(value)}}.dump() << '\n';
  } else {
    out << "value: " << to_literal(value) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact elementary symmetric polynomial toolkit", "esym"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<std::string> values;
  InsertArgs insert;
  std::string coeffs;
  std::string lambda;
  std::string at;
  SymArgs sym;
  VerifyConfig verify;

  auto* java = app.add_subcommand("java-compat", "Replay the original interactive program on stdin");

  auto* eps = app.add_subcommand("eps", "Print the elementary symmetric table of the given values");
  add_common_flags(*eps, flags);
  eps->add_option("values", values, "Complex values: a, bi, a+bi, a-bi or (a,b)")->required();

  auto* roots = app.add_subcommand("from-roots", "Monic polynomial with the given zeroes");
  add_common_flags(*roots, flags);
  roots->add_option("roots", values, "Zeroes");

  auto* ins = app.add_subcommand("insert-zero", "Add a zero to a polynomial");
  add_common_flags(*ins, flags);
  ins->add_option("--coeffs", insert.coeffs, "Comma-separated coefficients, leading first")->required();
  ins->add_option("--lambda", insert.lambda, "Zero to add: multiply by (z - lambda)");
  ins->add_flag("--mul-linear", insert.mul_linear, "Multiply by (z + x) instead");
  ins->add_option("--x", insert.x, "The x of (z + x), with --mul-linear");

  auto* defl = app.add_subcommand("deflate", "Divide by (z - lambda)");
  add_common_flags(*defl, flags);
  defl->add_option("--coeffs", coeffs, "Comma-separated coefficients, leading first")->required();
  defl->add_option("--lambda", lambda, "Divisor zero")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a polynomial");
  add_common_flags(*ev, flags);
  ev->add_option("--coeffs", coeffs, "Comma-separated coefficients, leading first")->required();
  ev->add_option("--at", at, "Point of evaluation")->required();

  auto* ver = app.add_subcommand("verify", "Run the randomised identity checks");
  ver->add_option("--max-n", verify.max_n, "Largest variable count (at most 12)");
  ver->add_option("--trials", verify.trials, "Random instances per property");
  ver->add_option("--seed", verify.seed, "Random seed");
  ver->add_option("--tolerance", verify.tolerance, "Tolerance for the float-mode check");

  auto* sh = app.add_subcommand("shift", "Lower every generator index by one");
  sh->add_option("--n", sym.n, "Generator count")->required();
  sh->add_option("poly", sym.poly, "Generator polynomial, e.g. \"e2*e3 + 5\"")->required();
  sh->add_flag("--json", flags.json);

  auto* emb = app.add_subcommand("embed", "Embed into the algebra with one more variable");
  emb->add_option("--n", sym.n, "Generator count")->required();
  emb->add_option("poly", sym.poly, "Generator polynomial")->required();
  emb->add_flag("--json", flags.json);

  auto* alpha = app.add_subcommand("alpha", "Image of a single generator under the embedding");
  alpha->add_option("--n", sym.n, "Generator count")->required();
  alpha->add_option("--k", sym.k, "Generator index")->required();
  alpha->add_flag("--json", flags.json);

  auto* part = app.add_subcommand("partition", "Generators of the extended algebra");
  part->add_option("--n", sym.n, "Generator count of the smaller algebra")->required();
  part->add_flag("--json", flags.json);

  auto* spl = app.add_subcommand("split", "Separate the monomials containing the top generator");
  spl->add_option("--n", sym.n, "Generator count, including the top generator")->required();
  spl->add_option("poly", sym.poly, "Generator polynomial")->required();
  spl->add_flag("--json", flags.json);

  auto* evg = app.add_subcommand("eval-gen", "Evaluate a generator polynomial at concrete variables");
  evg->add_option("--n", sym.n, "Generator count")->required();
  evg->add_option("poly", sym.poly, "Generator polynomial")->required();
  evg->add_option("values", sym.values, "Variable values")->required();
  evg->add_flag("--json", flags.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (java->parsed()) return run_java_compat(in, out, err);
    if (eps->parsed()) return cmd_eps(values, flags, out);
    if (roots->parsed()) return cmd_from_roots(values, flags, out);
    if (ins->parsed()) return cmd_insert_zero(insert, flags, out);
    if (defl->parsed()) return cmd_deflate(coeffs, lambda, flags, out);
    if (ev->parsed()) return cmd_eval(coeffs, at, flags, out);
    if (ver->parsed()) {
      const auto report = run_verify(verify);
      print_report(report, out);
      return report.ok() ? kExitOk : kExitFailure;
    }
    if (sh->parsed()) return cmd_shift(sym, flags, out);
    if (emb->parsed()) return cmd_embed(sym, flags, out);
    if (alpha->parsed()) return cmd_alpha(sym, flags, out);
    if (part->parsed()) return cmd_partition(sym, flags, out);
    if (spl->parsed()) return cmd_split(sym, flags, out);
    if (evg->parsed()) return cmd_eval_gen(sym, flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace esym::cli

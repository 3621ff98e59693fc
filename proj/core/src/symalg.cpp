#include "esym/symalg.hpp"

#include "esym/esp.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <unordered_set>

namespace esym {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw UsageError("duplicate variable name '" + name + "'");
  }
}

bool VarSet::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

VarSet merge_varsets(const VarSet& a, const VarSet& b) {
  std::vector<std::string> names(a.names().begin(), a.names().end());
  for (const auto& name : b.names()) {
    if (!a.contains(name)) names.push_back(name);
  }
  return VarSet(std::move(names));
}

// ---------------------------------------------------------------------------
// GenMonomial

GenMonomial::GenMonomial(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
  if (std::find(factors_.begin(), factors_.end(), std::size_t{0}) != factors_.end()) {
    throw UsageError("generator indices start at 1");
  }
  std::sort(factors_.begin(), factors_.end());
}

bool GenMonomial::contains(std::size_t k) const {
  return std::binary_search(factors_.begin(), factors_.end(), k);
}

GenMonomial operator*(const GenMonomial& a, const GenMonomial& b) {
  GenMonomial out;
  out.factors_.reserve(a.degree() + b.degree());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
             std::back_inserter(out.factors_));
  return out;
}

std::strong_ordering operator<=>(const GenMonomial& a, const GenMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                b.factors_.begin(), b.factors_.end());
}

// ---------------------------------------------------------------------------
// GenPoly

GenPoly GenPoly::constant(std::size_t ambient, const ExactComplex& c) {
  return term(ambient, GenMonomial(), c);
}

GenPoly GenPoly::generator(std::size_t ambient, std::size_t k) {
  return term(ambient, GenMonomial::generator(k), ExactComplex::one());
}

GenPoly GenPoly::term(std::size_t ambient, const GenMonomial& m, const ExactComplex& c) {
  GenPoly p(ambient);
  p.add_term(m, c);
  return p;
}

std::size_t GenPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

ExactComplex GenPoly::coefficient(const GenMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactComplex::zero() : it->second;
}

void GenPoly::add_term(const GenMonomial& m, const ExactComplex& c) {
  if (m.max_index() > ambient_) {
    throw UsageError("generator e" + std::to_string(m.max_index()) + " outside e1..e" +
                     std::to_string(ambient_));
  }
  if (esym::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (esym::is_zero(it->second)) terms_.erase(it);
  }
}

namespace {

void require_same_ambient(const GenPoly& p, const GenPoly& q) {
  if (p.ambient() != q.ambient()) {
    throw UsageError("generator count mismatch: " + std::to_string(p.ambient()) + " vs " +
                     std::to_string(q.ambient()));
  }
}

}  // namespace

GenPoly gp_add(const GenPoly& p, const GenPoly& q) {
  require_same_ambient(p, q);
  GenPoly out = p;
  for (const auto& [m, c] : q.terms()) out.add_term(m, c);
  return out;
}

GenPoly gp_neg(const GenPoly& p) { return gp_scale(p, -ExactComplex::one()); }

GenPoly gp_sub(const GenPoly& p, const GenPoly& q) { return gp_add(p, gp_neg(q)); }

GenPoly gp_scale(const GenPoly& p, const ExactComplex& c) {
  GenPoly out(p.ambient());
  for (const auto& [m, coef] : p.terms()) out.add_term(m, coef * c);
  return out;
}

GenPoly gp_mul(const GenPoly& p, const GenPoly& q) {
  require_same_ambient(p, q);
  GenPoly out(p.ambient());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) out.add_term(mp * mq, cp * cq);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shift and embedding

GenPoly shift(const GenPoly& p) {
  GenPoly out(p.ambient());
  for (const auto& [m, c] : p.terms()) {
    if (m.is_constant()) continue;
    std::vector<std::size_t> lowered;
    lowered.reserve(m.degree());
    for (std::size_t k : m.factors()) {
      if (k > 1) lowered.push_back(k - 1);  // e_0 = 1 drops out
    }
    out.add_term(GenMonomial(std::move(lowered)), c);
  }
  return out;
}

GenPoly embed_generator(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw UsageError("generator index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  const std::size_t top = n + 1;
  GenPoly out = GenPoly::generator(top, k);
  std::vector<std::size_t> lowered{top};
  if (k > 1) lowered.push_back(k - 1);
  out.add_term(GenMonomial(std::move(lowered)), ExactComplex::one());
  return out;
}

GenPoly embed(const GenPoly& p) {
  const std::size_t n = p.ambient();
  std::vector<GenPoly> images;
  images.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) images.push_back(embed_generator(k, n));

  GenPoly out(n + 1);
  for (const auto& [m, c] : p.terms()) {
    GenPoly product = GenPoly::constant(n + 1, c);
    for (std::size_t k : m.factors()) product = gp_mul(product, images[k - 1]);
    out = gp_add(out, product);
  }
  return out;
}

GeneratorPartition generator_partition(std::size_t n) {
  if (n < 1) throw UsageError("generator partition needs at least one generator");
  GeneratorPartition part{{}, GenPoly::term(n + 1, GenMonomial({n, n + 1}), ExactComplex::one())};
  part.image.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) part.image.push_back(embed_generator(k, n));
  return part;
}

TopSplit split_by_top_generator(const GenPoly& p) {
  const std::size_t top = p.ambient();
  if (top < 1) throw UsageError("cannot split a polynomial over zero generators");
  TopSplit split{GenPoly(top), GenPoly(top)};
  for (const auto& [m, c] : p.terms()) {
    (m.contains(top) ? split.with_top : split.without_top).add_term(m, c);
  }
  return split;
}

// ---------------------------------------------------------------------------
// Evaluation

ExactComplex evaluate_generators(const GenPoly& p, std::span<const ExactComplex> values) {
  if (values.size() != p.ambient()) {
    throw UsageError("expected " + std::to_string(p.ambient()) + " generator values, got " +
                     std::to_string(values.size()));
  }
  ExactComplex total;
  for (const auto& [m, c] : p.terms()) {
    ExactComplex product = c;
    for (std::size_t k : m.factors()) product = product * values[k - 1];
    total += product;
  }
  return total;
}

ExactComplex evaluate(const GenPoly& p, std::span<const ExactComplex> xs) {
  if (xs.size() != p.ambient()) {
    throw UsageError("expected " + std::to_string(p.ambient()) + " variable values, got " +
                     std::to_string(xs.size()));
  }
  if (xs.empty()) return evaluate_generators(p, {});
  const auto table = build_table(xs);
  return evaluate_generators(p, table.top_row());
}

ExactComplex evaluate_extended(const GenPoly& p, std::span<const ExactComplex> xs,
                               const ExactComplex& y) {
  if (p.ambient() != xs.size() + 1) {
    throw UsageError("expected a polynomial over " + std::to_string(xs.size() + 1) +
                     " generators, got " + std::to_string(p.ambient()));
  }
  std::vector<ExactComplex> values;
  values.reserve(xs.size() + 1);
  if (!xs.empty()) {
    const auto table = build_table(xs);
    values.assign(table.top_row().begin(), table.top_row().end());
  }
  values.push_back(y);
  return evaluate_generators(p, values);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string monomial_text(const GenMonomial& m) {
  std::string out;
  const auto f = m.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += '*';
    out += "e" + std::to_string(f[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(const GenPoly& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const std::string re = part_to_string(c.re);
    const std::string im = part_to_string(c.im);
    bool negative = false;
    std::string coef;
    if (re != "0" && im != "0") {
      coef = "(" + literal_from_parts(re, im) + ")";
    } else {
      coef = literal_from_parts(re, im);
      negative = coef.front() == '-';
      if (negative) coef.erase(0, 1);
    }

    std::string term;
    if (m.is_constant()) {
      term = coef;
    } else if (coef == "1") {
      term = monomial_text(m);
    } else {
      term = coef + "*" + monomial_text(m);
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

namespace {

class GenPolyParser {
 public:
  GenPolyParser(std::string_view text, std::size_t ambient) : text_(text), ambient_(ambient) {}

  GenPoly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    GenPoly out(ambient_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = next() == '-';
      skip_space();
    }
    while (true) {
      GenPoly t = parse_term();
      out = negative ? gp_sub(out, t) : gp_add(out, t);
      skip_space();
      if (at_end()) break;
      const char op = next();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_space();
    }
    return out;
  }

 private:
  GenPoly parse_term() {
    ExactComplex coef = ExactComplex::one();
    std::vector<std::size_t> factors;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (c == 'e') {
        ++pos_;
        const std::size_t index = parse_digits();
        std::size_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          power = parse_digits();
        }
        if (index < 1 || index > ambient_) {
          fail("generator e" + std::to_string(index) + " outside e1..e" + std::to_string(ambient_));
        }
        factors.insert(factors.end(), power, index);
      } else if (c == '(') {
        const auto close = text_.find(')', pos_);
        if (close == std::string_view::npos) fail("unbalanced '('");
        const std::string_view inner = text_.substr(pos_ + 1, close - pos_ - 1);
        const std::string literal = inner.find(',') != std::string_view::npos
                                        ? "(" + std::string(inner) + ")"
                                        : std::string(inner);
        coef = coef * parse_scalar<ExactComplex>(literal);
        pos_ = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == 'i') ++pos_;
        coef = coef * parse_scalar<ExactComplex>(text_.substr(start, pos_ - start));
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return GenPoly::term(ambient_, GenMonomial(std::move(factors)), coef);
  }

  std::size_t parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 9) fail("number too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse generator polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

GenPoly parse_genpoly(std::string_view text, std::size_t ambient) {
  return GenPolyParser(text, ambient).parse();
}

}  // namespace esym

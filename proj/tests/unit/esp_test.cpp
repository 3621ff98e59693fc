#include "esym/esp.hpp"
#include "esym/sampling.hpp"
#include "esym/serialize.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

namespace esym {
namespace {

using testing::gi;
using testing::reals;
using testing::subset_eps;

std::vector<ExactComplex> top(const EpsTable<ExactComplex>& t) {
  const auto r = t.top_row();
  return {r.begin(), r.end()};
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt c = 1;
  for (unsigned j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

TEST(EspTest, AllOnesGiveBinomialRow) {
  const auto t = build_table(reals({1, 1, 1, 1}));
  EXPECT_EQ(top(t), reals({4, 6, 4, 1}));
  EXPECT_EQ(query(t, 4, 2), gi(6));
}

TEST(EspTest, TwoImaginaryUnits) {
  const auto t = build_table(std::vector<ExactComplex>{gi(0, 1), gi(0, 1)});
  EXPECT_EQ(top(t), (std::vector<ExactComplex>{gi(0, 2), gi(-1)}));
}

TEST(EspTest, RowsArePrefixTables) {
  const auto t = build_table(reals({1, 2, 3}));
  EXPECT_EQ(std::vector(t.row(1).begin(), t.row(1).end()), reals({1}));
  EXPECT_EQ(std::vector(t.row(2).begin(), t.row(2).end()), reals({3, 2}));
  EXPECT_EQ(std::vector(t.row(3).begin(), t.row(3).end()), reals({6, 11, 6}));
}

TEST(EspTest, QueryConventions) {
  const auto t = build_table(reals({2, 5, 7}));
  EXPECT_EQ(query(t, 3, 0), gi(1));
  EXPECT_EQ(query(t, 3, 5), gi(0));
  EXPECT_EQ(query(t, 1, 2), gi(0));
  EXPECT_THROW(query(t, 0, 1), UsageError);
  EXPECT_THROW(query(t, 4, 1), UsageError);
}

TEST(EspTest, EmptyAssignmentIsRejected) {
  EXPECT_THROW(build_table(std::vector<ExactComplex>{}), UsageError);
}

TEST(EspTest, DirectExamples) {
  EXPECT_EQ(direct_eps(reals({1, 2, 3}), 2), gi(11));
  EXPECT_EQ(direct_eps(reals({1, 2, 3}), 0), gi(1));
  EXPECT_EQ(direct_eps(reals({1, 2, 3}), 4), gi(0));
  EXPECT_EQ(direct_eps(std::vector<ExactComplex>{}, 0), gi(1));
}

TEST(EspTest, ThirdOfFourVariablesHasFourTerms) {
  // Distinct powers of ten make every monomial visible as a separate digit.
  const auto xs = reals({1, 10, 100, 1000});
  // x1x2x3 + x1x2x4 + x1x3x4 + x2x3x4
  EXPECT_EQ(direct_eps(xs, 3), gi(1000 + 10000 + 100000 + 1000000));
  EXPECT_EQ(direct_eps(reals({1, 1, 1, 1}), 3), gi(4));
}

TEST(EspTest, TableMatchesSubsetOracle) {
  Sampler rng(21);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto xs = rng.gaussians(n, 9);
      const auto table = build_table(xs);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto expected = subset_eps(xs, k);
        ASSERT_EQ(table.at(n, k), expected) << "n=" << n << " k=" << k;
        ASSERT_EQ(direct_eps(xs, k), expected) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(EspTest, InteriorEntriesSatisfyRecurrence) {
  Sampler rng(22);
  for (int t = 0; t < 50; ++t) {
    const auto xs = rng.gaussians(rng.index(2, 9), 9);
    const auto table = build_table(xs);
    for (std::size_t i = 2; i <= xs.size(); ++i) {
      for (std::size_t k = 1; k <= i; ++k) {
        ASSERT_EQ(table.at(i, k), table.at(i - 1, k) + table.at(i - 1, k - 1) * xs[i - 1]);
      }
    }
  }
}

TEST(EspTest, OmitIdentityExamples) {
  const auto p = eps_omit_identity(reals({1, 2, 3}), 2, 2);
  EXPECT_EQ(p.lhs, gi(11));
  EXPECT_EQ(p.rhs, gi(11));
  const auto single = eps_omit_identity(std::vector<ExactComplex>{gi(4, -3)}, 1, 1);
  EXPECT_EQ(single.lhs, gi(4, -3));
  EXPECT_EQ(single.rhs, gi(4, -3));
  const auto topdeg = eps_omit_identity(reals({1, 1, 1, 1}), 3, 4);
  EXPECT_EQ(topdeg.lhs, gi(1));
  EXPECT_EQ(topdeg.rhs, gi(1));
  EXPECT_THROW(eps_omit_identity(reals({1, 2}), 0, 1), UsageError);
  EXPECT_THROW(eps_omit_identity(reals({1, 2}), 3, 1), UsageError);
}

TEST(EspTest, OmitIdentityHoldsEverywhere) {
  Sampler rng(23);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto xs = rng.gaussians(n, 9);
      for (std::size_t i0 = 1; i0 <= n; ++i0) {
        for (std::size_t k = 0; k <= n + 1; ++k) {
          const auto p = eps_omit_identity(xs, i0, k);
          ASSERT_EQ(p.lhs, p.rhs) << "n=" << n << " i0=" << i0 << " k=" << k;
        }
      }
    }
  }
}

TEST(EspTest, TopRowIsPermutationInvariant) {
  Sampler rng(24);
  for (int t = 0; t < 40; ++t) {
    auto xs = rng.gaussians(rng.index(1, 8), 9);
    const auto expected = top(build_table(xs));
    for (int p = 0; p < 10; ++p) {
      rng.shuffle(xs.begin(), xs.end());
      ASSERT_EQ(top(build_table(xs)), expected);
    }
  }
}

TEST(EspTest, BinomialSpecialization) {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto t = build_table(std::vector<ExactComplex>(n, ExactComplex::one()));
    for (unsigned k = 0; k <= n; ++k) {
      ASSERT_EQ(t.at(n, k), (ExactComplex{binomial(n, k), 0})) << "n=" << n << " k=" << k;
    }
  }
}

TEST(EspTest, Homogeneity) {
  Sampler rng(25);
  for (int t = 0; t < 50; ++t) {
    const auto xs = rng.gaussians(rng.index(1, 8), 9);
    const auto c = rng.gaussian(5);
    std::vector<ExactComplex> scaled;
    for (const auto& x : xs) scaled.push_back(c * x);
    const auto base = build_table(xs);
    const auto stretched = build_table(scaled);
    ExactComplex power = ExactComplex::one();
    for (std::size_t k = 1; k <= xs.size(); ++k) {
      power = power * c;
      ASSERT_EQ(stretched.at(xs.size(), k), power * base.at(xs.size(), k));
    }
  }
}

TEST(EspTest, ModesAgreeOnSmallInputs) {
  const std::vector<Wrap64Complex> w{{1, 2}, {3, 4}, {-5, 6}};
  const std::vector<FloatComplex> f{{1, 2}, {3, 4}, {-5, 6}};
  const auto exact = build_table(std::vector<ExactComplex>{gi(1, 2), gi(3, 4), gi(-5, 6)});
  const auto tw = build_table(w);
  const auto tf = build_table(f);
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_EQ(tw.at(3, k), to_wrap64(exact.at(3, k)));
    EXPECT_TRUE(approx_equal(tf.at(3, k), to_float(exact.at(3, k))));
  }
}

TEST(EspTest, JsonSchema) {
  const auto j = to_json(build_table(reals({1, 2, 3})));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["rows"].dump(), R"([[["1","0"]],[["3","0"],["2","0"]],[["6","0"],["11","0"],["6","0"]]])");
  const auto w = to_json(build_table(std::vector<Wrap64Complex>{{1, 0}}));
  EXPECT_EQ(w["mode"], "wrap64");
}

}  // namespace
}  // namespace esym

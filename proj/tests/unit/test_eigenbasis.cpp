#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <cherednik/eigenbasis.hpp>

using namespace cherednik;
namespace {

constexpr double pi = std::numbers::pi;

// Brute force over a window: the two clauses of the order, enumerated directly.
std::vector<int> lower_set_brute(int n) {
  std::vector<int> out;
  for (int j = -std::abs(n) - 2; j <= std::abs(n) + 2; ++j) {
    const int d = std::abs(n) - std::abs(j);
    if ((d > 0 && d % 2 == 0) || (d == 0 && n < j)) out.push_back(j);
  }
  return out;
}

} // namespace

TEST(ExpSum, ArithmeticAndMaps) {
  const TrigPoly a{{1, 2.0}, {-2, cplx(0, 1)}};
  const TrigPoly b{{1, -2.0}, {3, 1.0}};
  const TrigPoly s = a + b;
  EXPECT_EQ(s[1], cplx(0.0));
  EXPECT_EQ(s[3], cplx(1.0));
  EXPECT_EQ((a * b)[2], cplx(-4.0));
  EXPECT_EQ((a * b)[-1], cplx(0, -2));
  EXPECT_EQ(a.shifted(2)[3], cplx(2.0));
  EXPECT_EQ(a.negated_frequencies()[2], cplx(0, 1));
  EXPECT_EQ(derivative(a)[1], cplx(0, 2));
  TrigPoly p = s;
  p.prune();
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(a.max_abs_frequency(), 2);
  EXPECT_NEAR(std::abs(evaluate(a, 0.3) - (2.0 * std::polar(1.0, 0.3) + cplx(0, 1) * std::polar(1.0, -0.6))), 0.0, 1e-15);
}

TEST(LowerSet, KnownValues) {
  EXPECT_EQ(lower_set(2), (std::vector<int>{0}));
  EXPECT_EQ(lower_set(-1), (std::vector<int>{1}));
  EXPECT_EQ(lower_set(-2), (std::vector<int>{0, 2}));
  EXPECT_TRUE(lower_set(1).empty());
}

TEST(LowerSet, MatchesDefinitionAndIsSorted) {
  for (int n = -15; n <= 15; ++n) {
    const auto got = lower_set(n);
    EXPECT_EQ(got, lower_set_brute(n)) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Eigenvalue, KnownValues) {
  EXPECT_DOUBLE_EQ(eigenvalue(1, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(eigenvalue(0, 0.7), -0.7);
  EXPECT_DOUBLE_EQ(eigenvalue(-2, 1.0), -3.0);
}

TEST(CherednikApply, KnownValues) {
  for (double k : {0.0, 0.5, 2.0}) {
    const TrigPoly r = cherednik_apply(TrigPoly::monomial(0), k);
    EXPECT_EQ(coefficient_distance(r, TrigPoly::monomial(0, -k)), 0.0);
  }
  EXPECT_LE(coefficient_distance(cherednik_apply(TrigPoly::monomial(1), 1.0), TrigPoly::monomial(1, 2.0)), 1e-15);
  const TrigPoly em1{{-1, 1.0}, {1, 0.5}};
  EXPECT_LE(coefficient_distance(cherednik_apply(em1, 1.0), em1 * cplx(-2.0)), 1e-15);
}

TEST(CherednikApply, IsLinear) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> c;
  TrigPoly f, g;
  for (int j = -5; j <= 5; ++j) f.set(j, cplx(c(rng), c(rng))), g.set(j, cplx(c(rng), c(rng)));
  const cplx a(0.3, -1.2);
  const double k = 0.8;
  EXPECT_LE(coefficient_distance(cherednik_apply(f * a + g, k), cherednik_apply(f, k) * a + cherednik_apply(g, k)), 1e-13);
}

TEST(CherednikApply, MatchesPointwiseOperator) {
  // T f(z) = f'(z) + 2k (f(z) - f(-z)) / (1 - e^{-2z}) - k f(z) at z = it.
  const TrigPoly f{{-3, 0.4}, {-1, 1.0}, {0, -0.2}, {2, cplx(0.5, 0.1)}};
  const double k = 1.3, t = 0.7;
  const cplx z(0.0, t);
  auto F = [&](cplx w) {
    cplx s = 0;
    for (const auto& [j, c] : f) s += c * std::exp(double(j) * w);
    return s;
  };
  auto dF = [&](cplx w) {
    cplx s = 0;
    for (const auto& [j, c] : f) s += c * double(j) * std::exp(double(j) * w);
    return s;
  };
  const cplx direct = dF(z) + 2.0 * k * (F(z) - F(-z)) / (1.0 - std::exp(-2.0 * z)) - k * F(z);
  EXPECT_NEAR(std::abs(evaluate(cherednik_apply(f, k), t) - direct), 0.0, 1e-12);
}

TEST(Construct, KnownValues) {
  const MomentTable t1(1.0, 8), t0(0.0, 8);
  for (double k : {0.0, 0.5, 3.0}) {
    const MomentTable t(k, 4);
    EXPECT_EQ(construct(1, k, t).poly, TrigPoly::monomial(1));
  }
  const auto em1 = construct(-1, 1.0, t1);
  EXPECT_NEAR(std::abs(em1.poly[-1] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(em1.poly[1] - 0.5), 0.0, 1e-12);
  for (int n = -4; n <= 4; ++n) {
    const auto e = construct(n, 0.0, t0);
    EXPECT_EQ(e.poly[n], cplx(1.0));
    for (const auto& [j, c] : e.poly)
      if (j != n) EXPECT_EQ(c, cplx(0.0)) << "n=" << n << " j=" << j;
  }
}

TEST(Construct, ClosedFormsAtSmallIndex) {
  for (double k : {0.25, 0.5, 1.0, 2.5}) {
    const MomentTable t(k, 8);
    const auto em1 = construct(-1, k, t);
    EXPECT_NEAR(em1.poly[1].real(), k / (1 + k), 1e-12);
    const auto e2 = construct(2, k, t);
    EXPECT_NEAR(e2.poly[0].real(), k / (1 + k), 1e-12);
  }
}

TEST(Construct, SingularGramIsNumericalFailure) {
  // A zero moment table makes every Gram system singular.
  const auto t = MomentTable::from_values(0.5, std::vector<double>(9, 0.0));
  EXPECT_THROW(construct(-2, 0.5, t), numerical_failure);
}

TEST(Construct, MissingMomentsAreInvalidInput) {
  const MomentTable t(0.5, 1);
  EXPECT_THROW(construct(-3, 0.5, t), invalid_input);
}

TEST(BuildBasis, KnownValues) {
  const Basis b0 = build_basis(0, 0.0);
  ASSERT_EQ(b0.entries().size(), 2u);
  EXPECT_EQ(b0.poly(0), TrigPoly::monomial(0));
  EXPECT_EQ(b0.poly(1), TrigPoly::monomial(1));
  EXPECT_NEAR(b0.at(0).norm_sq, 2 * pi, 1e-14);
  EXPECT_NEAR(b0.at(1).norm_sq, 2 * pi, 1e-14);

  const Basis b2 = build_basis(2, 1.0);
  EXPECT_EQ(b2.entries().size(), 6u);
  for (const auto& [n, e] : b2.entries()) EXPECT_LE(eigen_residual(e), 1e-9);

  const Basis z = build_basis(2, 0.0);
  for (const auto& [n, e] : z.entries()) EXPECT_EQ(coefficient_distance(e.poly, TrigPoly::monomial(n)), 0.0);
}

TEST(BuildBasis, RejectsBadInputAndMissingIndex) {
  EXPECT_THROW(build_basis(-1, 1.0), invalid_input);
  EXPECT_THROW(build_basis(1, -1.0), invalid_input);
  const Basis b = build_basis(1, 1.0);
  EXPECT_THROW(b.at(5), invalid_input);
  EXPECT_FALSE(b.contains(-2));
}

class BasisSweep : public ::testing::TestWithParam<double> {};

TEST_P(BasisSweep, EigenOrthogonalityRealnessSymmetry) {
  const double k = GetParam();
  const Basis b = build_basis_range(-12, 12, k, 11);
  const auto chk = check_basis(b);
  EXPECT_LE(chk.max_eigen_residual, 1e-9);
  EXPECT_LE(chk.max_orthogonality, 1e-9);
  for (const auto& [n, e] : b.entries()) {
    EXPECT_EQ(e.poly[n], cplx(1.0));
    EXPECT_GT(e.norm_sq, 0.0);
    for (const auto& [j, c] : e.poly) {
      EXPECT_LE(std::abs(c.imag()), 1e-12);
      if (j != n) {
        const auto ls = lower_set(n);
        EXPECT_TRUE(std::binary_search(ls.begin(), ls.end(), j)) << "n=" << n << " j=" << j;
      }
    }
  }
  for (int N = 0; N <= 11; ++N)
    EXPECT_NEAR(b.at(-N).norm_sq / b.at(N + 1).norm_sq, 1.0, 1e-10) << "N=" << N;
}

INSTANTIATE_TEST_SUITE_P(K, BasisSweep, ::testing::Values(0.0, 0.25, 0.5, 1.0, 2.5));

TEST(BuildBasis, DegeneratesContinuouslyAsKVanishes) {
  const Basis b = build_basis(8, 1e-6);
  for (const auto& [n, e] : b.entries())
    for (const auto& [j, c] : e.poly)
      if (j != n) EXPECT_LE(std::abs(c), 1e-4);
}

TEST(BuildBasis, DeterministicAcrossRuns) {
  const Basis a = build_basis(5, 0.7), b = build_basis(5, 0.7);
  for (const auto& [n, e] : a.entries()) {
    EXPECT_EQ(e.poly, b.poly(n));
    EXPECT_EQ(e.norm_sq, b.at(n).norm_sq);
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "schurid/errors.hpp"
#include "schurid/identity.hpp"

using namespace schurid;

namespace {

BigRational q(const CoefficientValue& v) { return std::get<BigRational>(v); }
RationalFunction f(const CoefficientValue& v) { return std::get<RationalFunction>(v); }

std::vector<ExponentVector> vectors_up_to(std::size_t len, int degree) {
  std::vector<ExponentVector> out;
  std::vector<int> k(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == len) {
      out.emplace_back(k);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace

TEST(Coefficients, LhsExamples) {
  EXPECT_EQ(q(lhs_coefficient(ExponentVector({1, 0}), 0L)), 1);
  EXPECT_EQ(q(lhs_coefficient(ExponentVector({0, 1}), 0L)), -1);
  EXPECT_EQ(q(lhs_coefficient(ExponentVector({2, 1}), 1L)), make_rational(1, 2));
  // below the pole the coefficient vanishes
  EXPECT_EQ(q(lhs_coefficient(ExponentVector({2, 0}), 1L)), 0);
  EXPECT_EQ(f(lhs_coefficient(ExponentVector({2, 1}), SymbolicS{})), RationalFunction(make_rational(1, 2)));
}

TEST(Coefficients, RhsExamples) {
  EXPECT_EQ(q(rhs_coefficient(ExponentVector({0, 0}), 1, 1, 0L)), 0);
  EXPECT_EQ(q(rhs_coefficient(ExponentVector({1, 0}), 1, 1, 0L)), 1);
  EXPECT_EQ(q(rhs_coefficient(ExponentVector({2, 1}), 1, 1, 0L)), make_rational(1, 4));
  EXPECT_EQ(q(rhs_coefficient(ExponentVector({2, 1}), 1, 1, 0L)),
            q(lhs_coefficient(ExponentVector({2, 1}), 0L)));
  EXPECT_THROW(rhs_coefficient(ExponentVector({1, 0, 0}), 1, 1, 0L), LengthError);
}

TEST(Coefficients, Serialization) {
  EXPECT_EQ(to_string(CoefficientValue(make_rational(-1, 4))), "-1/4");
  EXPECT_EQ(to_string(SParameter(SymbolicS{})), "sym");
  EXPECT_EQ(to_string(SParameter(-2L)), "-2");
}

TEST(CoefficientIdentity, IntegerCases) {
  EXPECT_TRUE(verify_theorem1(1, 1, 0L, 8).passed());
  EXPECT_TRUE(verify_theorem1(2, 2, 2L, 6).passed());
  EXPECT_TRUE(verify_theorem1(2, 1, 1L, 6).passed());
  const auto r = verify_theorem1(1, 2, 3L, 7, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 120u);
}

TEST(CoefficientIdentity, NegativeIntegerS) {
  EXPECT_TRUE(verify_theorem1(1, 1, -1L, 7).passed());
  EXPECT_TRUE(verify_theorem1(1, 2, -2L, 5).passed());
}

TEST(CoefficientIdentity, SymbolicCases) {
  EXPECT_TRUE(verify_theorem1(1, 1, SymbolicS{}, 6).passed());
  EXPECT_TRUE(verify_theorem1(2, 1, SymbolicS{}, 4).passed());
}

TEST(CoefficientIdentity, ThreadCountDoesNotChangeReport) {
  const auto a = verify_theorem1(1, 2, 1L, 6, 1);
  const auto b = verify_theorem1(1, 2, 1L, 6, 4);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

TEST(CoefficientIdentity, DetectsWrongCoefficient) {
  // s = 1 coefficients against s = 0 ones must differ somewhere
  bool differs = false;
  for (const auto& k : vectors_up_to(3, 4))
    differs |= q(rhs_coefficient(k, 1, 2, 1L)) != q(lhs_coefficient(k, 0L));
  EXPECT_TRUE(differs);
}

TEST(Coefficients, Antisymmetry) {
  for (const auto& k : vectors_up_to(4, 5)) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        auto e = k.entries();
        std::swap(e[i], e[j]);
        EXPECT_EQ(q(lhs_coefficient(ExponentVector(e), 1L)), -q(lhs_coefficient(k, 1L)));
      }
    // within a block the right side is antisymmetric on its own
    auto e = k.entries();
    std::swap(e[0], e[1]);
    EXPECT_EQ(q(rhs_coefficient(ExponentVector(e), 2, 2, 1L)), -q(rhs_coefficient(k, 2, 2, 1L)));
    e = k.entries();
    std::swap(e[2], e[3]);
    EXPECT_EQ(q(rhs_coefficient(ExponentVector(e), 2, 2, 1L)), -q(rhs_coefficient(k, 2, 2, 1L)));
  }
}

TEST(Coefficients, SymbolicMatchesIntegerPath) {
  for (const auto& k : vectors_up_to(3, 6)) {
    const RationalFunction sym = f(rhs_coefficient(k, 1, 2, SymbolicS{}));
    for (long s0 = 0; s0 <= 4; ++s0) {
      if (sym.has_pole_at(s0)) continue;
      BigRational v = sym.evaluate(s0);
      for (int ki : k.entries()) v *= reciprocal_gamma_int(ki, s0);
      EXPECT_EQ(v, q(rhs_coefficient(k, 1, 2, s0))) << k.to_string() << " s=" << s0;
    }
  }
}

TEST(Coefficients, SpecializationAtNegativeS) {
  for (long s0 : {-1L, -2L}) {
    const auto r = verify_specialization(1, 2, s0, 6);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Coefficients, LastVariableToZeroReduction) {
  // [z^{(j+1, 0)}] for (m, n, s) is [z^j] for (m, n-1, s-1) over Gamma(1 - s)
  for (const auto& j : vectors_up_to(3, 5)) {
    auto e = j.entries();
    for (int& v : e) v += 1;
    e.push_back(0);
    const ExponentVector k(e);
    EXPECT_EQ(q(rhs_coefficient(k, 2, 2, 0L)), q(rhs_coefficient(j, 2, 1, -1L))) << j.to_string();
    EXPECT_EQ(f(rhs_coefficient(k, 2, 2, SymbolicS{})),
              f(rhs_coefficient(j, 2, 1, SymbolicS{})).shifted(-1))
        << j.to_string();
  }
}

TEST(Weights, AExamples) {
  EXPECT_EQ(weight_a(Partition(), 0, 1, 1), 1);
  EXPECT_EQ(weight_a(Partition({1}), 0, 1, 1), 1);
  EXPECT_EQ(weight_a(Partition({1}), 1, 1, 1), make_rational(1, 3));
  EXPECT_THROW(weight_a(Partition({1, 1, 1}), 0, 1, 1), LengthError);
}

TEST(Weights, BExamples) {
  EXPECT_EQ(weight_b(Partition(), Partition(), 0, 1, 1), 1);
  EXPECT_EQ(weight_b(Partition({1}), Partition(), 0, 1, 1), make_rational(1, 2));
  EXPECT_EQ(weight_b(Partition(), Partition(), 1, 1, 1), make_rational(1, 2));
  EXPECT_THROW(weight_b(Partition({1, 1}), Partition(), 0, 1, 1), LengthError);
}

TEST(Weights, ClosedFormsAgreeAndAreSymmetric) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int s = 0; s <= 2; ++s)
        for (int total = 0; total <= 5; ++total)
          for (int a = 0; a <= total; ++a)
            for (const Partition& mu : partitions_of(a, m))
              for (const Partition& nu : partitions_of(total - a, n)) {
                EXPECT_EQ(weight_b_join(mu, nu, s, m, n), weight_b_product(mu, nu, s, m, n));
                EXPECT_EQ(weight_b(mu, nu, s, m, n), weight_b(nu, mu, s, n, m));
              }
}

TEST(WeightIdentity, Cases) {
  EXPECT_TRUE(verify_corollary(1, 1, 0, 6).passed());
  EXPECT_TRUE(verify_corollary(2, 2, 1, 5).passed());
  EXPECT_TRUE(verify_corollary(1, 2, 0, 4).passed());
  EXPECT_TRUE(verify_corollary(2, 1, 2, 4, 2).passed());
}

TEST(CauchyDeterminant, Examples) {
  EXPECT_TRUE(cauchy_determinant_check({1, 0}, {1, 0}, 0));
  EXPECT_TRUE(cauchy_determinant_check({1}, {2, 0}, 0));
  EXPECT_THROW(cauchy_determinant_check({0}, {0}, 1), SingularDenominatorError);
  EXPECT_THROW(cauchy_determinant_check({0, 1}, {1, 0}, 0), std::invalid_argument);
  EXPECT_THROW(cauchy_determinant_check({2, 1, 0}, {1, 0}, 0), DimensionMismatchError);
}

TEST(CauchyDeterminant, FixedDeterminantValues) {
  // det [[1/3, 1/2], [1/2, 1]] = 1/12
  Matrix<BigRational> a(2, 2);
  a(0, 0) = make_rational(1, 3);
  a(0, 1) = make_rational(1, 2);
  a(1, 0) = make_rational(1, 2);
  a(1, 1) = 1;
  EXPECT_EQ(determinant(a), make_rational(1, 12));
  // det [[1/4, 1/2], [1, 1]] = -1/4
  Matrix<BigRational> b(2, 2);
  b(0, 0) = make_rational(1, 4);
  b(0, 1) = make_rational(1, 2);
  b(1, 0) = 1;
  b(1, 1) = 1;
  EXPECT_EQ(determinant(b), make_rational(-1, 4));
}

TEST(CauchyDeterminant, LargerInstances) {
  EXPECT_TRUE(cauchy_determinant_check({5, 2, 0}, {7, 3, 1, 0}, 0));
  EXPECT_TRUE(cauchy_determinant_check({4}, {6, 2, 1}, 2));
}

TEST(Andreief, Examples) {
  Matrix<BigRational> f(1, 2, BigRational(1)), g(1, 2, BigRational(1)), c(1, 0);
  EXPECT_TRUE(andreief_check(f, g, {1, 1}, c));
  Matrix<BigRational> bad(2, 2);
  EXPECT_THROW(andreief_check(f, bad, {1, 1}, c), DimensionMismatchError);
}

TEST(Andreief, RandomInstances) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-4, 4);
  for (const auto [m, n, p] : {std::tuple{1u, 2u, 2u}, std::tuple{2u, 3u, 3u}, std::tuple{2u, 2u, 4u}}) {
    Matrix<BigRational> f(m, p), g(n, p), c(n, n - m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t x = 0; x < p; ++x) f(i, x) = e(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < p; ++x) g(i, x) = e(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n - m; ++t) c(i, t) = e(rng);
    std::vector<BigRational> w;
    for (std::size_t x = 0; x < p; ++x) w.push_back(make_rational(1 + x, 2));
    EXPECT_TRUE(andreief_check(f, g, w, c));
  }
}

TEST(Batteries, DeterministicAndPassing) {
  const auto a = verify_cauchy_battery(60, 9);
  const auto b = verify_andreief_battery(60, 9);
  EXPECT_TRUE(a.passed());
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(a.checked, 60u);
  EXPECT_EQ(b.checked, 60u);
}

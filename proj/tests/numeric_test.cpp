#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "schurid/errors.hpp"
#include "schurid/haar.hpp"
#include "schurid/numeric.hpp"

using namespace schurid;

namespace {

const char* const kI0 = "2.279585302336067267437204440811533353285841102785459054070839751664305";
const char* const kI1 = "1.590636854637329063382254424999666247954478159495536647132287984608545";

MpReal ref(const char* digits) { return MpReal::from_string(digits, 256); }

std::vector<TrackedReal> reals(std::initializer_list<long> v, Precision p = {}) {
  std::vector<TrackedReal> out;
  for (long x : v) out.push_back(TrackedReal::exact(x, p));
  return out;
}

ComplexMatrix diag(std::initializer_list<double> d) {
  ComplexMatrix a = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) a(i, i) = x, ++i;
  return a;
}

void expect_within(const MCEstimate& e, double target) {
  EXPECT_LE(std::abs(e.mean - std::complex<double>(target, 0)), 5 * e.standard_error)
      << e.mean << " vs " << target << " se " << e.standard_error;
}

}  // namespace

TEST(TrackedReal, ArithmeticEncloses) {
  const TrackedReal third = TrackedReal::from_rational(make_rational(1, 3));
  EXPECT_TRUE(third.contains(make_rational(1, 3)));
  EXPECT_TRUE((third * TrackedReal::exact(3)).contains(BigRational(1)));
  EXPECT_TRUE((third + third + third - TrackedReal::exact(1)).contains_zero());
  EXPECT_TRUE((TrackedReal::exact(1) / TrackedReal::exact(7)).contains(make_rational(1, 7)));
  EXPECT_THROW(TrackedReal::exact(1) / TrackedReal(), std::domain_error);
}

TEST(Bessel, Examples) {
  EXPECT_TRUE(bessel_I(0, TrackedReal::exact(0)).contains(BigRational(1)));
  EXPECT_TRUE(bessel_I(3, TrackedReal::exact(0)).contains(BigRational(0)));
  const TrackedReal i0 = bessel_I(0, TrackedReal::exact(2));
  EXPECT_TRUE(i0.contains(ref(kI0)));
  EXPECT_LT(i0.relative_error(), 1e-45);
  EXPECT_TRUE(bessel_I(1, TrackedReal::exact(2)).contains(ref(kI1)));
}

TEST(Bessel, NegativeOrderIsSymmetric) {
  for (long k = 0; k <= 8; ++k) {
    const TrackedReal a = bessel_I(k, TrackedReal::from_rational(make_rational(7, 3)));
    const TrackedReal b = bessel_I(-k, TrackedReal::from_rational(make_rational(7, 3)));
    EXPECT_EQ(compare(a.value(), b.value()), 0);
    EXPECT_EQ(compare(a.abs_error(), b.abs_error()), 0);
  }
}

TEST(Bessel, BoundsSurviveDoubledPrecision) {
  const Precision low{30};
  for (long k : {0L, 1L, 5L})
    for (long x : {1L, 2L, 10L}) {
      const TrackedReal a = bessel_I(k, TrackedReal::exact(x, low), low);
      const TrackedReal b = bessel_I(k, TrackedReal::exact(x, low.doubled()), low.doubled());
      EXPECT_TRUE(a.contains(b.value())) << k << " " << x;
    }
}

TEST(Determinant, SmallCases) {
  Matrix<TrackedReal> a(2, 2, TrackedReal());
  a(0, 0) = TrackedReal::exact(2);
  a(0, 1) = TrackedReal::exact(1);
  a(1, 0) = TrackedReal::exact(1);
  a(1, 1) = TrackedReal::exact(3);
  EXPECT_TRUE(determinant(a).contains(BigRational(5)));
  EXPECT_TRUE(determinant(Matrix<TrackedReal>(2, 2, TrackedReal())).contains(BigRational(0)));
  Matrix<TrackedReal> z(2, 2, TrackedReal::from_rational(make_rational(1, 3)));
  EXPECT_THROW(determinant(z), std::domain_error);
}

TEST(BesselDeterminantFormula, Examples) {
  const TrackedReal one = TrackedReal::exact(1);
  EXPECT_TRUE(theorem2_rhs(one, reals({1}), 1, 0).contains(ref(kI0)));
  EXPECT_TRUE(theorem2_rhs(one, reals({1}), 0, 1).contains(ref(kI0)));
  const TrackedReal g = series_G(reals({1, 4}), 0, 40);
  const TrackedReal t = theorem2_rhs(one, reals({1, 2}), 2, 0);
  EXPECT_TRUE(t.overlaps(g));
  EXPECT_TRUE(t.contains(ref("8.839271020262876216991705578646738345531192594390006366780599500330509")));
}

TEST(BesselDeterminantFormula, RepeatedSquaresThrow) {
  const TrackedReal one = TrackedReal::exact(1);
  EXPECT_THROW(theorem2_rhs(one, reals({1, -1}), 2, 0), RepeatedPointError);
  EXPECT_THROW(theorem2_rhs(one, reals({1, 2, 2}), 1, 2), RepeatedPointError);
  EXPECT_NO_THROW(theorem2_rhs(one, reals({1, 2}), 1, 1));
}

TEST(BesselDeterminantFormula, RecoversUnitaryCase) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (const BigRational& beta : {make_rational(1, 2), BigRational(1)}) {
      std::vector<TrackedReal> lambda, z;
      for (std::size_t i = 1; i <= m; ++i) {
        const BigRational l(static_cast<long>(i));
        lambda.push_back(TrackedReal::from_rational(l));
        z.push_back(TrackedReal::from_rational(beta * beta * l * l));
      }
      const TrackedReal reference = series_G(z, 0, 40);
      const TrackedReal b = TrackedReal::from_rational(beta);
      EXPECT_TRUE(theorem2_rhs(b, lambda, m, 0).overlaps(reference)) << m;
      EXPECT_TRUE(theorem2_rhs(b, lambda, 0, m).overlaps(reference)) << m;
    }
}

TEST(Series, GExamples) {
  EXPECT_TRUE(series_G(reals({1}), 0, 30).contains(ref(kI0)));
  EXPECT_TRUE(series_G(reals({1}), 1, 30).contains(ref(kI1)));
  EXPECT_TRUE(series_G(reals({1, 2}), 0, 40).contains(ref("4.154506641516837124430925371992356973333101194605401143987487950466007")));
  EXPECT_TRUE(series_G(reals({1, 2}), 1, 40).contains(ref("2.609439386269496324985058022489920134896197425711114785004673103864671")));
  EXPECT_THROW(series_G(reals({2, 2}), 0, 30), RepeatedPointError);
  EXPECT_THROW(series_G(reals({1}), 2, 1), std::invalid_argument);
  EXPECT_THROW(series_G(reals({1}), -1, 30), std::invalid_argument);
}

TEST(Series, KExamples) {
  EXPECT_TRUE(series_K(reals({1}), reals({1}), 0, 30).contains(ref(kI0)));
  EXPECT_TRUE(series_K(reals({1}), reals({1}), 1, 30).contains(ref(kI1)));
  EXPECT_TRUE(series_K(reals({1, 2}), reals({1, 3}), 0, 40)
                  .contains(ref("13.15058985688218690256927342350848314245450868974156682390992112436839")));
  EXPECT_TRUE(series_K(reals({1, 2}), reals({1, 3}), 1, 40)
                  .contains(ref("18.28607383519291525244002690463851502704195082639167908396350424026336")));
  EXPECT_THROW(series_K(reals({1, 2}), reals({3, 3}), 0, 30), RepeatedPointError);
}

TEST(Series, BoundsSurviveDoubledPrecision) {
  const Precision low{25};
  const TrackedReal a = series_G(reals({1, 2, 3}, low), 1, 40, low);
  const TrackedReal b = series_G(reals({1, 2, 3}, low.doubled()), 1, 40, low.doubled());
  EXPECT_TRUE(a.contains(b.value()));
  const TrackedReal c = series_K(reals({1, 2}, low), reals({1, 3}, low), 0, 40, low);
  const TrackedReal d = series_K(reals({1, 2}, low.doubled()), reals({1, 3}, low.doubled()), 0, 40, low.doubled());
  EXPECT_TRUE(c.contains(d.value()));
}

TEST(Haar, SamplesAreUnitary) {
  Rng rng(3);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int i = 0; i < 200; ++i) EXPECT_LE(unitarity_defect(haar_sample(n, rng)), 1e-12);
}

TEST(Haar, Moments) {
  const HaarStatistics st = haar_statistics(3, 100000, 11);
  EXPECT_NEAR(st.abs2_u11.mean.real(), 1.0 / 3, 3 * st.abs2_u11.standard_error);
  EXPECT_LE(std::abs(st.u11.mean), 3 * st.u11.standard_error);
  EXPECT_LE(st.max_defect, 1e-12);
}

TEST(MonteCarlo, GMatchesSeries) {
  const ComplexMatrix one = diag({1});
  expect_within(mc_integral_G(one, one, 0, 200000, 1), 2.2795853023360673);
  expect_within(mc_integral_G(one, one, 1, 200000, 2), 1.5906368546373291);
  expect_within(mc_integral_G(diag({1, 2}), diag({1, 1}), 0, 200000, 3), 4.1545066415168371);
}

TEST(MonteCarlo, KMatchesSeries) {
  const ComplexMatrix one = diag({1});
  expect_within(mc_integral_K(one, one, one, one, 0, 200000, 4), 2.2795853023360673);
  expect_within(mc_integral_K(one, one, one, one, 1, 200000, 5), 1.5906368546373291);
  const ComplexMatrix id = diag({1, 1});
  expect_within(mc_integral_K(diag({1, 2}), diag({1, 3}), id, id, 0, 200000, 6), 13.150589856882187);
}

TEST(MonteCarlo, SeedAndThreadsDetermineEstimate) {
  const ComplexMatrix one = diag({1});
  const MCEstimate a = mc_integral_G(one, one, 0, 10000, 9, 3);
  const MCEstimate b = mc_integral_G(one, one, 0, 10000, 9, 3);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_EQ(a.samples, 10000u);
  EXPECT_EQ(a.seed, 9u);
}

TEST(MonteCarlo, StandardErrorShrinksBySqrtTwo) {
  const ComplexMatrix one = diag({1});
  const MCEstimate a = mc_integral_G(one, one, 0, 100000, 21);
  const MCEstimate b = mc_integral_G(one, one, 0, 200000, 22);
  const double ratio = a.standard_error / b.standard_error;
  EXPECT_GE(ratio, std::sqrt(2.0) * 0.8);
  EXPECT_LE(ratio, std::sqrt(2.0) * 1.2);
}

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "schurid/errors.hpp"
#include "schurid/numeric.hpp"
#include "schurid/partition.hpp"

namespace schurid {

TrackedReal bessel_I(long order, const TrackedReal& x, Precision prec) {
  const unsigned long k = static_cast<unsigned long>(std::labs(order));
  const mpfr_prec_t bits = std::max(prec.bits(), x.precision());

  const TrackedReal half = (x * TrackedReal::from_bits(1, bits)).ldexp(-1);
  const TrackedReal q = half * half;

  TrackedReal term = TrackedReal::from_bits(1, bits);
  for (unsigned long i = 1; i <= k; ++i) term = (term * half).divided(i);
  TrackedReal sum = term;

  // Ratio of consecutive terms is q / ((j+1)(j+1+k)), decreasing in j.
  const MpReal q_up = q.magnitude_upper();
  MpReal tol(kRadiusBits);
  for (unsigned long j = 0;; ++j) {
    MpReal rho(kRadiusBits);
    const unsigned long d = (j + 1) * (j + 1 + k);
    mpfr_div_ui(rho.get(), q_up.get(), d, MPFR_RNDU);
    if (mpfr_cmp_d(rho.get(), 0.5) <= 0) {
      // remaining terms <= |term| * rho / (1 - rho) <= 2 rho |term|
      MpReal rest = term.magnitude_upper();
      mpfr_mul(rest.get(), rest.get(), rho.get(), MPFR_RNDU);
      mpfr_mul_2ui(rest.get(), rest.get(), 1, MPFR_RNDU);
      mpfr_abs(tol.get(), sum.value().get(), MPFR_RNDD);
      mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits), MPFR_RNDD);
      if (rest.is_zero() || mpfr_lessequal_p(rest.get(), tol.get())) return sum.widened(rest);
    }
    term = (term * q).divided(d);
    sum += term;
  }
}

TrackedReal determinant(Matrix<TrackedReal> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  mpfr_prec_t bits = 64;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bits = std::max(bits, a(i, j).precision());
  TrackedReal det = TrackedReal::from_bits(1, bits);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (mpfr_cmpabs(a(i, k).value().get(), a(piv, k).value().get()) > 0) piv = i;
    if (a(piv, k).contains_zero()) {
      bool all_zero = true;
      for (std::size_t i = k; i < n && all_zero; ++i)
        for (std::size_t j = k; j < n && all_zero; ++j)
          if (!a(i, j).value().is_zero() || !a(i, j).abs_error().is_zero()) all_zero = false;
      if (all_zero) return TrackedReal::from_bits(0, bits);
      throw std::domain_error("determinant: pivot ball contains zero; raise the precision");
    }
    if (piv != k) {
      a.swap_rows(piv, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const TrackedReal f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

TrackedReal block_vandermonde_squares(std::span<const TrackedReal> v) {
  TrackedReal d = TrackedReal::from_bits(1, v.empty() ? 64 : v[0].precision());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const TrackedReal diff = v[i] * v[i] - v[j] * v[j];
      if (diff.contains_zero())
        throw RepeatedPointError("theorem2_rhs: squared eigenvalues must be distinct within a block");
      d *= diff;
    }
  }
  return d;
}

}  // namespace

TrackedReal theorem2_rhs(const TrackedReal& beta, std::span<const TrackedReal> eigenvalues,
                         std::size_t m, std::size_t n, Precision prec) {
  const std::size_t total = m + n;
  if (eigenvalues.size() != total)
    throw DimensionMismatchError("theorem2_rhs: need m + n eigenvalues");
  const TrackedReal den = block_vandermonde_squares(eigenvalues.subspan(0, m)) *
                          block_vandermonde_squares(eigenvalues.subspan(m, n));

  Matrix<TrackedReal> mat(total, total, TrackedReal::from_bits(0, prec.bits()));
  const TrackedReal two_beta = beta.scaled(2);
  for (std::size_t j = 0; j < total; ++j) {
    const TrackedReal arg = two_beta * eigenvalues[j];
    for (std::size_t i = 0; i < total; ++i) {
      const auto order = static_cast<unsigned long>(total - 1 - i);
      mat(i, j) = eigenvalues[j].pow(order) * bessel_I(static_cast<long>(order), arg, prec);
    }
  }
  const long diff = static_cast<long>(m) - static_cast<long>(n);
  const long twice_exp = static_cast<long>(total) - diff * diff;
  const long e = twice_exp / 2;
  const BigInt cmn = superfactorial(m) * superfactorial(n);
  TrackedReal scale = TrackedReal::from_rational(BigRational(cmn), prec);
  if (e >= 0) {
    scale *= beta.pow(static_cast<unsigned long>(e));
  } else {
    scale /= beta.pow(static_cast<unsigned long>(-e));
  }
  return scale * determinant(std::move(mat)) / den;
}

}  // namespace schurid

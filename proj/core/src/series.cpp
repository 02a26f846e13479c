#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schurid/errors.hpp"
#include "schurid/numeric.hpp"
#include "schurid/partition.hpp"

namespace schurid {

namespace {

// Upper-rounded helpers at radius precision for the remainder majorants.
MpReal up_mul(const MpReal& a, const MpReal& b) {
  MpReal r(kRadiusBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

MpReal up_add(const MpReal& a, const MpReal& b) {
  MpReal r(kRadiusBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// Bound for sum over k outside [0, N]^n of prod_i a_i(k_i), where
// a_i(k) = (k+1)^e b_i^k / (k! (k-s)!) for k >= s and 0 below s.
// Outside the box some k_i > N, so the sum is at most
// sum_i T_i prod_{j != i} (A_j + T_j) with A_j the in-box sum and T_j the tail.
MpReal box_remainder(const std::vector<MpReal>& bases, unsigned long e, long s, int cutoff) {
  const auto N = static_cast<unsigned long>(cutoff);
  const auto su = static_cast<unsigned long>(s);
  std::vector<MpReal> inside, tails;
  for (const MpReal& b : bases) {
    // a(s) = (s+1)^e b^s / s!
    MpReal a(kRadiusBits);
    mpfr_set_ui(a.get(), 1, MPFR_RNDU);
    for (unsigned long i = 0; i < su; ++i) {
      a = up_mul(a, b);
      mpfr_div_ui(a.get(), a.get(), i + 1, MPFR_RNDU);
    }
    MpReal pw(kRadiusBits);
    mpfr_set_ui(pw.get(), su + 1, MPFR_RNDU);
    mpfr_pow_ui(pw.get(), pw.get(), e, MPFR_RNDU);
    a = up_mul(a, pw);

    MpReal sum(kRadiusBits);
    auto step = [&](unsigned long k) {  // a(k) -> a(k+1)
      MpReal r(kRadiusBits);
      mpfr_set_ui(r.get(), k + 2, MPFR_RNDU);
      mpfr_div_ui(r.get(), r.get(), k + 1, MPFR_RNDU);
      mpfr_pow_ui(r.get(), r.get(), e, MPFR_RNDU);
      r = up_mul(r, b);
      mpfr_div_ui(r.get(), r.get(), (k + 1) * (k + 1 - su), MPFR_RNDU);
      return r;
    };
    for (unsigned long k = su; k <= N; ++k) {
      sum = up_add(sum, a);
      a = up_mul(a, step(k));
    }
    // a now holds a(N+1); later ratios are bounded by step(N+1).
    MpReal rho = step(N + 1);
    if (mpfr_cmp_ui(rho.get(), 1) >= 0)
      throw std::invalid_argument("series cutoff too small for the remainder bound to converge");
    MpReal one_minus(kRadiusBits);
    mpfr_ui_sub(one_minus.get(), 1, rho.get(), MPFR_RNDD);
    MpReal tail(kRadiusBits);
    mpfr_div(tail.get(), a.get(), one_minus.get(), MPFR_RNDU);
    inside.push_back(std::move(sum));
    tails.push_back(std::move(tail));
  }
  MpReal total(kRadiusBits);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    MpReal t = tails[i];
    for (std::size_t j = 0; j < bases.size(); ++j)
      if (j != i) t = up_mul(t, up_add(inside[j], tails[j]));
    total = up_add(total, t);
  }
  return total;
}

TrackedReal vandermonde_of(std::span<const TrackedReal> v, const char* who) {
  TrackedReal d = TrackedReal::from_bits(1, v.empty() ? 64 : v[0].precision());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      TrackedReal diff = v[i] - v[j];
      if (diff.contains_zero()) throw RepeatedPointError(std::string(who) + ": points must be distinct");
      d *= diff;
    }
  }
  return d;
}

// coeff[k] = v^k / (k! (k-s)!) for s <= k <= N, zero below s.
std::vector<TrackedReal> factorial_weighted_powers(const TrackedReal& v, long s, int cutoff,
                                                   Precision prec) {
  const mpfr_prec_t bits = prec.bits();
  std::vector<TrackedReal> out(static_cast<std::size_t>(cutoff) + 1, TrackedReal::from_bits(0, bits));
  TrackedReal pw = TrackedReal::from_bits(1, bits);
  for (int k = 0; k <= cutoff; ++k) {
    if (k >= s) {
      const BigInt den = factorial(static_cast<unsigned long>(k)) *
                         factorial(static_cast<unsigned long>(k - s));
      out[static_cast<std::size_t>(k)] = pw / TrackedReal::from_rational(BigRational(den), prec);
    }
    pw *= v;
  }
  return out;
}

// Calls visit(k) for every k in [lo, hi]^n.
template <class F>
void for_each_box_point(std::size_t n, int lo, int hi, F&& visit) {
  if (lo > hi) return;
  std::vector<int> k(n, lo);
  while (true) {
    visit(k);
    std::size_t i = 0;
    while (i < n && k[i] == hi) k[i++] = lo;
    if (i == n) return;
    ++k[i];
  }
}

long inversion_sign(const std::vector<std::size_t>& perm) {
  long sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

void check_series_args(std::size_t n, long s, int cutoff) {
  if (n == 0) throw std::invalid_argument("series: need at least one point");
  if (s < 0) throw std::invalid_argument("series: s must be a nonnegative integer");
  if (cutoff < s) throw std::invalid_argument("series: cutoff must be at least s");
}

}  // namespace

TrackedReal series_G(std::span<const TrackedReal> z, long s, int cutoff, Precision prec) {
  const std::size_t n = z.size();
  check_series_args(n, s, cutoff);
  const mpfr_prec_t bits = prec.bits();
  const TrackedReal delta_z = vandermonde_of(z, "series_G");

  std::vector<std::vector<TrackedReal>> coeff;
  std::vector<MpReal> bases;
  for (const TrackedReal& zi : z) {
    coeff.push_back(factorial_weighted_powers(zi, s, cutoff, prec));
    bases.push_back(zi.magnitude_upper());
  }

  TrackedReal sum = TrackedReal::from_bits(0, bits);
  for_each_box_point(n, static_cast<int>(s), cutoff, [&](const std::vector<int>& k) {
    const BigInt dk = vandermonde(k);
    if (dk == 0) return;
    TrackedReal term = TrackedReal::from_rational(BigRational(dk), prec);
    for (std::size_t i = 0; i < n; ++i) term *= coeff[i][static_cast<std::size_t>(k[i])];
    sum += term;
  });
  sum = sum.widened(box_remainder(bases, n - 1, s, cutoff));
  const TrackedReal cn = TrackedReal::from_rational(BigRational(superfactorial(n)), prec);
  return cn * sum / delta_z;
}

TrackedReal series_K(std::span<const TrackedReal> x, std::span<const TrackedReal> y, long s,
                     int cutoff, Precision prec) {
  const std::size_t n = x.size();
  if (y.size() != n) throw DimensionMismatchError("series_K: x and y must have equal length");
  check_series_args(n, s, cutoff);
  const mpfr_prec_t bits = prec.bits();
  const TrackedReal delta = vandermonde_of(x, "series_K") * vandermonde_of(y, "series_K");

  std::vector<std::vector<TrackedReal>> xpow(n), ycoeff;
  MpReal xmax(kRadiusBits);
  for (std::size_t i = 0; i < n; ++i) {
    TrackedReal pw = TrackedReal::from_bits(1, bits);
    for (int k = 0; k <= cutoff; ++k) {
      xpow[i].push_back(pw);
      pw *= x[i];
    }
    const MpReal mag = x[i].magnitude_upper();
    if (mpfr_cmp(mag.get(), xmax.get()) > 0) xmax = up_add(mag, MpReal(kRadiusBits));
    ycoeff.push_back(factorial_weighted_powers(y[i], s, cutoff, prec));
  }
  std::vector<MpReal> bases;
  for (std::size_t j = 0; j < n; ++j) bases.push_back(up_mul(xmax, y[j].magnitude_upper()));

  std::vector<std::vector<std::size_t>> perms;
  std::vector<long> signs;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
    signs.push_back(inversion_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  TrackedReal sum = TrackedReal::from_bits(0, bits);
  for_each_box_point(n, static_cast<int>(s), cutoff, [&](const std::vector<int>& k) {
    TrackedReal det = TrackedReal::from_bits(0, bits);
    for (std::size_t p = 0; p < perms.size(); ++p) {
      TrackedReal prod = TrackedReal::from_bits(signs[p], bits);
      for (std::size_t i = 0; i < n; ++i) prod *= xpow[i][static_cast<std::size_t>(k[perms[p][i]])];
      det += prod;
    }
    for (std::size_t j = 0; j < n; ++j) det *= ycoeff[j][static_cast<std::size_t>(k[j])];
    sum += det;
  });
  // |det(x_i^{k_j})| <= n! prod_j max_i |x_i|^{k_j}
  MpReal rem = box_remainder(bases, 0, s, cutoff);
  mpfr_mul_ui(rem.get(), rem.get(), static_cast<unsigned long>(perms.size()), MPFR_RNDU);
  sum = sum.widened(rem);
  const BigInt cn = superfactorial(n);
  const TrackedReal cn2 = TrackedReal::from_rational(BigRational(cn * cn), prec);
  return cn2 * sum / delta;
}

}  // namespace schurid

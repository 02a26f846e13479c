#include "schurid/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "schurid/errors.hpp"
#include "schurid/numeric.hpp"

namespace schurid {

BigRational weight_P(const Partition& lambda, std::size_t m, std::size_t n, int s) {
  if (lambda.length() > m + n) return 0;
  if (s < 0) throw std::invalid_argument("weight_P: s must be nonnegative");
  return BigRational(BigInt(1), hook_product(lambda) * hook_product(add_rectangle(lambda, s, m + n)));
}

BigRational weight_Q(const Partition& mu, const Partition& nu, std::size_t m, std::size_t n,
                     int s) {
  if (mu.length() > m) throw LengthError("weight_Q: length(mu) > m");
  if (nu.length() > n) throw LengthError("weight_Q: length(nu) > n");
  if (s < 0) throw std::invalid_argument("weight_Q: s must be nonnegative");
  const Partition box(std::vector<int>(n, static_cast<int>(m)));
  const BigInt den = hook_product(mu) * hook_product(add_rectangle(nu, s, n)) *
                     hook_product(join_shape(mu, nu, m, n, s));
  return make_rational(hook_product(box), den);
}

BigRational factorial_tail_bound(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("factorial_tail_bound: negative cutoff");
  constexpr int kExactTerms = 20;
  const auto first = static_cast<unsigned long>(cutoff) + 1;
  BigRational sum = 0;
  for (unsigned long k = first; k < first + kExactTerms; ++k) sum += BigRational(BigInt(1), factorial(k));
  // sum_{k >= K} 1/k! <= (1/K!) (K+1)/K
  const unsigned long big_k = first + kExactTerms;
  sum += make_rational(BigInt(big_k + 1), BigInt(big_k) * factorial(big_k));
  sum.canonicalize();
  return sum;
}

ZBracket normalization_Z_truncated(std::size_t m, std::size_t n, int s, int cutoff) {
  if (s < 0) throw std::invalid_argument("normalization_Z_truncated: s must be nonnegative");
  if (cutoff < 0) throw std::invalid_argument("normalization_Z_truncated: negative cutoff");
  ZBracket z;
  for_each_partition(cutoff, m + n, [&](const Partition& lambda) { z.partial_sum += weight_P(lambda, m, n, s); });
  z.partial_sum.canonicalize();
  z.tail_bound = factorial_tail_bound(cutoff);
  return z;
}

namespace {

TrackedReal bessel_determinant(std::size_t size, int s, Precision prec) {
  const TrackedReal two = TrackedReal::exact(2, prec);
  const long span = static_cast<long>(size);
  std::vector<TrackedReal> by_order;
  for (long d = -(span - 1); d <= span - 1; ++d) by_order.push_back(bessel_I(d + s, two, prec));
  Matrix<TrackedReal> a(size, size, TrackedReal::from_bits(0, prec.bits()));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      a(i, j) = by_order[static_cast<std::size_t>(static_cast<long>(i) - static_cast<long>(j) + span - 1)];
  return determinant(std::move(a));
}

}  // namespace

TrackedReal normalization_Z_bessel(std::size_t m, std::size_t n, int s, Precision prec) {
  if (s < 0) throw std::invalid_argument("normalization_Z_bessel: s must be nonnegative");
  const double target = std::pow(10.0, -static_cast<double>(prec.digits) / 2.0);
  Precision p = prec;
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      TrackedReal d = bessel_determinant(m + n, s, p);
      if (!d.contains_zero() && d.relative_error() <= target) return d;
    } catch (const std::domain_error&) {
    }
    p = p.doubled();
  }
  throw std::runtime_error("normalization_Z_bessel: precision budget exhausted");
}

}  // namespace schurid

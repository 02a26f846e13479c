#include <stdexcept>

#include "schurid/errors.hpp"
#include "schurid/measures.hpp"

namespace schurid {

namespace {

BigRational rational_pow(const BigRational& q, int e) {
  BigRational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

BigRational inverse_hook(const Partition& lambda) { return BigRational(BigInt(1), hook_product(lambda)); }

TrackedReal row_error(const TrackedReal& finite, const TrackedReal& limit) { return abs(finite - limit); }

}  // namespace

BigRational hook_ratio_52(const Partition& lambda, std::size_t m, std::size_t n) {
  if (lambda.length() > m) throw LengthError("hook_ratio_52: length(lambda) > m");
  BigInt num = 1, den = hook_product(lambda);
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    const auto li = static_cast<unsigned long>(lambda[i - 1]);
    num *= factorial(m + n - i) * factorial(li + m - i);
    den *= factorial(m - i) * factorial(li + m + n - i);
  }
  return make_rational(num, den);
}

TrackedReal limit_52(const Partition& lambda, const BigRational& alpha, Precision prec) {
  if (alpha < 0) throw std::invalid_argument("limit_52: alpha must be nonnegative");
  const BigRational v = inverse_hook(lambda) / rational_pow(alpha + 1, lambda.size());
  return TrackedReal::from_rational(v, prec);
}

BigRational hook_ratio_53(const Partition& mu, const Partition& nu, std::size_t m, std::size_t n) {
  if (mu.length() > m) throw LengthError("hook_ratio_53: length(mu) > m");
  if (nu.length() > n) throw LengthError("hook_ratio_53: length(nu) > n");
  const Partition box(std::vector<int>(m, static_cast<int>(n)));
  return make_rational(hook_product(box), hook_product(join_shape(mu, nu, m, n, 0)));
}

TrackedReal limit_53(const Partition& mu, const Partition& nu, const BigRational& alpha,
                     Precision prec) {
  if (alpha <= 0) throw std::invalid_argument("limit_53: alpha must be positive");
  const BigRational v = inverse_hook(mu) * inverse_hook(nu) /
                        (rational_pow(alpha + 1, mu.size()) * rational_pow(1 / alpha + 1, nu.size()));
  return TrackedReal::from_rational(v, prec);
}

std::pair<BigRational, BigRational> limit_parameters(const BigRational& alpha,
                                                     const BigRational& beta) {
  if (alpha <= 0 || beta <= 0) throw std::invalid_argument("limit_parameters: alpha, beta must be positive");
  const BigRational d = alpha * beta + alpha + beta;
  BigRational g = beta / d, e = alpha / d;
  g.canonicalize();
  e.canonicalize();
  return {g, e};
}

bool ConvergenceTable::strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (compare(rows[i].error.magnitude_upper(), rows[i - 1].error.magnitude_lower()) >= 0) return false;
  return true;
}

std::vector<LimitPoint> diagonal_points(std::span<const int> ts) {
  std::vector<LimitPoint> out;
  for (int t : ts) {
    if (t <= 0) throw std::invalid_argument("diagonal_points: t must be positive");
    out.push_back({static_cast<std::size_t>(t), static_cast<std::size_t>(t), t});
  }
  return out;
}

ConvergenceTable limit_check_54_P(const Partition& lambda, std::span<const LimitPoint> points,
                                  const BigRational& alpha, const BigRational& beta,
                                  Precision prec) {
  const auto [g, d] = limit_parameters(alpha, beta);
  const BigRational gd = g + d;
  const TrackedReal limit = exp(TrackedReal::from_rational(-gd, prec)) *
                            TrackedReal::from_rational(rational_pow(gd, lambda.size()) *
                                                           rational_pow(inverse_hook(lambda), 2),
                                                       prec);
  ConvergenceTable table;
  table.label = "P " + lambda.to_string();
  for (const LimitPoint& pt : points) {
    const TrackedReal z = normalization_Z_bessel(pt.m, pt.n, pt.s, prec);
    const TrackedReal finite = TrackedReal::from_rational(weight_P(lambda, pt.m, pt.n, pt.s), prec) / z;
    table.rows.push_back({pt, finite, limit, row_error(finite, limit)});
  }
  return table;
}

ConvergenceTable limit_check_54_Q(const Partition& mu, const Partition& nu,
                                  std::span<const LimitPoint> points, const BigRational& alpha,
                                  const BigRational& beta, Precision prec) {
  const auto [g, d] = limit_parameters(alpha, beta);
  const BigRational mass = rational_pow(g, mu.size()) * rational_pow(d, nu.size()) *
                           rational_pow(inverse_hook(mu) * inverse_hook(nu), 2);
  const TrackedReal limit =
      exp(TrackedReal::from_rational(-(g + d), prec)) * TrackedReal::from_rational(mass, prec);
  ConvergenceTable table;
  table.label = "Q " + mu.to_string() + "|" + nu.to_string();
  for (const LimitPoint& pt : points) {
    const TrackedReal z = normalization_Z_bessel(pt.m, pt.n, pt.s, prec);
    const TrackedReal finite =
        TrackedReal::from_rational(weight_Q(mu, nu, pt.m, pt.n, pt.s), prec) / z;
    table.rows.push_back({pt, finite, limit, row_error(finite, limit)});
  }
  return table;
}

}  // namespace schurid

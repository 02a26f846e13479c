#pragma once

// Partition measures built from hook products: P on SU(m+n) highest weights,
// the branched joint law Q on pairs, their normalization, and the
// fixed-partition limits as m, n, s grow.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurid/exact.hpp"
#include "schurid/partition.hpp"
#include "schurid/tracked_real.hpp"

namespace schurid {

/// 1 / (h(lambda) h(lambda + (s^{m+n}))); 0 when length(lambda) > m + n.
BigRational weight_P(const Partition& lambda, std::size_t m, std::size_t n, int s);

/// h((m^n)) / (h(mu) h(nu + (s^n)) h(join_shape(mu, nu, m, n, s))), unnormalized.
/// Throws LengthError if length(mu) > m or length(nu) > n.
BigRational weight_Q(const Partition& mu, const Partition& nu, std::size_t m, std::size_t n,
                     int s);

struct ZBracket {
  BigRational partial_sum;
  /// Upper bound on everything omitted: sum_{k > N} 1/k!.
  BigRational tail_bound;
  BigRational upper() const { return partial_sum + tail_bound; }
};

/// Partial sum of weight_P over sizes <= cutoff.
ZBracket normalization_Z_truncated(std::size_t m, std::size_t n, int s, int cutoff);

/// det(I_{i-j+s}(2)) of size m + n. The working precision is doubled until the
/// relative radius is at most 10^{-digits/2}.
TrackedReal normalization_Z_bessel(std::size_t m, std::size_t n, int s, Precision prec = {});

/// Upper bound on sum_{k > cutoff} 1/k!.
BigRational factorial_tail_bound(int cutoff);

/// h((n^m)) / h(lambda + (n^m)) through the telescoped product
/// prod_i (m+n-i)! (lambda_i+m-i)! / ((m-i)! (lambda_i+m+n-i)!) over h(lambda).
BigRational hook_ratio_52(const Partition& lambda, std::size_t m, std::size_t n);

/// (alpha + 1)^{-|lambda|} / h(lambda).
TrackedReal limit_52(const Partition& lambda, const BigRational& alpha, Precision prec = {});

/// h((n^m)) / h((mu + (n^m)) u nu').
BigRational hook_ratio_53(const Partition& mu, const Partition& nu, std::size_t m, std::size_t n);

/// (alpha + 1)^{-|mu|} (1/alpha + 1)^{-|nu|} / (h(mu) h(nu)).
TrackedReal limit_53(const Partition& mu, const Partition& nu, const BigRational& alpha,
                     Precision prec = {});

/// gamma = beta / (alpha beta + alpha + beta), delta = alpha / (alpha beta + alpha + beta).
std::pair<BigRational, BigRational> limit_parameters(const BigRational& alpha,
                                                     const BigRational& beta);

struct LimitPoint {
  std::size_t m;
  std::size_t n;
  int s;
};

struct ConvergenceRow {
  LimitPoint point;
  TrackedReal finite;
  TrackedReal limit;
  TrackedReal error;
};

struct ConvergenceTable {
  std::string label;
  std::vector<ConvergenceRow> rows;
  /// Each error ball lies strictly below the previous one.
  bool strictly_decreasing() const;
};

/// P_{m,n,s}(lambda) against e^{-(g+d)} (g+d)^{|lambda|} / h(lambda)^2, with
/// (g, d) = limit_parameters(alpha, beta).
ConvergenceTable limit_check_54_P(const Partition& lambda, std::span<const LimitPoint> points,
                                  const BigRational& alpha, const BigRational& beta,
                                  Precision prec = {});

/// Q_{m,n,s}(mu, nu) against e^{-(g+d)} g^{|mu|} d^{|nu|} / (h(mu)^2 h(nu)^2).
ConvergenceTable limit_check_54_Q(const Partition& mu, const Partition& nu,
                                  std::span<const LimitPoint> points, const BigRational& alpha,
                                  const BigRational& beta, Precision prec = {});

/// The diagonal m = n = s = t with alpha = beta = 1.
std::vector<LimitPoint> diagonal_points(std::span<const int> ts);

}  // namespace schurid

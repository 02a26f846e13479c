#pragma once

// Exact coefficient-level verification of the Bessel-type power series
// identity over U(m) x U(n), its Schur-function form, and the determinant
// and integration lemmas behind it.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schurid/exact.hpp"
#include "schurid/linalg.hpp"
#include "schurid/partition.hpp"

namespace schurid {

/// Tag selecting the formal-parameter path.
struct SymbolicS {
  friend bool operator==(SymbolicS, SymbolicS) { return true; }
};

/// Either a concrete integer s or the formal variable s.
using SParameter = std::variant<long, SymbolicS>;

/// Exact rational for integer s; for symbolic s, a rational function of s
/// already multiplied by prod_i Gamma(k_i - s + 1).
using CoefficientValue = std::variant<BigRational, RationalFunction>;

std::string to_string(const SParameter& s);
std::string to_string(const CoefficientValue& v);
bool coefficient_equal(const CoefficientValue& a, const CoefficientValue& b);

/// [z^k] of sum_k Delta(k) z^k / prod k_i! Gamma(k_i - s + 1).
CoefficientValue lhs_coefficient(const ExponentVector& k, const SParameter& s);

/// [z^k] of the right side: the cross product prod_{i<=m<j}(z_i - z_j) times the
/// U(m) and U(n) series with the Cauchy-type factor. Throws LengthError unless
/// |k| = m + n.
CoefficientValue rhs_coefficient(const ExponentVector& k, std::size_t m, std::size_t n,
                                 const SParameter& s);

struct Failure {
  std::string key;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Compares lhs and rhs at every k with sum k_i <= degree.
VerificationReport verify_theorem1(std::size_t m, std::size_t n, const SParameter& s, int degree,
                                   unsigned threads = 1);

/// At a fixed integer s0, checks the symbolic right side evaluated at s0 and
/// divided by prod Gamma(k_i - s0 + 1) against the integer path. Coefficients
/// whose symbolic form has a pole at s0 are skipped.
VerificationReport verify_specialization(std::size_t m, std::size_t n, long s0, int degree,
                                         unsigned threads = 1);

/// 1 / (h(lambda) h(lambda + (s^{m+n}))).
BigRational weight_a(const Partition& lambda, int s, std::size_t m, std::size_t n);

/// h((n^m)) / (h(mu) h(nu + (s^n)) h(join_shape(mu, nu, m, n, s))).
BigRational weight_b_join(const Partition& mu, const Partition& nu, int s, std::size_t m,
                          std::size_t n);

/// prod_{i,j} (m+n-i-j+1)/(mu_i+nu_j+m+n-i-j+s+1) over
/// h(mu) h(nu) h(mu + (s^m)) h(nu + (s^n)).
BigRational weight_b_product(const Partition& mu, const Partition& nu, int s, std::size_t m,
                             std::size_t n);

/// Both closed forms; throws MismatchError if they differ.
BigRational weight_b(const Partition& mu, const Partition& nu, int s, std::size_t m,
                     std::size_t n);

/// For every (mu, nu) with |mu| + |nu| <= weight:
///   sum_lambda a(lambda) c^lambda_{mu nu} / dim(lambda, m+n) = b(mu, nu) / (dim(mu, m) dim(nu, n)),
/// plus b(mu, nu; m, n) = b(nu, mu; n, m).
VerificationReport verify_corollary(std::size_t m, std::size_t n, int s, int weight,
                                    unsigned threads = 1);

/// det(1/(k_i + l_j - s + 1) | l_j^{i-1}) against its closed form. k has m
/// strictly decreasing entries, l has n >= m. Throws SingularDenominatorError
/// on a zero denominator.
bool cauchy_determinant_check(const std::vector<long>& k, const std::vector<long>& l, long s);

/// Discrete Andreief formula on {0..p-1} with weights w:
///   sum_{x in Omega^m} prod w(x_j) det(F[i][x_j]) det(G[r][x_j] | C)
///     = m! det( sum_x w F[c][x] G[r][x] | C ).
/// F is m x p, G is n x p, C is n x (n - m).
bool andreief_check(const Matrix<BigRational>& f, const Matrix<BigRational>& g,
                    const std::vector<BigRational>& w, const Matrix<BigRational>& c);

/// Randomized instances with m <= n <= 4, entries <= 12, s in {0, 1, 2}.
VerificationReport verify_cauchy_battery(int instances, std::uint64_t seed);

/// Randomized instances with m <= n <= 3, p <= 4.
VerificationReport verify_andreief_battery(int instances, std::uint64_t seed);

}  // namespace schurid

#pragma once

// Exact scalars: GMP-backed integers and rationals, univariate polynomials
// and rational functions over Q in a formal variable s.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace schurid {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Serializes as "numerator/denominator", always including the denominator.
std::string to_string(const BigRational& q);

BigInt factorial(unsigned long n);

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The highest stored coefficient is never zero; the zero polynomial stores
/// nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  /// The polynomial a + b*s.
  static Polynomial linear(const BigRational& a, const BigRational& b);
  static Polynomial variable() { return linear(0, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(std::size_t i) const;
  BigRational leading() const;

  BigRational evaluate(const BigRational& s0) const;
  /// Returns p(s + c).
  Polynomial shifted(const BigRational& c) const;
  /// Scales so the leading coefficient is 1. The zero polynomial is unchanged.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// num/den with gcd(num, den) = 1 and den monic, so structural equality is
/// equality of rational functions.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(const BigRational& c)  // NOLINT: implicit lift of constants
      : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws PoleError when s0 is a root of the denominator.
  BigRational evaluate(const BigRational& s0) const;
  bool has_pole_at(const BigRational& s0) const;
  /// Returns f(s + c).
  RationalFunction shifted(const BigRational& c) const;
  RationalFunction reciprocal() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Gamma(k - s + 1) / Gamma(l - s + 1) as a rational function of s, built from
/// Gamma(x + 1) = x Gamma(x).
RationalFunction gamma_ratio(unsigned long k, unsigned long l);

/// 1/Gamma(k - s + 1) = 1/(k - s)! for k >= s; exactly 0 at the poles k < s.
BigRational reciprocal_gamma_int(long k, long s);

/// Cross-multiplied comparison. Canonical forms make this agree with ==.
bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);

/// Exact evaluation; throws PoleError at a root of the denominator.
BigRational ratfun_eval(const RationalFunction& f, const BigRational& s0);

}  // namespace schurid

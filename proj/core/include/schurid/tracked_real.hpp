#pragma once

// Arbitrary-precision ball arithmetic on top of MPFR. A TrackedReal is a
// midpoint with a radius; the true value lies in [mid - rad, mid + rad].
// Midpoints round to nearest, radii are always rounded upward.

#include <mpfr.h>

#include <string>

#include "schurid/exact.hpp"

namespace schurid {

/// Working precision in significant decimal digits.
struct Precision {
  unsigned digits = 50;
  mpfr_prec_t bits() const;
  Precision doubled() const { return Precision{digits * 2}; }
};

/// RAII owner of an mpfr_t. Copies keep the source precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits = 64);
  MpReal(const MpReal& o);
  MpReal(MpReal&& o) noexcept;
  MpReal& operator=(const MpReal& o);
  MpReal& operator=(MpReal&& o) noexcept;
  ~MpReal();

  static MpReal from_long(long v, mpfr_prec_t bits);
  static MpReal from_double(double v, mpfr_prec_t bits);
  static MpReal from_rational(const BigRational& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static MpReal from_string(const std::string& s, mpfr_prec_t bits);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  friend int compare(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

class TrackedReal {
 public:
  /// Exact zero at the default precision.
  TrackedReal();
  TrackedReal(MpReal mid, MpReal rad);

  static TrackedReal exact(long v, Precision p = {});
  static TrackedReal from_rational(const BigRational& q, Precision p = {});
  static TrackedReal from_double(double v, Precision p = {});
  static TrackedReal from_bits(long v, mpfr_prec_t bits);

  const MpReal& value() const { return mid_; }
  const MpReal& abs_error() const { return rad_; }
  mpfr_prec_t precision() const { return mid_.precision(); }
  double value_double() const { return mid_.to_double(); }
  double error_double() const { return rad_.to_double(MPFR_RNDU); }

  /// Upper bound on |x| over the ball.
  MpReal magnitude_upper() const;
  /// Lower bound on |x| over the ball (0 if the ball contains 0).
  MpReal magnitude_lower() const;
  bool contains_zero() const;
  bool contains(const MpReal& x) const;
  bool contains(const BigRational& q) const;
  bool overlaps(const TrackedReal& o) const;
  /// rad / |mid| rounded up; +inf for a zero midpoint with nonzero radius.
  double relative_error() const;

  /// Adds `extra` (rounded up) to the radius.
  TrackedReal widened(const MpReal& extra) const;

  TrackedReal operator-() const;
  TrackedReal& operator+=(const TrackedReal& o);
  TrackedReal& operator-=(const TrackedReal& o);
  TrackedReal& operator*=(const TrackedReal& o);
  /// Throws std::domain_error if the divisor ball contains zero.
  TrackedReal& operator/=(const TrackedReal& o);

  friend TrackedReal operator+(TrackedReal a, const TrackedReal& b) { return a += b; }
  friend TrackedReal operator-(TrackedReal a, const TrackedReal& b) { return a -= b; }
  friend TrackedReal operator*(TrackedReal a, const TrackedReal& b) { return a *= b; }
  friend TrackedReal operator/(TrackedReal a, const TrackedReal& b) { return a /= b; }

  /// Multiplies by an exact integer.
  TrackedReal scaled(long c) const;
  /// Divides by an exact nonzero integer.
  TrackedReal divided(unsigned long c) const;
  TrackedReal pow(unsigned long e) const;
  /// Exact scaling by 2^e.
  TrackedReal ldexp(long e) const;

  std::string to_string(int digits = 20) const;

 private:
  MpReal mid_;
  MpReal rad_;
};

TrackedReal abs(const TrackedReal& x);
TrackedReal exp(const TrackedReal& x);

/// Radius bits: radii are plain upper bounds and need little precision.
inline constexpr mpfr_prec_t kRadiusBits = 64;

}  // namespace schurid

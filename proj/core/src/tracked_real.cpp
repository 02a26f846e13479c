#include "schurid/tracked_real.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace schurid {

namespace {

MpReal abs_up(const MpReal& x) {
  MpReal r(kRadiusBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

MpReal add_up(const MpReal& a, const MpReal& b) {
  MpReal r(kRadiusBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

MpReal mul_up(const MpReal& a, const MpReal& b) {
  MpReal r(kRadiusBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// Bound on the round-to-nearest error of a result at `bits` precision.
MpReal rounding_term(const MpReal& result, mpfr_prec_t bits) {
  MpReal r = abs_up(result);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(bits), MPFR_RNDU);
  return r;
}

mpfr_prec_t joint_bits(const TrackedReal& a, const TrackedReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

TrackedReal::TrackedReal() : mid_(Precision{}.bits()), rad_(kRadiusBits) {}

TrackedReal::TrackedReal(MpReal mid, MpReal rad) : mid_(std::move(mid)), rad_(kRadiusBits) {
  mpfr_abs(rad_.get(), rad.get(), MPFR_RNDU);
}

TrackedReal TrackedReal::exact(long v, Precision p) { return from_bits(v, p.bits()); }

TrackedReal TrackedReal::from_bits(long v, mpfr_prec_t bits) {
  MpReal mid(bits);
  const int inexact = mpfr_set_si(mid.get(), v, MPFR_RNDN);
  TrackedReal r(std::move(mid), MpReal(kRadiusBits));
  if (inexact) r.rad_ = rounding_term(r.mid_, bits);
  return r;
}

TrackedReal TrackedReal::from_rational(const BigRational& q, Precision p) {
  const mpfr_prec_t bits = p.bits();
  MpReal mid(bits);
  const int inexact = mpfr_set_q(mid.get(), q.get_mpq_t(), MPFR_RNDN);
  TrackedReal r(std::move(mid), MpReal(kRadiusBits));
  if (inexact) r.rad_ = rounding_term(r.mid_, bits);
  return r;
}

TrackedReal TrackedReal::from_double(double v, Precision p) {
  MpReal mid(std::max<mpfr_prec_t>(p.bits(), 53));
  mpfr_set_d(mid.get(), v, MPFR_RNDN);  // exact for bits >= 53
  return TrackedReal(std::move(mid), MpReal(kRadiusBits));
}

MpReal TrackedReal::magnitude_upper() const { return add_up(abs_up(mid_), rad_); }

MpReal TrackedReal::magnitude_lower() const {
  MpReal a(kRadiusBits);
  mpfr_abs(a.get(), mid_.get(), MPFR_RNDD);
  mpfr_sub(a.get(), a.get(), rad_.get(), MPFR_RNDD);
  if (a.sign() < 0) mpfr_set_zero(a.get(), 1);
  return a;
}

bool TrackedReal::contains_zero() const {
  MpReal a(mid_.precision());
  mpfr_abs(a.get(), mid_.get(), MPFR_RNDN);
  return mpfr_lessequal_p(a.get(), rad_.get()) != 0;
}

bool TrackedReal::contains(const MpReal& x) const {
  MpReal d(std::max(mid_.precision(), x.precision()) + 2);
  mpfr_sub(d.get(), x.get(), mid_.get(), MPFR_RNDN);
  MpReal ad = abs_up(d);
  // |x - mid| rounded can undershoot by one ulp; compare against a padded radius.
  const MpReal slack = rounding_term(d, d.precision());
  return mpfr_lessequal_p(ad.get(), add_up(rad_, slack).get()) != 0;
}

bool TrackedReal::contains(const BigRational& q) const {
  MpReal lo(mid_.precision()), hi(mid_.precision());
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return mpfr_cmp_q(lo.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi.get(), q.get_mpq_t()) >= 0;
}

bool TrackedReal::overlaps(const TrackedReal& o) const {
  MpReal d(joint_bits(*this, o));
  mpfr_sub(d.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  MpReal ad(kRadiusBits);
  mpfr_abs(ad.get(), d.get(), MPFR_RNDD);
  return mpfr_lessequal_p(ad.get(), add_up(rad_, o.rad_).get()) != 0;
}

double TrackedReal::relative_error() const {
  if (rad_.is_zero()) return 0.0;
  if (mid_.is_zero()) return std::numeric_limits<double>::infinity();
  MpReal r(kRadiusBits);
  MpReal m(kRadiusBits);
  mpfr_abs(m.get(), mid_.get(), MPFR_RNDD);
  mpfr_div(r.get(), rad_.get(), m.get(), MPFR_RNDU);
  return r.to_double(MPFR_RNDU);
}

TrackedReal TrackedReal::widened(const MpReal& extra) const {
  TrackedReal r = *this;
  r.rad_ = add_up(rad_, abs_up(extra));
  return r;
}

TrackedReal TrackedReal::operator-() const {
  TrackedReal r = *this;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

TrackedReal& TrackedReal::operator+=(const TrackedReal& o) {
  const mpfr_prec_t bits = joint_bits(*this, o);
  MpReal mid(bits);
  const int inexact = mpfr_add(mid.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  MpReal rad = add_up(rad_, o.rad_);
  if (inexact) rad = add_up(rad, rounding_term(mid, bits));
  mid_ = std::move(mid);
  rad_ = std::move(rad);
  return *this;
}

TrackedReal& TrackedReal::operator-=(const TrackedReal& o) { return *this += -o; }

TrackedReal& TrackedReal::operator*=(const TrackedReal& o) {
  const mpfr_prec_t bits = joint_bits(*this, o);
  MpReal mid(bits);
  const int inexact = mpfr_mul(mid.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  // |ab - (a+da)(b+db)| <= |a| rb + |b| ra + ra rb
  MpReal rad = add_up(add_up(mul_up(abs_up(mid_), o.rad_), mul_up(abs_up(o.mid_), rad_)),
                      mul_up(rad_, o.rad_));
  if (inexact) rad = add_up(rad, rounding_term(mid, bits));
  mid_ = std::move(mid);
  rad_ = std::move(rad);
  return *this;
}

TrackedReal& TrackedReal::operator/=(const TrackedReal& o) {
  if (o.contains_zero()) throw std::domain_error("TrackedReal: division by a ball containing zero");
  const mpfr_prec_t bits = joint_bits(*this, o);
  MpReal q(bits);
  const int inexact = mpfr_div(q.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  // |A/B - a/b| <= (ra + |a/b| rb) / (|b| - rb), with |a/b| <= |q| (1 + 2^{1-bits})
  MpReal qmag = abs_up(q);
  qmag = add_up(qmag, rounding_term(q, bits));
  MpReal num = add_up(rad_, mul_up(qmag, o.rad_));
  MpReal den = o.magnitude_lower();
  MpReal rad(kRadiusBits);
  mpfr_div(rad.get(), num.get(), den.get(), MPFR_RNDU);
  if (inexact) rad = add_up(rad, rounding_term(q, bits));
  mid_ = std::move(q);
  rad_ = std::move(rad);
  return *this;
}

TrackedReal TrackedReal::scaled(long c) const {
  return *this * from_bits(c, std::max<mpfr_prec_t>(precision(), 64));
}

TrackedReal TrackedReal::divided(unsigned long c) const {
  if (c == 0) throw std::domain_error("TrackedReal::divided by zero");
  TrackedReal r = *this;
  const int inexact = mpfr_div_ui(r.mid_.get(), mid_.get(), c, MPFR_RNDN);
  MpReal rad(kRadiusBits);
  mpfr_div_ui(rad.get(), rad_.get(), c, MPFR_RNDU);
  if (inexact) rad = add_up(rad, rounding_term(r.mid_, precision()));
  r.rad_ = std::move(rad);
  return r;
}

TrackedReal TrackedReal::pow(unsigned long e) const {
  TrackedReal result = from_bits(1, precision());
  TrackedReal base = *this;
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

TrackedReal TrackedReal::ldexp(long e) const {
  TrackedReal r = *this;
  mpfr_mul_2si(r.mid_.get(), mid_.get(), e, MPFR_RNDN);
  mpfr_mul_2si(r.rad_.get(), rad_.get(), e, MPFR_RNDU);
  return r;
}

std::string TrackedReal::to_string(int digits) const {
  return mid_.to_string(digits) + " +/- " + rad_.to_string(3);
}

TrackedReal abs(const TrackedReal& x) { return x.value().sign() < 0 ? -x : x; }

TrackedReal exp(const TrackedReal& x) {
  const mpfr_prec_t bits = x.precision();
  MpReal mid(bits), hi(bits), lo(bits), edge(bits);
  mpfr_exp(mid.get(), x.value().get(), MPFR_RNDN);
  mpfr_add(edge.get(), x.value().get(), x.abs_error().get(), MPFR_RNDU);
  mpfr_exp(hi.get(), edge.get(), MPFR_RNDU);
  mpfr_sub(edge.get(), x.value().get(), x.abs_error().get(), MPFR_RNDD);
  mpfr_exp(lo.get(), edge.get(), MPFR_RNDD);
  MpReal up(kRadiusBits), down(kRadiusBits);
  mpfr_sub(up.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(down.get(), mid.get(), lo.get(), MPFR_RNDU);
  MpReal rad = mpfr_greaterequal_p(up.get(), down.get()) ? up : down;
  rad = add_up(rad, rounding_term(mid, bits));
  return TrackedReal(std::move(mid), std::move(rad));
}

}  // namespace schurid

#include "schurid/tracked_real.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace schurid {

mpfr_prec_t Precision::bits() const {
  // log2(10) ~ 3.3219; guard bits absorb conversion slop.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.32192809489)) + 16;
}

MpReal::MpReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

MpReal::MpReal(const MpReal& o) {
  mpfr_init2(value_, o.precision());
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& o) noexcept {
  // Steal the limbs and leave o as a valid 2-bit zero.
  *value_ = *o.value_;
  mpfr_init2(o.value_, MPFR_PREC_MIN);
  mpfr_set_zero(o.value_, 1);
}

MpReal& MpReal::operator=(const MpReal& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& o) noexcept {
  if (this != &o) mpfr_swap(value_, o.value_);
  return *this;
}

MpReal::~MpReal() { mpfr_clear(value_); }

MpReal MpReal::from_long(long v, mpfr_prec_t bits) {
  MpReal r(bits);
  mpfr_set_si(r.value_, v, MPFR_RNDN);
  return r;
}

MpReal MpReal::from_double(double v, mpfr_prec_t bits) {
  MpReal r(bits);
  mpfr_set_d(r.value_, v, MPFR_RNDN);
  return r;
}

MpReal MpReal::from_rational(const BigRational& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpReal r(bits);
  mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
  return r;
}

MpReal MpReal::from_string(const std::string& s, mpfr_prec_t bits) {
  MpReal r(bits);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("MpReal: cannot parse '" + s + "'");
  return r;
}

std::string MpReal::to_string(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits > 0 ? digits - 1 : 0, value_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(buf, &mpfr_free_str);
  return std::string(buf);
}

}  // namespace schurid

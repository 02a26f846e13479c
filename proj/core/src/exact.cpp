#include "schurid/exact.hpp"

#include <sstream>
#include <stdexcept>

#include "schurid/errors.hpp"

namespace schurid {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const BigRational& a, const BigRational& b) {
  return Polynomial({a, b});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational Polynomial::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

BigRational Polynomial::evaluate(const BigRational& s0) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s0 + *it;
  return acc;
}

Polynomial Polynomial::shifted(const BigRational& c) const {
  // Horner in the polynomial ring: p(s + c) = (...(a_d (s+c) + a_{d-1})(s+c) ...).
  Polynomial acc;
  const Polynomial step = linear(c, 1);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  const BigRational inv = 1 / leading();
  r *= inv;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
  Polynomial rem = a;
  if (a.degree() < b.degree()) return {Polynomial(), rem};
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigRational lead_inv = 1 / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree()) - db;
    const BigRational f = rem.leading() * lead_inv;
    quot[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) rem.coeffs_[shift + i] -= f * b.coeffs_[i];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigRational mag = neg ? BigRational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << "s";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  const BigRational lead = den_.leading();
  if (lead != 1) {
    const BigRational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

bool RationalFunction::has_pole_at(const BigRational& s0) const { return den_.evaluate(s0) == 0; }

BigRational RationalFunction::evaluate(const BigRational& s0) const {
  const BigRational d = den_.evaluate(s0);
  if (d == 0) throw PoleError("rational function has a pole at s = " + s0.get_str());
  return num_.evaluate(s0) / d;
}

RationalFunction RationalFunction::shifted(const BigRational& c) const {
  return RationalFunction(num_.shifted(c), den_.shifted(c));
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("RationalFunction::reciprocal of zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.reciprocal();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

RationalFunction gamma_ratio(unsigned long k, unsigned long l) {
  const unsigned long lo = k < l ? k : l;
  const unsigned long hi = k < l ? l : k;
  // Gamma(hi - s + 1) / Gamma(lo - s + 1) = prod_{t = lo+1}^{hi} (t - s)
  Polynomial p = Polynomial::constant(1);
  for (unsigned long t = lo + 1; t <= hi; ++t) p *= Polynomial::linear(BigRational(t), -1);
  RationalFunction r(std::move(p));
  return k >= l ? r : r.reciprocal();
}

BigRational reciprocal_gamma_int(long k, long s) {
  const long arg = k - s;
  if (arg < 0) return 0;
  return BigRational(BigInt(1), factorial(static_cast<unsigned long>(arg)));
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

BigRational ratfun_eval(const RationalFunction& f, const BigRational& s0) { return f.evaluate(s0); }

}  // namespace schurid

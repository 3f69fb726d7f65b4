#include "gvkit/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

Interval::Interval(mpfr_prec_t prec, bool) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(kDefaultPrec, true) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t prec) : Interval(prec, true) {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(o.precision(), true) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::of_rational(const Rational& r, mpfr_prec_t prec) {
  Interval out(prec, true);
  mpfr_set_q(out.lo_, r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, r.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::of_bigint(const BigInt& z, mpfr_prec_t prec) {
  Interval out(prec, true);
  mpfr_set_z(out.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, z.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::operator+(const Interval& o) const {
  Interval out(std::max(precision(), o.precision()), true);
  mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::operator-(const Interval& o) const {
  Interval out(std::max(precision(), o.precision()), true);
  mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator-() const {
  Interval out(precision(), true);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator*(const Interval& o) const {
  Interval out(std::max(precision(), o.precision()), true);
  mpfr_t t;
  mpfr_init2(t, out.precision());
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval Interval::operator/(const Interval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw DomainError("interval division by interval containing zero");
  Interval out(std::max(precision(), o.precision()), true);
  mpfr_t t;
  mpfr_init2(t, out.precision());
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw DomainError("interval log requires lo > 0");
  Interval out(precision(), true);
  mpfr_log(out.lo_, lo_, MPFR_RNDD);
  mpfr_log(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::log2() const {
  if (mpfr_sgn(lo_) <= 0) throw DomainError("interval log2 requires lo > 0");
  Interval out(precision(), true);
  mpfr_log2(out.lo_, lo_, MPFR_RNDD);
  mpfr_log2(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw DomainError("interval sqrt requires lo >= 0");
  Interval out(precision(), true);
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::min(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()), true);
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()), true);
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

int Interval::compare(const Rational& r) const {
  if (mpfr_cmp_q(hi_, r.get_mpq_t()) < 0) return -1;
  if (mpfr_cmp_q(lo_, r.get_mpq_t()) > 0) return 1;
  return 0;
}

namespace {

Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational r(mant);
  if (e >= 0) {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r *= Rational(shift);
  } else {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    r /= Rational(shift);
  }
  return r;
}

}  // namespace

Rational Interval::lower_rational() const { return mpfr_to_rational(lo_); }
Rational Interval::upper_rational() const { return mpfr_to_rational(hi_); }

long Interval::floor_lower() const {
  mpfr_t f;
  mpfr_init2(f, precision());
  mpfr_floor(f, lo_);
  long v = mpfr_get_si(f, MPFR_RNDD);
  mpfr_clear(f);
  return v;
}

long Interval::precision_bits() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  long bits;
  if (mpfr_zero_p(w)) {
    bits = precision();
  } else {
    mpfr_exp_t e = mpfr_get_exp(w);  // 2^(e-1) <= w < 2^e
    bits = -static_cast<long>(e);
    if (bits > precision()) bits = precision();
  }
  mpfr_clear(w);
  return bits;
}

std::string Interval::str(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, precision());
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), fmt, mid);
  mpfr_clear(mid);
  return buf;
}

Interval entropy_interval(unsigned long big_q, const Rational& x,
                          mpfr_prec_t prec) {
  if (big_q < 2) throw UsageError("entropy base must be >= 2");
  Rational limit(big_q - 1, big_q);
  if (x < 0 || x > limit)
    throw DomainError("entropy argument outside [0, 1 - 1/Q]");
  if (x == 0) return Interval(0, prec);
  if (x == limit) return Interval(1, prec);

  Interval xi = Interval::of_rational(x, prec);
  Interval one_minus = Interval::of_rational(Rational(1) - x, prec);
  Interval lnq = Interval(static_cast<long>(big_q), prec).log();
  // x ln(Q-1) - x ln x - (1-x) ln(1-x), all in nats, then / ln Q
  Interval acc = -(xi * xi.log()) - one_minus * one_minus.log();
  if (big_q > 2)
    acc = acc + xi * Interval(static_cast<long>(big_q - 1), prec).log();
  return acc / lnq;
}

EntropyValue q_ary_entropy(unsigned long big_q, const Rational& x,
                           long requested_bits) {
  if (requested_bits < 1) throw UsageError("requested precision must be >= 1");
  mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(requested_bits + 32);  // guard bits
  for (int attempt = 0; attempt < 8; ++attempt) {
    Interval v = entropy_interval(big_q, x, prec);
    if (v.precision_bits() >= requested_bits)
      return EntropyValue{v, v.precision_bits()};
    prec *= 2;
  }
  throw ResourceError("entropy precision not reached");
}

}  // namespace gvkit

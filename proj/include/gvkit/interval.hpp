#pragma once

#include <mpfr.h>

#include <string>

#include "gvkit/exact.hpp"

namespace gvkit {

/// Closed interval [lo, hi] with certified outward rounding. Every
/// operation rounds the lower endpoint down (MPFR_RNDD) and the upper
/// endpoint up (MPFR_RNDU), so the true real result is always enclosed.
///
/// Used for the transcendental side of the workbench (logs, entropies,
/// square roots of non-squares, Hoeffding radii). Anything decidable in
/// exact rational arithmetic never goes through here.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  Interval();
  explicit Interval(long v, mpfr_prec_t prec = kDefaultPrec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval of_rational(const Rational& r,
                              mpfr_prec_t prec = kDefaultPrec);
  static Interval of_bigint(const BigInt& z, mpfr_prec_t prec = kDefaultPrec);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must not straddle 0
  Interval operator-() const;

  Interval log() const;   // natural log; requires lo > 0
  Interval log2() const;  // requires lo > 0
  Interval sqrt() const;  // requires lo >= 0

  static Interval min(const Interval& a, const Interval& b);
  static Interval max(const Interval& a, const Interval& b);

  /// Certified three-way comparison against an exact rational:
  /// -1 if hi < r, +1 if lo > r, 0 if r could be inside.
  int compare(const Rational& r) const;

  bool contains(const Rational& r) const { return compare(r) == 0; }

  /// Exact rational equal to the stored endpoint (binary floats are
  /// rationals), suitable for conservative downstream use.
  Rational lower_rational() const;
  Rational upper_rational() const;

  /// Largest integer <= lo (a certified floor of anything in the interval).
  long floor_lower() const;

  double lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double midpoint_d() const { return (lower_d() + upper_d()) / 2; }

  /// floor(-log2(hi - lo)), i.e. certified correct bits; large constant
  /// when the interval is a point.
  long precision_bits() const;

  std::string str(int digits = 12) const;

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

 private:
  Interval(mpfr_prec_t prec, bool);  // uninitialized endpoints
  mpfr_t lo_, hi_;
};

/// H_Q(x) = x log_Q(Q-1) - x log_Q x - (1-x) log_Q(1-x), continuously
/// extended with H(0) = 0 and H(1-1/Q) = 1 returned exactly.
/// Domain: 0 <= x <= 1 - 1/Q. Q is the effective alphabet (q classically,
/// q^2 for the symplectic weight distribution).
Interval entropy_interval(unsigned long big_q, const Rational& x,
                          mpfr_prec_t prec = Interval::kDefaultPrec);

/// Entropy with a precision statement attached.
struct EntropyValue {
  Interval value;
  long precision_bits;
};

EntropyValue q_ary_entropy(unsigned long big_q, const Rational& x,
                           long requested_bits = 60);

}  // namespace gvkit

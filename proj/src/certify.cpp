#include "gvkit/certify.hpp"

#include <algorithm>
#include <sstream>

#include "gvkit/errors.hpp"
#include "gvkit/linear_code.hpp"

namespace gvkit {

void CodeParams::validate() const {
  if (q < 2) throw UsageError("q must be >= 2");
  if (n < 1 || k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  if (d < 1 || d > n) throw UsageError("need 1 <= d <= n");
}

std::string mode_name(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::kUnion:
      return "union";
    case CertificateMode::kBonferroni3:
      return "bonferroni3";
    case CertificateMode::kBonferroniT:
      return "bonferroni_t";
    case CertificateMode::kQuantumUnion:
      return "quantum_union";
    case CertificateMode::kQuantumBonferroniT:
      return "quantum_bonferroni_t";
  }
  return "?";
}

namespace {

// C(w, i) for big w, machine i.
BigInt big_binomial(const BigInt& w, unsigned long i) {
  BigInt num = 1;
  for (unsigned long j = 0; j < i; ++j) num *= w - static_cast<long>(j);
  BigInt fac = factorial(i);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fac.get_mpz_t());
  return out;
}

std::string key_line(const std::string& key, const Rational& r) {
  return key + ": " + rational_string(r) + " (" + decimal_string(r) + ")\n";
}

}  // namespace

std::string CertificateReport::serialize() const {
  std::ostringstream out;
  out << "gvkit-certificate v1\n";
  out << "mode: " << mode_name(mode) << "\n";
  out << "q: " << q << "\nn: " << n << "\nk: " << k << "\nd: " << d << "\n";
  out << key_line("a", a);
  out << "W: " << w_size.get_str() << "\n";
  out << key_line("b", b);
  out << "t: " << t << "\n";
  for (size_t i = 0; i < partial_sums.size(); ++i)
    out << key_line("S[" + std::to_string(i + 1) + "]", partial_sums[i]);
  out << key_line("bound_on_failure", bound_on_failure);
  if (correction) {
    out << key_line("correction", *correction);
    out << "correction_decaying: " << (correction_decaying ? "yes" : "no")
        << "\n";
  }
  out << "verdict: " << verdict() << "\n";
  return out.str();
}

std::string ConstantsReport::serialize() const {
  std::ostringstream out;
  out << "gvkit-constants v1\n";
  out << "q: " << q << "\n";
  out << "domain: " << (symplectic ? "symplectic" : "hamming") << "\n";
  out << key_line("delta", delta);
  out << key_line("epsilon", epsilon);
  if (n) {
    out << "n: " << *n << "\n";
    out << "escape_exponent: " << escape_exponent->str() << " +/- 2^-"
        << escape_exponent->precision_bits() << "\n";
    out << "chernoff_exponent: " << chernoff_exponent->str() << " +/- 2^-"
        << chernoff_exponent->precision_bits() << "\n";
    out << "h_n: " << h_n->str() << "\n";
  }
  if (!notes.empty()) out << "notes: " << notes << "\n";
  return out.str();
}

ConstantsReport derive_constants(unsigned long q, const Rational& delta,
                                 bool symplectic,
                                 std::optional<unsigned long> n) {
  if (q < 2) throw UsageError("q must be >= 2");
  const unsigned long big_q = symplectic ? q * q : q;
  const Rational limit(big_q - 1, big_q);
  if (delta <= 0 || delta >= limit)
    throw DomainError("delta outside (0, 1 - 1/Q)");

  // largest eps with 2(delta-eps) - Q/(Q-1) (delta-eps)^2 >= delta+eps
  const Rational coef(big_q, big_q - 1);
  auto holds = [&](const Rational& eps) {
    Rational y = delta - eps;
    return 2 * y - coef * y * y >= delta + eps;
  };
  Rational lo = 0, hi = delta;  // holds(lo), !holds(hi)
  const Rational tol(BigInt(1), big_pow(2ul, 40ul));
  while (hi - lo > tol || lo == 0) {
    Rational mid = (lo + hi) / 2;
    if (holds(mid))
      lo = mid;
    else
      hi = mid;
  }

  ConstantsReport report;
  report.q = q;
  report.symplectic = symplectic;
  report.delta = delta;
  report.epsilon = lo;
  if (!n) return report;

  report.n = n;
  const unsigned long len = *n;
  auto radius = [&](const Rational& x) {
    Rational scaled = x * Rational(len);
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    unsigned long r = f.get_ui();
    return r > len ? len : r;
  };
  unsigned long w_low = radius(delta - lo);
  unsigned long w_high = radius(delta);
  BigInt vol_low = symplectic ? symplectic_volume(q, len, w_low)
                              : hamming_volume(q, len, w_low);
  BigInt vol_high = symplectic ? symplectic_volume(q, len, w_high)
                               : hamming_volume(q, len, w_high);
  Rational ratio = make_rational(vol_low, vol_high);
  Interval escape = -(Interval::of_rational(ratio).log2()) /
                    Interval(static_cast<long>(len));
  Rational chern_rat = lo * lo / (2 * (delta + lo));
  Interval chernoff =
      Interval::of_rational(chern_rat) / Interval(2).log();
  report.escape_exponent = escape;
  report.chernoff_exponent = chernoff;
  report.h_n = Interval::min(escape, chernoff);
  if (report.h_n->upper_d() <= 0)
    report.notes = "finite-n exponent not positive; t defaults to 1";
  return report;
}

unsigned long default_odd_t(const Interval& h, unsigned long q,
                            unsigned long n) {
  Interval log_q2 = Interval(2).log() / Interval(static_cast<long>(q)).log();
  Interval x = h * log_q2 * Interval(static_cast<long>(n)) / Interval(2);
  if (x.upper_d() <= 0) return 1;
  Interval nonneg = Interval::max(x, Interval(0));
  long t = nonneg.sqrt().floor_lower();
  if (t < 1) return 1;
  return t % 2 == 1 ? static_cast<unsigned long>(t)
                    : static_cast<unsigned long>(t - 1);
}

std::pair<Rational, BigInt> gilbert_bound(unsigned long q, unsigned long n,
                                          unsigned long d) {
  if (d < 1 || d > n) throw UsageError("need 1 <= d <= n");
  if (q < 2) throw UsageError("q must be >= 2");
  Rational ratio = make_rational(big_pow(q, n), hamming_volume(q, n, d - 1));
  return {ratio, ceil_of(ratio)};
}

bool varshamov_condition(const CodeParams& p) {
  p.validate();
  return big_pow(p.q, p.k) * hamming_volume(p.q, p.n, p.d - 1) <
         big_pow(p.q, p.n);
}

CertificateReport bonferroni_failure_bound(const CodeParams& p,
                                           unsigned long t,
                                           BonferroniModel model,
                                           std::optional<Rational> gamma,
                                           const ConstantsReport* constants) {
  p.validate();
  if (t % 2 == 0) throw UsageError("t must be odd");
  BigInt w = projective_message_count(p.q, p.k);
  if (BigInt(t) > w) throw UsageError("t exceeds |W|");

  CertificateReport rep;
  rep.mode = t == 3 ? CertificateMode::kBonferroni3
                    : (t == 1 ? CertificateMode::kUnion
                              : CertificateMode::kBonferroniT);
  rep.q = p.q;
  rep.n = p.n;
  rep.k = p.k;
  rep.d = p.d;
  rep.a = make_rational(hamming_volume(p.q, p.n, p.d - 1), big_pow(p.q, p.n));
  rep.w_size = w;
  rep.b = Rational(w) * rep.a;
  rep.t = t;

  Rational a_pow = 1;
  Rational bound = 0;
  Rational abs_sum = 0;
  for (unsigned long i = 1; i <= t; ++i) {
    a_pow *= rep.a;
    Rational s_i = Rational(big_binomial(w, i)) * a_pow;
    rep.partial_sums.push_back(s_i);
    abs_sum += s_i;
    if (i % 2 == 1)
      bound += s_i;
    else
      bound -= s_i;
  }
  rep.bound_on_failure = bound;

  if (model == BonferroniModel::kCorrected) {
    Rational g;
    if (gamma) {
      g = *gamma;
      rep.correction_decaying = g < 1;
    } else {
      if (constants == nullptr || !constants->h_n)
        throw UsageError("corrected model needs gamma or derived constants");
      // gamma = 2^{-e} >= 2^{-h' n + 1} with h' = max(h/2, k/2n)
      Interval h_prime =
          Interval::max(*constants->h_n / Interval(2),
                        Interval::of_rational(Rational(p.k, 2 * p.n)));
      long e = (h_prime * Interval(static_cast<long>(p.n)) - Interval(1))
                   .floor_lower();
      rep.correction_decaying = e >= 1;
      if (e >= 1)
        g = make_rational(BigInt(1), big_pow(2ul, static_cast<unsigned long>(e)));
      else
        g = big_pow(2ul, static_cast<unsigned long>(1 - e));
    }
    rep.correction = g * abs_sum;
    rep.certified = rep.bound_on_failure + *rep.correction < 1;
  } else {
    rep.certified = rep.bound_on_failure < 1;
  }
  return rep;
}

namespace {

// |W| for successive k, incrementally: W_k = q W_{k-1} + 1.
class ProjectiveCount {
 public:
  explicit ProjectiveCount(unsigned long q) : q_(q) {}
  const BigInt& advance() {  // first call yields k = 1
    w_ = w_ * q_ + 1;
    return w_;
  }

 private:
  unsigned long q_;
  BigInt w_ = 0;
};

Rational bonferroni_sum(const BigInt& w, const Rational& a, unsigned long t) {
  Rational a_pow = 1;
  Rational bound = 0;
  for (unsigned long i = 1; i <= t; ++i) {
    a_pow *= a;
    Rational s_i = Rational(big_binomial(w, i)) * a_pow;
    if (i % 2 == 1)
      bound += s_i;
    else
      bound -= s_i;
  }
  return bound;
}

unsigned long clamp_odd(unsigned long t, const BigInt& w) {
  BigInt limit = w < 1 ? BigInt(1) : w;
  if (BigInt(t) <= limit) return t;
  unsigned long wl = limit.get_ui();
  return wl % 2 == 1 ? wl : wl - 1;
}

}  // namespace

ClassicalCertifyResult certify_classical(unsigned long q, unsigned long n,
                                         unsigned long d,
                                         ClassicalCertifyMode mode,
                                         const Rational& c,
                                         std::optional<unsigned long> t_override) {
  if (q < 2 || d < 1 || d > n) throw UsageError("bad parameters");
  if (mode == ClassicalCertifyMode::kSqrtN && c <= 0)
    throw UsageError("c must be positive");

  const BigInt q_n = big_pow(q, n);
  const BigInt vol = hamming_volume(q, n, d - 1);
  const Rational a = make_rational(vol, q_n);

  unsigned long t_target = 1;
  if (t_override) {
    if (*t_override % 2 == 0 || *t_override < 1)
      throw UsageError("t must be odd and >= 1");
    t_target = *t_override;
  } else {
    Rational delta(d, n);
    if (delta > 0 && delta < Rational(q - 1, q)) {
      ConstantsReport constants = derive_constants(q, delta, false, n);
      t_target = default_odd_t(*constants.h_n, q, n);
    }
  }

  ClassicalCertifyResult res;
  res.t_used = t_target;

  ProjectiveCount counter(q);
  unsigned long best_bonf = 0;
  BigInt best_w = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    const BigInt& w = counter.advance();
    bool threshold_ok = false;
    switch (mode) {
      case ClassicalCertifyMode::kUnion:
        threshold_ok = Rational(w) * a < 1;
        break;
      case ClassicalCertifyMode::kWarmup17:
        threshold_ok = Rational(w) * a < Rational(17, 10);
        break;
      case ClassicalCertifyMode::kSqrtN: {
        Rational lhs = Rational(w) * a / c;
        threshold_ok = lhs * lhs < Rational(n);
        break;
      }
    }
    if (threshold_ok) res.max_k_threshold = k;

    unsigned long t_k = clamp_odd(t_target, w);
    if (bonferroni_sum(w, a, t_k) < 1) {
      best_bonf = k;
      best_w = w;
    }
  }
  res.max_k_bonferroni = best_bonf;
  if (best_bonf > 0) {
    CodeParams p{q, n, best_bonf, d};
    res.report =
        bonferroni_failure_bound(p, clamp_odd(t_target, best_w));
    res.report->mode = CertificateMode::kBonferroniT;
  }
  return res;
}

CertificateReport quantum_union_certify(const CodeParams& p) {
  p.validate();
  if (!p.quantum_domain())
    throw DomainError("delta must be < 1 - 1/q^2");
  CertificateReport rep;
  rep.mode = CertificateMode::kQuantumUnion;
  rep.q = p.q;
  rep.n = p.n;
  rep.k = p.k;
  rep.d = p.d;
  rep.a = make_rational(symplectic_volume(p.q, p.n, p.d - 1),
                        big_pow(p.q, 2 * p.n));
  rep.w_size = big_pow(p.q, 2 * p.n - p.k) - 1;  // all nonzero messages
  rep.b = Rational(rep.w_size) * rep.a;
  rep.t = 1;
  rep.partial_sums = {rep.b};
  rep.bound_on_failure = rep.b;
  rep.certified = rep.b < 1;
  return rep;
}

QuantumImprovedResult quantum_improved_certify(
    const CodeParams& p, const Rational& c_delta,
    std::optional<unsigned long> t_override,
    const ConstantsReport* constants) {
  p.validate();
  if (!p.quantum_domain())
    throw DomainError("delta must be < 1 - 1/q^2");
  if (c_delta <= 0) throw UsageError("c_delta must be positive");

  const BigInt vol = symplectic_volume(p.q, p.n, p.d - 1);
  const BigInt q_2n = big_pow(p.q, 2 * p.n);
  const Rational a = make_rational(vol, q_2n);
  const BigInt w = (big_pow(p.q, 2 * p.n - p.k) - 1) / (p.q - 1);

  QuantumImprovedResult res;
  // (q^{2n-k}-1)/(q-1) < c sqrt(n) q^{2n}/Vol, decided by squaring
  Rational lhs = Rational(w) * a / c_delta;
  res.threshold_certified = lhs * lhs < Rational(p.n);

  unsigned long t = 1;
  if (t_override) {
    if (*t_override % 2 == 0) throw UsageError("t must be odd");
    t = *t_override;
  } else {
    ConstantsReport local;
    const ConstantsReport* use = constants;
    if (use == nullptr || !use->h_n) {
      local = derive_constants(p.q, p.delta(), true, p.n);
      use = &local;
    }
    // t = min{ sqrt(a n)/2, sqrt(h' log_q2 n/2) } with the finite-n
    // surrogates: escape exponent for a, h_n for h'
    unsigned long t_h = default_odd_t(*use->h_n, p.q, p.n);
    Interval ell_sq = *use->escape_exponent *
                      Interval(static_cast<long>(p.n)) / Interval(4);
    long ell = ell_sq.upper_d() <= 0
                   ? 1
                   : Interval::max(ell_sq, Interval(0)).sqrt().floor_lower();
    unsigned long t_a =
        ell < 1 ? 1
                : (ell % 2 == 1 ? static_cast<unsigned long>(ell)
                                : static_cast<unsigned long>(ell - 1));
    t = std::min(t_h, t_a);
  }
  t = clamp_odd(t, w);

  CertificateReport rep;
  rep.mode = CertificateMode::kQuantumBonferroniT;
  rep.q = p.q;
  rep.n = p.n;
  rep.k = p.k;
  rep.d = p.d;
  rep.a = a;
  rep.w_size = w;
  rep.b = Rational(w) * a;
  rep.t = t;
  Rational a_pow = 1;
  Rational bound = 0;
  for (unsigned long i = 1; i <= t; ++i) {
    a_pow *= a;
    Rational s_i = Rational(big_binomial(w, i)) * a_pow;
    rep.partial_sums.push_back(s_i);
    if (i % 2 == 1)
      bound += s_i;
    else
      bound -= s_i;
  }
  rep.bound_on_failure = bound;
  rep.certified = bound < 1;
  res.bonferroni = rep;
  return res;
}

bool feng_ma_condition(unsigned long q, unsigned long n, unsigned long k,
                       unsigned long d) {
  if (!(n > k && k >= 2)) throw UsageError("need n > k >= 2");
  if (d < 2) throw UsageError("need d >= 2");
  if (k % 2 != 0) throw UsageError("k must be even");
  return symplectic_volume(q, n, d - 1) < big_pow(q, k + 2);
}

bool quantum_hamming_check(unsigned long q, unsigned long n, unsigned long k,
                           unsigned long d) {
  if (q < 2 || d < 1) throw UsageError("bad parameters");
  if (k > n) throw UsageError("logical count exceeds length");
  return big_pow(q, n - k) >= symplectic_volume(q, n, (d - 1) / 2);
}

bool quantum_singleton_check(unsigned long n, unsigned long k,
                             unsigned long d) {
  if (d < 1) throw UsageError("d must be >= 1");
  return n + 2 >= k + 2 * d;
}

}  // namespace gvkit

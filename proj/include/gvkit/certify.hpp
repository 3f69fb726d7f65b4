#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvkit/combinatorics.hpp"
#include "gvkit/exact.hpp"
#include "gvkit/interval.hpp"

namespace gvkit {

/// (q, n, k, d) with delta = d/n. The classical domain needs
/// delta < 1 - 1/q, the quantum domain delta < 1 - 1/q^2.
struct CodeParams {
  unsigned long q = 2;
  unsigned long n = 1;
  unsigned long k = 1;
  unsigned long d = 1;

  Rational delta() const { return Rational(d, n); }
  bool classical_domain() const {
    return delta() < Rational(q - 1, q);
  }
  bool quantum_domain() const {
    return delta() < Rational(q * q - 1, q * q);
  }
  void validate() const;
};

enum class CertificateMode {
  kUnion,
  kBonferroni3,
  kBonferroniT,
  kQuantumUnion,
  kQuantumBonferroniT,
};

std::string mode_name(CertificateMode mode);

/// Exact-rational certificate of a bound evaluation. verdict is
/// "certified" iff bound_on_failure < 1 (and, in the corrected model,
/// iff bound + correction < 1).
struct CertificateReport {
  CertificateMode mode = CertificateMode::kUnion;
  unsigned long q = 0, n = 0, k = 0, d = 0;
  Rational a;              // Pr[E_m] = Vol(n, d-1) / q^n
  BigInt w_size;           // number of events in the union
  Rational b;              // |W| * a
  unsigned long t = 1;     // odd truncation depth
  std::vector<Rational> partial_sums;  // S_1..S_t, idealized model
  Rational bound_on_failure;           // alternating sum of S_i
  std::optional<Rational> correction;  // corrected-model additive term
  bool correction_decaying = true;
  bool certified = false;

  std::string verdict() const {
    return certified ? "certified" : "not_certified";
  }
  /// Versioned key:value document ("gvkit-certificate v1").
  std::string serialize() const;
};

/// Finite-n replacements for the asymptotic existence constants.
/// epsilon is the largest rational (bisection grid 2^-40) with
///   2(delta-eps) - Q/(Q-1) (delta-eps)^2 >= delta+eps,
/// Q = q (hamming) or q^2 (symplectic). When n is given, the report
/// carries certified intervals for the per-n escape and Chernoff
/// exponents (base-2, normalized by n) replacing h_delta.
struct ConstantsReport {
  unsigned long q = 2;
  bool symplectic = false;
  Rational delta;
  Rational epsilon;
  std::optional<unsigned long> n;
  std::optional<Interval> escape_exponent;    // -log2(Vol ratio)/n
  std::optional<Interval> chernoff_exponent;  // eps^2/(2(delta+eps) ln 2)
  std::optional<Interval> h_n;                // min of the two
  std::string notes;

  std::string serialize() const;
};

ConstantsReport derive_constants(unsigned long q, const Rational& delta,
                                 bool symplectic,
                                 std::optional<unsigned long> n = {});

/// Default truncation depth: largest odd integer <= sqrt(h log_q2 n/2),
/// never below 1. Uses the certified lower endpoint of h.
unsigned long default_odd_t(const Interval& h, unsigned long q,
                            unsigned long n);

// ---- classical bounds -----------------------------------------------------

/// Gilbert bound: (q^n / Vol_q(n, d-1), its ceiling).
std::pair<Rational, BigInt> gilbert_bound(unsigned long q, unsigned long n,
                                          unsigned long d);

/// Varshamov: q^k < q^n / Vol_q(n, d-1), strict, exact.
bool varshamov_condition(const CodeParams& p);

enum class BonferroniModel { kIdealized, kCorrected };

/// Truncated inclusion-exclusion certificate with
/// S_i = C(|W|, i) a^i. t must be odd and <= |W|. The corrected model
/// adds gamma * sum_i S_i with gamma supplied or derived (see report).
CertificateReport bonferroni_failure_bound(
    const CodeParams& p, unsigned long t,
    BonferroniModel model = BonferroniModel::kIdealized,
    std::optional<Rational> gamma = {},
    const ConstantsReport* constants = nullptr);

enum class ClassicalCertifyMode { kUnion, kWarmup17, kSqrtN };

struct ClassicalCertifyResult {
  unsigned long max_k_threshold = 0;   // from the mode's inequality
  unsigned long max_k_bonferroni = 0;  // idealized Bonferroni sum < 1
  unsigned long t_used = 1;
  std::optional<CertificateReport> report;  // at max_k_bonferroni
};

/// Largest certified k per mode:
///   union:    |W| a < 1
///   warmup17: |W| < 1.7 q^n / Vol
///   sqrt_n:   |W| < c sqrt(n) q^n / Vol  (exact via squaring)
/// Every mode also reports the largest k whose idealized Bonferroni sum
/// at depth t (clamped per-k to an odd value <= |W|) stays below 1.
ClassicalCertifyResult certify_classical(
    unsigned long q, unsigned long n, unsigned long d,
    ClassicalCertifyMode mode, const Rational& c = Rational(1),
    std::optional<unsigned long> t_override = {});

// ---- quantum bounds -------------------------------------------------------

/// Appendix-style basic quantum GV certificate:
/// (q^{2n-k} - 1) Vol_q^S(2n, d-1) < q^{2n}, exact.
CertificateReport quantum_union_certify(const CodeParams& p);

struct QuantumImprovedResult {
  bool threshold_certified = false;  // (q^{2n-k}-1)/(q-1) < c sqrt(n) q^{2n}/Vol
  CertificateReport bonferroni;      // quantum Bonferroni certificate
};

QuantumImprovedResult quantum_improved_certify(
    const CodeParams& p, const Rational& c_delta,
    std::optional<unsigned long> t_override = {},
    const ConstantsReport* constants = nullptr);

/// Hermitian-construction sufficient condition: requires n > k >= 2,
/// d >= 2, k even; true iff Vol_q^S(2n', d-1)-style sum < q^{k+2}.
bool feng_ma_condition(unsigned long q, unsigned long n, unsigned long k,
                       unsigned long d);

/// Necessary conditions for [[n, k, d]]_q (k = logical count).
bool quantum_hamming_check(unsigned long q, unsigned long n, unsigned long k,
                           unsigned long d);
bool quantum_singleton_check(unsigned long n, unsigned long k,
                             unsigned long d);

}  // namespace gvkit

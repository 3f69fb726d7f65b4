#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gvkit/exact.hpp"
#include "gvkit/field.hpp"
#include "gvkit/linear_code.hpp"
#include "gvkit/symplectic.hpp"

namespace gvkit {

/// Bernoulli estimate with a two-sided Hoeffding confidence interval
/// (distribution-free; the radius is a certified rational upper bound on
/// sqrt(ln(2/alpha) / (2 trials))). Reproducible from (seed, stream_tag):
/// trial i uses the counter stream (stream_tag << 32) | i.
struct MonteCarloEstimate {
  uint64_t successes = 0;
  uint64_t trials = 0;
  Rational p_hat;
  Rational ci_low, ci_high;
  Rational confidence{99, 100};
  uint64_t seed = 0;
  uint64_t stream_tag = 0;
  std::optional<Rational> rejection_rate;  // orthogonal-tuple variant only
};

/// Certified upper bound on the two-sided Hoeffding radius.
Rational hoeffding_radius(uint64_t trials, const Rational& confidence);

enum class Metric { kHamming, kSymplectic };

/// Pr[sum of ell uniform ball vectors stays in the ball], ball of the
/// given radius (the workbench convention is radius = d - 1 everywhere).
/// The orthogonal variant (symplectic only) draws i.i.d. tuples and
/// rejects any that are not pairwise symplectically orthogonal; the
/// acceptance rate is ~ q^{-ell(ell-1)/2}, practical up to ell = 4.
MonteCarloEstimate estimate_sum_in_ball(const Field& field, size_t n,
                                        size_t radius, size_t ell,
                                        uint64_t trials, uint64_t seed,
                                        Metric metric, bool orthogonal,
                                        unsigned workers = 1);

/// Fraction of uniformly sampled k x n generator matrices whose code has
/// minimum distance < d (rank-deficient counts as failure).
MonteCarloEstimate estimate_min_distance_failure(const Field& field, size_t n,
                                                 size_t k, size_t d,
                                                 uint64_t trials,
                                                 uint64_t seed,
                                                 unsigned workers = 1);

/// Exact Pr over ALL generator matrices that some projective codeword has
/// weight < d, by full enumeration. Cap q^{kn} <= 2^24.
Rational exact_failure_probability_tiny(const Field& field, size_t n,
                                        size_t k, size_t d);

/// Exact Bonferroni data from the true joint event probabilities:
/// S_i = sum over i-subsets X of W of Pr[E_X], all exact.
struct JointBonferroni {
  Rational union_probability;
  std::vector<Rational> partial_sums;  // S_1 .. S_|W|
};

JointBonferroni exact_joint_bonferroni(const Field& field, size_t n, size_t k,
                                       size_t d);

/// Ratio statistics for |ball ∩ intersection of perps| * q^ell / Vol over
/// seeded samples of ell independent ball vectors (resampled while
/// linearly dependent; the orthogonal variant additionally requires the
/// tuple to be mutually symplectically orthogonal).
struct ConcentrationSummary {
  size_t samples = 0;
  std::vector<Rational> ratios;
  Rational min, median, max;
};

ConcentrationSummary verify_intersection_concentration(
    const Field& field, size_t n, size_t radius, size_t ell, size_t samples,
    uint64_t seed, bool orthogonal);

}  // namespace gvkit

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvkit/certify.hpp"
#include "gvkit/errors.hpp"
#include "gvkit/montecarlo.hpp"
#include "oracles.hpp"

using namespace gvkit;

TEST_CASE("hoeffding radius") {
  // sqrt(ln(200)/(2*1e5)) = 0.0051471...
  Rational r = hoeffding_radius(100000, Rational(99, 100));
  CHECK(r > Rational(51, 10000));
  CHECK(r < Rational(52, 10000));
  // certified upper bound: r^2 >= ln(200)/(2e5), checked via the interval
  Interval lhs = Interval::of_rational(r * r);
  Interval rhs = Interval::of_rational(Rational(200)).log() /
                 Interval::of_rational(Rational(200000));
  CHECK(lhs.upper_rational() >= rhs.lower_rational());
  CHECK(hoeffding_radius(400000, Rational(99, 100)) < r);  // shrinks ~1/sqrt
  CHECK_THROWS_AS(hoeffding_radius(0, Rational(99, 100)), UsageError);
  CHECK_THROWS_AS(hoeffding_radius(10, Rational(1)), UsageError);
}

TEST_CASE("exact tiny failure probability: frozen values") {
  Field f2(2), f3(3);
  CHECK(exact_failure_probability_tiny(f2, 2, 1, 2) == Rational(3, 4));
  CHECK(exact_failure_probability_tiny(f2, 1, 1, 1) == Rational(1, 2));
  CHECK(exact_failure_probability_tiny(f2, 3, 2, 0) == Rational(0));
  // q=3, n=2, k=1, d=2: G fails unless both entries are nonzero -> 5/9
  CHECK(exact_failure_probability_tiny(f3, 2, 1, 2) == Rational(5, 9));
  // d = 1: only the all-zero row fails for k = 1
  CHECK(exact_failure_probability_tiny(f2, 4, 1, 1) == Rational(1, 16));
  CHECK_THROWS_AS(exact_failure_probability_tiny(f2, 13, 2, 1),
                  ResourceError);
}

// independent oracle for the joint sums: per-subset enumeration
namespace {
JointBonferroni joint_by_subsets(const Field& f, size_t n, size_t k,
                                 size_t d) {
  std::vector<std::vector<uint32_t>> w_set;
  for_each_projective_message(
      f, k, [&](const std::vector<uint32_t>& m) { w_set.push_back(m); });
  const size_t wc = w_set.size();
  BigInt total = big_pow(f.q(), static_cast<unsigned long>(k * n));

  auto subset_count = [&](uint32_t mask) {  // #G with all m in mask failing
    BigInt count = 0;
    std::vector<uint32_t> gen(k * n, 0);
    do {
      bool all_fail = true;
      for (size_t m = 0; m < wc && all_fail; ++m) {
        if (!(mask & (1u << m))) continue;
        size_t weight = 0;
        for (size_t c = 0; c < n; ++c) {
          FieldElement acc{0};
          for (size_t r = 0; r < k; ++r)
            acc = f.add(acc, f.mul({w_set[m][r]}, {gen[r * n + c]}));
          weight += acc.v != 0;
        }
        all_fail = weight < d;
      }
      if (all_fail) ++count;
    } while (oracles::next_odometer(gen, f.q()));
    return count;
  };

  JointBonferroni out;
  out.partial_sums.assign(wc, Rational(0));
  BigInt union_count = 0;
  for (uint32_t mask = 1; mask < (1u << wc); ++mask) {
    BigInt c = subset_count(mask);
    int bits = __builtin_popcount(mask);
    out.partial_sums[bits - 1] += make_rational(c, total);
    // inclusion-exclusion for the union
    union_count += (bits % 2 == 1) ? c : -c;
  }
  out.union_probability = make_rational(union_count, total);
  return out;
}
}  // namespace

TEST_CASE("joint bonferroni sums match the per-subset oracle") {
  Field f2(2), f3(3);
  for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{
           {2, 1}, {3, 2}, {2, 2}}) {
    for (size_t d = 1; d <= n; ++d) {
      auto fast = exact_joint_bonferroni(f2, n, k, d);
      auto slow = joint_by_subsets(f2, n, k, d);
      CHECK(fast.union_probability == slow.union_probability);
      REQUIRE(fast.partial_sums.size() == slow.partial_sums.size());
      for (size_t i = 0; i < fast.partial_sums.size(); ++i)
        CHECK(fast.partial_sums[i] == slow.partial_sums[i]);
    }
  }
  auto fast3 = exact_joint_bonferroni(f3, 2, 1, 2);
  auto slow3 = joint_by_subsets(f3, 2, 1, 2);
  CHECK(fast3.union_probability == slow3.union_probability);
  CHECK(fast3.union_probability ==
        exact_failure_probability_tiny(f3, 2, 1, 2));
}

TEST_CASE("bonferroni truncations bracket the exact union probability") {
  Field f2(2);
  for (size_t n = 1; n <= 4; ++n)
    for (size_t k = 1; k <= std::min<size_t>(2, n); ++k)
      for (size_t d = 1; d <= n; ++d) {
        auto jb = exact_joint_bonferroni(f2, n, k, d);
        Rational acc = 0;
        for (size_t i = 0; i < jb.partial_sums.size(); ++i) {
          acc += (i % 2 == 0) ? jb.partial_sums[i] : -jb.partial_sums[i];
          if (i % 2 == 0)
            CHECK(jb.union_probability <= acc);
          else
            CHECK(acc <= jb.union_probability);
        }
        // the full alternating sum is exact
        CHECK(acc == jb.union_probability);
      }
}

TEST_CASE("min-distance failure estimates cover known values") {
  Field f2(2);
  // exact value 1/16 for (q=2, n=4, k=1, d=1)
  auto est = estimate_min_distance_failure(f2, 4, 1, 1, 100000, 5);
  CHECK(est.ci_low <= Rational(1, 16));
  CHECK(Rational(1, 16) <= est.ci_high);
  // exact value 3/4 for (q=2, n=2, k=1, d=2)
  auto est2 = estimate_min_distance_failure(f2, 2, 1, 2, 100000, 6);
  CHECK(est2.ci_low <= Rational(3, 4));
  CHECK(Rational(3, 4) <= est2.ci_high);
  // the union bound is an upper bound (plus CI slack)
  CodeParams p{2, 2, 1, 2};
  auto union_rep = bonferroni_failure_bound(p, 1);
  CHECK(est2.p_hat <= union_rep.bound_on_failure + (est2.ci_high - est2.p_hat));
}

TEST_CASE("estimates are reproducible and merge across workers") {
  Field f2(2);
  auto a = estimate_min_distance_failure(f2, 4, 2, 2, 20000, 77, 1);
  auto b = estimate_min_distance_failure(f2, 4, 2, 2, 20000, 77, 4);
  CHECK(a.successes == b.successes);  // worker split cannot change results
  auto c = estimate_min_distance_failure(f2, 4, 2, 2, 20000, 78, 2);
  CHECK(a.successes != c.successes);

  auto s1 = estimate_sum_in_ball(f2, 30, 12, 2, 5000, 3, Metric::kSymplectic,
                                 false, 1);
  auto s2 = estimate_sum_in_ball(f2, 30, 12, 2, 5000, 3, Metric::kSymplectic,
                                 false, 3);
  CHECK(s1.successes == s2.successes);
}

TEST_CASE("sum-in-ball: degenerate and error cases") {
  Field f2(2);
  // ball = whole space: the sum always lands inside
  auto all = estimate_sum_in_ball(f2, 6, 6, 2, 2000, 1, Metric::kHamming,
                                  false);
  CHECK(all.p_hat == 1);
  CHECK(all.ci_high == 1);
  CHECK_THROWS_AS(
      estimate_sum_in_ball(f2, 6, 3, 2, 0, 1, Metric::kHamming, false),
      UsageError);
  CHECK_THROWS_AS(
      estimate_sum_in_ball(f2, 6, 3, 1, 10, 1, Metric::kHamming, false),
      UsageError);
  CHECK_THROWS_AS(
      estimate_sum_in_ball(f2, 6, 3, 7, 10, 1, Metric::kHamming, false),
      UsageError);  // ell > n
  CHECK_THROWS_AS(
      estimate_sum_in_ball(f2, 6, 3, 2, 10, 1, Metric::kHamming, true),
      UsageError);
  CHECK_THROWS_AS(
      verify_intersection_concentration(f2, 4, 2, 9, 5, 1, false),
      UsageError);  // ell > 2n
  CHECK_THROWS_AS(
      verify_intersection_concentration(f2, 4, 0, 1, 5, 1, false),
      UsageError);  // nonzero tuple from the zero ball
}

TEST_CASE("orthogonal tuple sampling records the rejection rate") {
  Field f2(2);
  auto est = estimate_sum_in_ball(f2, 8, 4, 2, 4000, 9, Metric::kSymplectic,
                                  true, 2);
  REQUIRE(est.rejection_rate.has_value());
  // two random ball vectors are orthogonal with probability ~ 1/q
  CHECK(*est.rejection_rate > Rational(3, 10));
  CHECK(*est.rejection_rate < Rational(7, 10));
}

TEST_CASE("sum re-entry decays slower near the entropy boundary (reported)") {
  Field f2(2);
  // delta = 0.49 vs 0.25 at n = 100: comparative run, reported only
  auto near = estimate_sum_in_ball(f2, 100, 49, 2, 20000, 17,
                                   Metric::kHamming, false, 2);
  auto far = estimate_sum_in_ball(f2, 100, 25, 2, 20000, 17,
                                  Metric::kHamming, false, 2);
  MESSAGE("p_hat at delta=0.49: ", decimal_string(near.p_hat, 4),
          ", at delta=0.25: ", decimal_string(far.p_hat, 4));
  CHECK(near.trials == 20000);
  CHECK(far.trials == 20000);
}

TEST_CASE("intersection concentration: ell = 0 gives ratio exactly 1") {
  Field f2(2);
  auto s = verify_intersection_concentration(f2, 4, 2, 0, 5, 11, false);
  for (const auto& r : s.ratios) CHECK(r == 1);
  CHECK(s.median == 1);
}

TEST_CASE("intersection concentration: ratios are positive and finite") {
  Field f2(2);
  auto s = verify_intersection_concentration(f2, 6, 3, 2, 25, 13, false);
  CHECK(s.samples == 25);
  CHECK(s.min > 0);
  CHECK(s.min <= s.median);
  CHECK(s.median <= s.max);
  auto so = verify_intersection_concentration(f2, 6, 3, 2, 25, 13, true);
  CHECK(so.min > 0);
}

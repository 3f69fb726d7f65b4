#include "gvkit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "gvkit/interval.hpp"
#include "gvkit/matrix.hpp"

namespace gvkit {

namespace {

// stream tags; trial i runs on stream (tag << 32) | i
constexpr uint64_t kBallSumTag = 0x10;
constexpr uint64_t kMinDistTag = 0x11;
constexpr uint64_t kConcentrationTag = 0x12;

struct Tally {
  uint64_t successes = 0;
  uint64_t rejections = 0;
  Tally& operator+=(const Tally& o) {
    successes += o.successes;
    rejections += o.rejections;
    return *this;
  }
};

template <typename Fn>
Tally run_trials(uint64_t trials, unsigned workers, Fn&& per_trial) {
  if (workers < 1) workers = 1;
  if (workers > trials) workers = static_cast<unsigned>(trials);
  if (workers <= 1) {
    Tally t;
    for (uint64_t i = 0; i < trials; ++i) t += per_trial(i);
    return t;
  }
  std::vector<Tally> partial(workers);
  std::vector<std::thread> threads;
  const uint64_t chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t begin = w * chunk;
    uint64_t end = std::min(trials, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      Tally local;
      for (uint64_t i = begin; i < end; ++i) local += per_trial(i);
      partial[w] = local;
    });
  }
  for (auto& t : threads) t.join();
  Tally total;
  for (const auto& p : partial) total += p;  // associative merge
  return total;
}

MonteCarloEstimate finish(uint64_t successes, uint64_t trials,
                          uint64_t rejections, bool with_rejections,
                          uint64_t seed, uint64_t tag) {
  MonteCarloEstimate est;
  est.successes = successes;
  est.trials = trials;
  est.p_hat = Rational(BigInt(successes), BigInt(trials));
  est.p_hat.canonicalize();
  Rational radius = hoeffding_radius(trials, est.confidence);
  est.ci_low = std::max(Rational(0), Rational(est.p_hat - radius));
  est.ci_high = std::min(Rational(1), Rational(est.p_hat + radius));
  est.seed = seed;
  est.stream_tag = tag;
  if (with_rejections) {
    Rational r(BigInt(rejections), BigInt(rejections + trials));
    r.canonicalize();
    est.rejection_rate = r;
  }
  return est;
}

}  // namespace

Rational hoeffding_radius(uint64_t trials, const Rational& confidence) {
  if (trials == 0) throw UsageError("trials must be >= 1");
  Rational alpha = Rational(1) - confidence;
  if (alpha <= 0 || alpha >= 1) throw UsageError("confidence in (0,1)");
  Interval inside = Interval::of_rational(Rational(2) / alpha).log() /
                    Interval::of_rational(Rational(BigInt(2 * trials)));
  return inside.sqrt().upper_rational();
}

MonteCarloEstimate estimate_sum_in_ball(const Field& field, size_t n,
                                        size_t radius, size_t ell,
                                        uint64_t trials, uint64_t seed,
                                        Metric metric, bool orthogonal,
                                        unsigned workers) {
  if (trials == 0) throw UsageError("trials must be >= 1");
  if (ell < 2 || ell > n) throw UsageError("need n >= ell >= 2");
  if (orthogonal && metric != Metric::kSymplectic)
    throw UsageError("orthogonal variant needs the symplectic metric");

  Tally tally;
  if (metric == Metric::kHamming) {
    HammingBallSampler sampler(field, n, radius);
    tally = run_trials(trials, workers, [&](uint64_t i) {
      CounterRng rng(seed, (kBallSumTag << 32) | i);
      FqVector sum(field, n);
      for (size_t j = 0; j < ell; ++j) sum = add(sum, sampler.sample(rng));
      Tally t;
      t.successes = hamming_weight(sum) <= radius ? 1 : 0;
      return t;
    });
  } else {
    SymplecticBallSampler sampler(field, n, radius);
    tally = run_trials(trials, workers, [&](uint64_t i) {
      CounterRng rng(seed, (kBallSumTag << 32) | i);
      Tally t;
      std::vector<SymplecticVector> tuple;
      for (;;) {
        tuple.clear();
        for (size_t j = 0; j < ell; ++j) tuple.push_back(sampler.sample(rng));
        if (!orthogonal) break;
        bool ok = true;
        for (size_t x = 0; x < ell && ok; ++x)
          for (size_t y = x + 1; y < ell; ++y)
            if (symplectic_inner(tuple[x], tuple[y]).v != 0) {
              ok = false;
              break;
            }
        if (ok) break;
        ++t.rejections;
      }
      SymplecticVector sum(field, n);
      for (const auto& v : tuple) sum = add(sum, v);
      t.successes = symplectic_weight(sum) <= radius ? 1 : 0;
      return t;
    });
  }
  return finish(tally.successes, trials, tally.rejections, orthogonal, seed,
                kBallSumTag);
}

MonteCarloEstimate estimate_min_distance_failure(const Field& field, size_t n,
                                                 size_t k, size_t d,
                                                 uint64_t trials,
                                                 uint64_t seed,
                                                 unsigned workers) {
  if (trials == 0) throw UsageError("trials must be >= 1");
  if (!detail::enumeration_within_cap(field.q(), k))
    throw ResourceError("q^k exceeds the enumeration cap 2^26");
  Tally tally = run_trials(trials, workers, [&](uint64_t i) {
    LinearCode code =
        sample_generator_matrix(field, k, n, seed, (kMinDistTag << 32) | i);
    Tally t;
    // early exit as soon as any weight drops below d
    size_t dist = min_hamming_distance(code, d >= 1 ? d - 1 : 0);
    t.successes = dist < d ? 1 : 0;
    return t;
  });
  return finish(tally.successes, trials, 0, false, seed, kMinDistTag);
}

namespace {

// Enumerates every k x n generator matrix (odometer in base q, one entry
// bumped by +1 per step) and tallies, for each subset of the projective
// message set W, how many matrices make exactly that subset fail
// (codeword weight < d).
struct TinyEnumeration {
  std::vector<BigInt> mask_count;  // indexed by failure bitmask over W
  BigInt total;
  size_t w_count = 0;
};

TinyEnumeration enumerate_tiny(const Field& field, size_t n, size_t k,
                               size_t d) {
  if (k < 1 || n < 1) throw UsageError("need n, k >= 1");
  const double bits =
      static_cast<double>(k) * n * std::log2(static_cast<double>(field.q()));
  if (bits > 24 + 1e-9)
    throw ResourceError("q^{kn} exceeds the enumeration cap 2^24");

  std::vector<std::vector<uint32_t>> messages;
  for_each_projective_message(field, k, [&](const std::vector<uint32_t>& m) {
    messages.push_back(m);
  });
  const size_t wc = messages.size();
  if (wc > 24) throw ResourceError("|W| too large for the joint oracle");

  const uint32_t q = field.q();
  std::vector<uint32_t> gen(k * n, 0);
  // codewords and weights for the all-zero matrix
  std::vector<std::vector<uint32_t>> cw(wc, std::vector<uint32_t>(n, 0));
  std::vector<size_t> weight(wc, 0);
  uint32_t fail_mask = 0;
  for (size_t m = 0; m < wc; ++m)
    if (weight[m] < d) fail_mask |= 1u << m;

  TinyEnumeration out;
  out.w_count = wc;
  out.mask_count.assign(size_t{1} << wc, BigInt(0));
  out.total = big_pow(q, static_cast<unsigned long>(k * n));

  // bump entry (r, c) by +1 mod q, updating codewords incrementally
  auto bump = [&](size_t r, size_t c) {
    gen[r * n + c] = (gen[r * n + c] + 1) % q;
    for (size_t m = 0; m < wc; ++m) {
      uint32_t coeff = messages[m][r];
      if (coeff == 0) continue;
      uint32_t before = cw[m][c];
      uint32_t after = field.add({before}, {coeff}).v;
      cw[m][c] = after;
      if ((before != 0) != (after != 0)) {
        size_t old_weight = weight[m];
        if (after != 0)
          ++weight[m];
        else
          --weight[m];
        bool was_fail = old_weight < d;
        bool is_fail = weight[m] < d;
        if (was_fail != is_fail) fail_mask ^= 1u << m;
      }
    }
  };

  for (;;) {
    out.mask_count[fail_mask] += 1;
    // odometer advance: each carry step is a +1 mod q on one entry
    size_t pos = k * n;
    while (pos-- > 0) {
      size_t r = pos / n, c = pos % n;
      bump(r, c);
      if (gen[pos] != 0) break;
    }
    if (pos == static_cast<size_t>(-1)) break;
  }
  return out;
}

}  // namespace

Rational exact_failure_probability_tiny(const Field& field, size_t n,
                                        size_t k, size_t d) {
  if (d == 0) return Rational(0);
  TinyEnumeration e = enumerate_tiny(field, n, k, d);
  return make_rational(e.total - e.mask_count[0], e.total);
}

JointBonferroni exact_joint_bonferroni(const Field& field, size_t n, size_t k,
                                       size_t d) {
  TinyEnumeration e = enumerate_tiny(field, n, k, d);
  const size_t wc = e.w_count;
  // superset sums: cover[X] = # matrices whose failure set contains X
  std::vector<BigInt> cover = e.mask_count;
  for (size_t b = 0; b < wc; ++b)
    for (size_t mask = 0; mask < cover.size(); ++mask)
      if (!(mask & (size_t{1} << b))) cover[mask] += cover[mask | (size_t{1} << b)];

  JointBonferroni out;
  out.union_probability =
      make_rational(e.total - e.mask_count[0], e.total);
  std::vector<BigInt> layer(wc + 1, BigInt(0));
  for (size_t mask = 1; mask < cover.size(); ++mask)
    layer[static_cast<size_t>(__builtin_popcountll(mask))] += cover[mask];
  for (size_t i = 1; i <= wc; ++i)
    out.partial_sums.push_back(make_rational(layer[i], e.total));
  return out;
}

ConcentrationSummary verify_intersection_concentration(
    const Field& field, size_t n, size_t radius, size_t ell, size_t samples,
    uint64_t seed, bool orthogonal) {
  if (samples == 0) throw UsageError("samples must be >= 1");
  if (ell > 2 * n)
    throw UsageError("ell exceeds the space dimension, no independent tuple");
  if (ell > 0 && radius == 0)
    throw UsageError("the zero ball has no nonzero vectors");
  SymplecticBallSampler sampler(field, n, radius);
  const BigInt vol = sampler.volume();
  const BigInt q_ell = big_pow(field.q(), ell);

  ConcentrationSummary out;
  out.samples = samples;
  for (size_t s = 0; s < samples; ++s) {
    CounterRng rng(seed, (kConcentrationTag << 32) | s);
    std::vector<SymplecticVector> tuple;
    for (;;) {
      tuple.clear();
      RowSpan span(field, 2 * n);
      bool independent = true;
      for (size_t j = 0; j < ell; ++j) {
        tuple.push_back(sampler.sample(rng));
        if (!span.add(tuple.back().flat())) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      if (orthogonal) {
        bool ok = true;
        for (size_t x = 0; x < ell && ok; ++x)
          for (size_t y = x + 1; y < ell; ++y)
            if (symplectic_inner(tuple[x], tuple[y]).v != 0) {
              ok = false;
              break;
            }
        if (!ok) continue;
      }
      break;
    }
    BigInt count = ball_orthogonal_intersection_count(field, n, radius, tuple);
    out.ratios.push_back(make_rational(count * q_ell, vol));
  }

  std::vector<Rational> sorted = out.ratios;
  std::sort(sorted.begin(), sorted.end());
  out.min = sorted.front();
  out.max = sorted.back();
  size_t mid = sorted.size() / 2;
  out.median = sorted.size() % 2 == 1
                   ? sorted[mid]
                   : (sorted[mid - 1] + sorted[mid]) / 2;
  return out;
}

}  // namespace gvkit

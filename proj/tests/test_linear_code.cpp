#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "gvkit/errors.hpp"
#include "gvkit/linear_code.hpp"
#include "oracles.hpp"

using namespace gvkit;

TEST_CASE("generator sampling: shape, range, determinism") {
  Field f3(3);
  LinearCode code = sample_generator_matrix(f3, 2, 4, 99);
  CHECK(code.k == 2);
  CHECK(code.n == 4);
  CHECK(code.generator.size() == 8);
  for (uint32_t e : code.generator) CHECK(e < 3);

  LinearCode again = sample_generator_matrix(f3, 2, 4, 99);
  CHECK(code.generator == again.generator);
  LinearCode other = sample_generator_matrix(f3, 2, 4, 100);
  CHECK(code.generator != other.generator);

  CHECK_THROWS_AS(sample_generator_matrix(f3, 5, 4, 0), UsageError);
}

TEST_CASE("single-entry matrices are uniform across seeds") {
  Field f2(2);
  int ones = 0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s)
    ones += sample_generator_matrix(f2, 1, 1, s).generator[0];
  // 5000 +- 6 sigma (sigma = 50)
  CHECK(ones > 4700);
  CHECK(ones < 5300);
}

TEST_CASE("encode") {
  Field f2(2);
  LinearCode code{f2, 4, 2, {1, 0, 1, 1, 0, 1, 1, 0}};
  CHECK(encode(FqVector(f2, {1, 1}), code) == FqVector(f2, {1, 1, 0, 1}));
  CHECK(encode(FqVector(f2, {0, 0}), code) == FqVector(f2, 4));
  // G = [I | 0]: message is copied, padding stays zero
  Field f3(3);
  LinearCode ext{f3, 4, 2, {1, 0, 0, 0, 0, 1, 0, 0}};
  CHECK(encode(FqVector(f3, {2, 1}), ext) == FqVector(f3, {2, 1, 0, 0}));
  CHECK_THROWS_AS(encode(FqVector(f2, {1}), code), UsageError);
}

TEST_CASE("projective message set: size, coverage, non-proportionality") {
  CHECK(projective_message_count(2, 3) == 7);
  CHECK(projective_message_count(3, 2) == 4);
  CHECK(projective_message_count(2, 1) == 1);

  for (uint32_t q : {2u, 3u}) {
    for (size_t k : {1ul, 2ul, 3ul}) {
      Field f(q);
      std::vector<std::vector<uint32_t>> members;
      for_each_projective_message(
          f, k, [&](const std::vector<uint32_t>& m) { members.push_back(m); });
      CHECK(BigInt(static_cast<long>(members.size())) ==
            projective_message_count(q, k));

      // every nonzero vector is a scalar multiple of exactly one member
      std::vector<uint32_t> v(k, 0);
      while (oracles::next_odometer(v, q)) {
        int matches = 0;
        for (const auto& m : members)
          for (uint32_t lambda = 1; lambda < q; ++lambda) {
            bool equal = true;
            for (size_t i = 0; i < k; ++i)
              if (f.mul({lambda}, {m[i]}).v != v[i]) {
                equal = false;
                break;
              }
            if (equal) ++matches;
          }
        CHECK(matches == 1);
      }
    }
  }
}

TEST_CASE("minimum distance: frozen examples") {
  Field f2(2);
  LinearCode repetition{f2, 5, 1, {1, 1, 1, 1, 1}};
  CHECK(min_hamming_distance(repetition) == 5);
  LinearCode padded{f2, 4, 2, {1, 0, 0, 0, 0, 1, 0, 0}};
  CHECK(min_hamming_distance(padded) == 1);
  LinearCode example{f2, 4, 2, {1, 0, 1, 1, 0, 1, 1, 0}};
  CHECK(min_hamming_distance(example) == 2);
  LinearCode deficient{f2, 4, 2, {1, 0, 1, 1, 1, 0, 1, 1}};
  CHECK(min_hamming_distance(deficient) == 0);
}

TEST_CASE("projective enumeration equals the all-messages oracle") {
  for (uint32_t q : {2u, 3u}) {
    Field f(q);
    for (int it = 0; it < 25; ++it) {
      size_t k = 1 + static_cast<size_t>(it % 4);
      size_t n = k + static_cast<size_t>(it % 5);
      LinearCode code = sample_generator_matrix(f, k, n, 1000 + it);
      size_t fast = min_hamming_distance(code, 0);  // no early exit
      size_t slow = code.full_rank() ? oracles::min_distance_all_messages(code)
                                     : 0;
      // a rank-deficient code reports 0; the oracle sees the zero codeword
      if (!code.full_rank())
        CHECK(oracles::min_distance_all_messages(code) == 0);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("distance enumeration cap") {
  Field f2(2);
  LinearCode big{f2, 30, 30, std::vector<uint32_t>(900, 0)};
  for (size_t i = 0; i < 30; ++i) big.generator[i * 30 + i] = 1;
  CHECK_THROWS_AS(min_hamming_distance(big), ResourceError);
}

TEST_CASE("codewords of fixed nonzero messages are uniform") {
  // m G is uniform over F_q^n for uniform G and any fixed m != 0
  Field f2(2);
  FqVector m(f2, {1, 1});
  std::array<int, 8> counts{};
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    LinearCode code = sample_generator_matrix(f2, 2, 3, 555, 9000 + i);
    FqVector c = encode(m, code);
    counts[c.e[0] * 4 + c.e[1] * 2 + c.e[2]]++;
  }
  for (int c : counts) {
    // 12500 +- 5 sigma (sigma ~ 105)
    CHECK(c > 12500 - 525);
    CHECK(c < 12500 + 525);
  }
}

TEST_CASE("ball sampler: weight probabilities sum to exactly 1") {
  for (uint32_t q : {2u, 3u, 5u}) {
    Field f(q);
    HammingBallSampler ball(f, 9, 4);
    Rational total = 0;
    for (size_t w = 0; w <= 4; ++w) total += ball.weight_probability(w);
    CHECK(total == 1);
  }
}

TEST_CASE("ball sampler: degenerate radii") {
  Field f2(2);
  HammingBallSampler zero_ball(f2, 6, 0);
  CounterRng rng(5, 20);
  for (int i = 0; i < 10; ++i)
    CHECK(hamming_weight(zero_ball.sample(rng)) == 0);
  CHECK(zero_ball.volume() == 1);
  CHECK_THROWS_AS(HammingBallSampler(f2, 4, 5), UsageError);
}

TEST_CASE("ball sampler: exact weight law at (q=2, n=4, d=1)") {
  Field f2(2);
  HammingBallSampler ball(f2, 4, 1);
  CHECK(ball.volume() == 5);
  CHECK(ball.weight_probability(0) == Rational(1, 5));
  CHECK(ball.weight_probability(1) == Rational(4, 5));
  CounterRng rng(77, 4);
  int w0 = 0;
  const int draws = 50000;
  for (int i = 0; i < draws; ++i)
    w0 += hamming_weight(ball.sample(rng)) == 0;
  // expect 10000 +- 5 sigma (sigma ~ 89)
  CHECK(w0 > 10000 - 450);
  CHECK(w0 < 10000 + 450);
}

TEST_CASE("ball sampler: every ball vector equally likely (q=2, n=4, d=2)") {
  Field f2(2);
  HammingBallSampler ball(f2, 4, 2);
  CHECK(ball.volume() == 11);
  CounterRng rng(3, 9);
  std::map<std::vector<uint32_t>, int> counts;
  const int draws = 110000;
  for (int i = 0; i < draws; ++i) ++counts[ball.sample(rng).e];
  CHECK(counts.size() == 11);
  for (const auto& [vec, c] : counts) {
    double p = static_cast<double>(c) / draws;
    // 1/11 +- 5 sigma, sigma = sqrt(p(1-p)/N) ~ 0.00087
    CHECK(p > 1.0 / 11 - 0.0044);
    CHECK(p < 1.0 / 11 + 0.0044);
  }
}

TEST_CASE("ball sampler covers the whole space at d = n") {
  Field f2(2);
  HammingBallSampler ball(f2, 4, 4);
  CHECK(ball.volume() == 16);
  CounterRng rng(123, 8);
  std::set<std::vector<uint32_t>> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(ball.sample(rng).e);
  CHECK(seen.size() == 16);
}

TEST_CASE("ball at d = n is uniform: chi-square over bytes") {
  Field f2(2);
  HammingBallSampler ball(f2, 8, 8);
  CounterRng rng(2718, 12);
  std::array<int, 256> counts{};
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    FqVector v = ball.sample(rng);
    int byte = 0;
    for (size_t j = 0; j < 8; ++j) byte = byte * 2 + static_cast<int>(v.e[j]);
    ++counts[byte];
  }
  double expected = draws / 256.0;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 255 degrees of freedom, alpha = 0.01 critical value 310.46
  CHECK(chi2 < 310.46);
}

TEST_CASE("serialization round trip") {
  Field f3(3);
  LinearCode code = sample_generator_matrix(f3, 3, 5, 4242);
  std::istringstream in(code.serialize());
  LinearCode back = LinearCode::parse(in);
  CHECK(back.field.q() == 3);
  CHECK(back.n == code.n);
  CHECK(back.k == code.k);
  CHECK(back.generator == code.generator);

  std::istringstream bad("2 3 1\n0 1 2\n");  // entry 2 not reduced mod 2
  CHECK_THROWS_AS(LinearCode::parse(bad), UsageError);
}

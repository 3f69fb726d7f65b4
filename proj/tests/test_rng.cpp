#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvkit/errors.hpp"
#include "gvkit/rng.hpp"

using namespace gvkit;

// Published Philox4x32-10 known-answer vectors (Random123 test set).
TEST_CASE("philox4x32-10 known answers") {
  auto zero = CounterRng::block({0, 0, 0, 0}, {0, 0});
  CHECK(zero == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu,
                                        0x9b00dbd8u});
  auto ones = CounterRng::block(
      {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
      {0xffffffffu, 0xffffffffu});
  CHECK(ones == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u,
                                        0x6d5451fdu});
  auto pi = CounterRng::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu,
                               0x03707344u},
                              {0xa4093822u, 0x299f31d0u});
  CHECK(pi == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u,
                                      0x24126ea1u});
}

TEST_CASE("streams are pure functions of (seed, stream, counter)") {
  CounterRng a(123, 5), b(123, 5);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u32() == b.next_u32());

  CounterRng c(123, 6);
  bool all_equal = true;
  CounterRng a2(123, 5);
  for (int i = 0; i < 16; ++i) all_equal &= a2.next_u32() == c.next_u32();
  CHECK_FALSE(all_equal);

  CounterRng d(124, 5);
  CounterRng a3(123, 5);
  all_equal = true;
  for (int i = 0; i < 16; ++i) all_equal &= a3.next_u32() == d.next_u32();
  CHECK_FALSE(all_equal);
}

TEST_CASE("below is in range and roughly uniform") {
  CounterRng rng(2024, 1);
  CHECK(rng.below(uint64_t{1}) == 0);
  CHECK_THROWS_AS(rng.below(uint64_t{0}), UsageError);
  std::array<int, 6> counts{};
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[rng.below(uint64_t{6})];
  for (int c : counts) {
    CHECK(c > 10000 - 600);
    CHECK(c < 10000 + 600);
  }
}

TEST_CASE("big below respects the bound and hits high words") {
  CounterRng rng(7, 3);
  BigInt bound = big_pow(10ul, 30ul);
  BigInt max_seen = 0;
  for (int i = 0; i < 200; ++i) {
    BigInt r = rng.below(bound);
    CHECK(r >= 0);
    CHECK(r < bound);
    if (r > max_seen) max_seen = r;
  }
  CHECK(max_seen > bound / 4);  // would fail if upper limbs were dropped
  CHECK(rng.below(BigInt(1)) == 0);
  CHECK_THROWS_AS(rng.below(BigInt(0)), UsageError);
}

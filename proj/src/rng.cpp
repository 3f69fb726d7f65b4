#include "gvkit/rng.hpp"

#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

}  // namespace

std::array<uint32_t, 4> CounterRng::block(
    const std::array<uint32_t, 4>& counter,
    const std::array<uint32_t, 2>& key) {
  uint32_t c0 = counter[0], c1 = counter[1], c2 = counter[2], c3 = counter[3];
  uint32_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    if (round != 0) {
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c0, hi0, lo0);
    mulhilo(kMul1, c2, hi1, lo1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
  }
  return {c0, c1, c2, c3};
}

void CounterRng::refill() {
  std::array<uint32_t, 4> counter = {
      static_cast<uint32_t>(block_index_),
      static_cast<uint32_t>(block_index_ >> 32),
      static_cast<uint32_t>(stream_),
      static_cast<uint32_t>(stream_ >> 32)};
  std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed_),
                                 static_cast<uint32_t>(seed_ >> 32)};
  buffer_ = block(counter, key);
  ++block_index_;
  buffered_ = 4;
}

uint32_t CounterRng::next_u32() {
  if (buffered_ == 0) refill();
  return buffer_[4 - buffered_--];
}

uint64_t CounterRng::next_u64() {
  uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

uint64_t CounterRng::below(uint64_t n) {
  if (n == 0) throw UsageError("below(0)");
  if (n == 1) return 0;
  // reject the tail so every residue is equally likely
  uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

BigInt CounterRng::below(const BigInt& n) {
  if (n <= 0) throw UsageError("below(<=0)");
  if (n == 1) return 0;
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  size_t words = (bits + 31) / 32;
  uint32_t top_mask =
      bits % 32 == 0 ? 0xFFFFFFFFu : ((1u << (bits % 32)) - 1u);
  std::vector<uint32_t> limbs(words);
  for (;;) {
    for (size_t i = 0; i < words; ++i) limbs[i] = next_u32();
    limbs[words - 1] &= top_mask;
    BigInt r;
    mpz_import(r.get_mpz_t(), words, -1 /*lsw first*/, sizeof(uint32_t),
               0 /*native endian*/, 0, limbs.data());
    if (r < n) return r;
  }
}

}  // namespace gvkit

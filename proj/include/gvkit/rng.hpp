#pragma once

#include <array>
#include <cstdint>

#include "gvkit/exact.hpp"

namespace gvkit {

/// Philox4x32-10 counter generator. Output is a pure function of
/// (seed, stream, block counter), so trials keyed by (seed, stream_id,
/// trial index) reproduce bit-identically no matter how work is split
/// across workers.
///
/// Keying: key = (seed lo32, seed hi32),
///         counter = (block lo32, block hi32, stream lo32, stream hi32).
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : seed_(seed), stream_(stream) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  uint32_t next_u32();
  uint64_t next_u64();

  /// Uniform in [0, n); unbiased via rejection. n >= 1.
  uint64_t below(uint64_t n);

  /// Uniform in [0, n) for arbitrary-precision n >= 1; unbiased.
  BigInt below(const BigInt& n);

  /// Raw Philox4x32-10 block, exposed for known-answer tests.
  static std::array<uint32_t, 4> block(const std::array<uint32_t, 4>& counter,
                                       const std::array<uint32_t, 2>& key);

 private:
  void refill();

  uint64_t seed_;
  uint64_t stream_;
  uint64_t block_index_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int buffered_ = 0;
};

}  // namespace gvkit

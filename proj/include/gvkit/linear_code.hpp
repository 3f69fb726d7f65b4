#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gvkit/combinatorics.hpp"
#include "gvkit/field.hpp"
#include "gvkit/matrix.hpp"
#include "gvkit/rng.hpp"

namespace gvkit {

/// [n, k]_q linear code given by a k x n generator matrix (row-major).
/// Rank deficiency is kept, not resampled; full_rank() reports it.
struct LinearCode {
  Field field;
  size_t n = 0;
  size_t k = 0;
  std::vector<uint32_t> generator;  // k * n entries

  uint32_t at(size_t r, size_t c) const { return generator[r * n + c]; }
  bool full_rank() const;

  /// Canonical text format: header "q n k", then k rows of entries.
  std::string serialize() const;
  static LinearCode parse(std::istream& in);
};

/// Serialized-code readers tolerate leading '#' comment lines (e.g. the
/// manifest reference emitted by the CLI).
void skip_comment_lines(std::istream& in);

/// Uniform k x n generator matrix; reproducible from (seed, stream).
LinearCode sample_generator_matrix(const Field& field, size_t k, size_t n,
                                   uint64_t seed, uint64_t stream = 1);

/// c = m G over F_q.
FqVector encode(const FqVector& m, const LinearCode& code);

/// Number of projective messages (q^k - 1) / (q - 1).
BigInt projective_message_count(unsigned long q, size_t k);

/// Streams the canonical projective message set
///   W = union_i { (0,...,0,1,x) : x in F_q^i },
/// one representative per scalar class of nonzero messages.
void for_each_projective_message(
    const Field& field, size_t k,
    const std::function<void(const std::vector<uint32_t>&)>& visit);

/// Exact minimum Hamming distance by projective enumeration (Gray-ordered
/// message walk, early exit at `early_stop`). Returns 0 iff the generator
/// is rank-deficient. Desk-scale cap q^k <= 2^26.
size_t min_hamming_distance(const LinearCode& code, size_t early_stop = 1);

/// Exactly uniform sampling from the Hamming ball B_q(n, radius): weight
/// drawn from the exact layer law C(n,w)(q-1)^w / Vol, then uniform
/// support and uniform nonzero values.
class HammingBallSampler {
 public:
  HammingBallSampler(Field field, size_t n, size_t radius);

  const BigInt& volume() const { return cumulative_.back(); }
  size_t radius() const { return radius_; }

  /// Exact layer probability P(wt = w).
  Rational weight_probability(size_t w) const;

  FqVector sample(CounterRng& rng) const;

 private:
  Field field_;
  size_t n_, radius_;
  std::vector<BigInt> cumulative_;  // cumulative_[w] = Vol_q(n, w)
};

namespace detail {

/// Draws weight w from the exact cumulative layer table.
size_t sample_weight(const std::vector<BigInt>& cumulative, CounterRng& rng);

/// Uniform w-subset of [0, n), ascending.
std::vector<size_t> sample_support(size_t n, size_t w, CounterRng& rng);

constexpr size_t kEnumerationCapBits = 26;

inline bool enumeration_within_cap(uint32_t q, size_t k) {
  return k * std::log2(static_cast<double>(q)) <=
         static_cast<double>(kEnumerationCapBits) + 1e-9;
}

/// Minimum of weight_of(codeword) over all projective messages for the
/// row-major k x len generator. Messages are walked in reflected q-ary
/// Gray order so each step updates the codeword by a single row.
template <typename WeightFn>
size_t min_weight_projective(const Field& F, size_t k, size_t len,
                             const std::vector<uint32_t>& gen,
                             WeightFn&& weight_of, size_t early_stop) {
  const uint32_t q = F.q();
  std::vector<uint32_t> cw(len);
  size_t best = static_cast<size_t>(-1);

  auto add_row = [&](size_t row, bool negate) {
    const uint32_t* r = gen.data() + row * len;
    for (size_t c = 0; c < len; ++c) {
      FieldElement x{cw[c]};
      cw[c] = (negate ? F.sub(x, {r[c]}) : F.add(x, {r[c]})).v;
    }
  };

  for (size_t block = 0; block < k; ++block) {
    // leading one at message index k-1-block, suffix of length `block`
    const size_t lead = k - 1 - block;
    std::fill(cw.begin(), cw.end(), 0);
    add_row(lead, false);
    best = std::min(best, weight_of(cw));
    if (best <= early_stop) return best;
    if (block == 0) continue;

    // loopless reflected mixed-radix Gray walk over the suffix digits
    std::vector<uint32_t> digit(block, 0);
    std::vector<int> dir(block, 1);
    std::vector<size_t> focus(block + 1);
    for (size_t j = 0; j <= block; ++j) focus[j] = j;
    for (;;) {
      size_t j = focus[0];
      focus[0] = 0;
      if (j == block) break;
      digit[j] += dir[j];
      add_row(lead + 1 + j, dir[j] < 0);
      if (digit[j] == 0 || digit[j] == q - 1) {
        dir[j] = -dir[j];
        focus[j] = focus[j + 1];
        focus[j + 1] = j + 1;
      }
      best = std::min(best, weight_of(cw));
      if (best <= early_stop) return best;
    }
  }
  return best;
}

}  // namespace detail

}  // namespace gvkit

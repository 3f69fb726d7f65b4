#include "gvkit/combinatorics.hpp"

#include "gvkit/errors.hpp"

namespace gvkit {

BigInt weight_layer(unsigned long n, unsigned long w, unsigned long units) {
  return binomial(n, w) * big_pow(units, w);
}

namespace {

BigInt ball_volume(unsigned long n, unsigned long d, unsigned long units) {
  if (d > n) throw UsageError("ball radius exceeds length");
  BigInt total = 0;
  BigInt layer = 1;  // C(n,0) * units^0
  for (unsigned long i = 0;; ++i) {
    total += layer;
    if (i == d) break;
    layer *= n - i;
    layer *= units;
    mpz_divexact_ui(layer.get_mpz_t(), layer.get_mpz_t(), i + 1);
  }
  return total;
}

}  // namespace

BigInt hamming_volume(unsigned long q, unsigned long n, unsigned long d) {
  if (q < 2) throw UsageError("q must be >= 2");
  return ball_volume(n, d, q - 1);
}

BigInt symplectic_volume(unsigned long q, unsigned long n, unsigned long d) {
  if (q < 2) throw UsageError("q must be >= 2");
  return ball_volume(n, d, q * q - 1);
}

BigInt hyperplane_pair_count(unsigned long q, unsigned long h) {
  if (q < 2) throw UsageError("q must be >= 2");
  BigInt total = h % 2 == 0 ? 1 : -1;  // (-1)^h tail of inclusion-exclusion
  for (unsigned long j = 0; j < h; ++j) {
    BigInt term = binomial(h, j) * big_pow(q, 2 * h - 1 - 2 * j);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace gvkit

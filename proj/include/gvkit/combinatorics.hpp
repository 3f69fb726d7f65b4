#pragma once

#include "gvkit/exact.hpp"
#include "gvkit/interval.hpp"

namespace gvkit {

/// Number of vectors of F_q^n with exactly w nonzero positions, where each
/// nonzero position ranges over `units` values: C(n, w) * units^w.
BigInt weight_layer(unsigned long n, unsigned long w, unsigned long units);

/// Vol_q(n, d) = sum_{i<=d} C(n,i)(q-1)^i. Requires 0 <= d <= n, q >= 2.
BigInt hamming_volume(unsigned long q, unsigned long n, unsigned long d);

/// Vol_q^S(2n, d) = sum_{i<=d} C(n,i)(q^2-1)^i. Requires 0 <= d <= n.
BigInt symplectic_volume(unsigned long q, unsigned long n, unsigned long d);

/// N_h: number of assignments (x_j, y_j)_{j in [h]} with every pair
/// nonzero satisfying one symplectic linear equation whose h coefficient
/// pairs are all nonzero. Closed form
///   sum_{j=0}^{h-1} (-1)^j C(h,j) q^{2h-1-2j} + (-1)^h,
/// independent of the particular nonzero coefficients.
BigInt hyperplane_pair_count(unsigned long q, unsigned long h);

}  // namespace gvkit

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gvkit/combinatorics.hpp"
#include "gvkit/field.hpp"
#include "gvkit/linear_code.hpp"
#include "gvkit/rng.hpp"

namespace gvkit {

/// (a | b) in F_q^{2n}, split-coordinate convention.
struct SymplecticVector {
  Field field;
  std::vector<uint32_t> a, b;  // both length n

  SymplecticVector(Field f, size_t n)
      : field(std::move(f)), a(n, 0), b(n, 0) {}
  SymplecticVector(Field f, std::vector<uint32_t> a_in,
                   std::vector<uint32_t> b_in);

  size_t n() const { return a.size(); }
  bool is_zero() const;

  /// Flat layout (a_1..a_n, b_1..b_n) as used in generator rows.
  std::vector<uint32_t> flat() const;
  static SymplecticVector from_flat(const Field& f,
                                    const std::vector<uint32_t>& row);

  /// "a_1 ... a_n | b_1 ... b_n"
  std::string serialize() const;

  friend bool operator==(const SymplecticVector& x,
                         const SymplecticVector& y) {
    return x.field == y.field && x.a == y.a && x.b == y.b;
  }
};

/// <(a|b),(a'|b')>_S = <a,b'>_E - <b,a'>_E. Every vector is orthogonal
/// to itself.
FieldElement symplectic_inner(const SymplecticVector& u,
                              const SymplecticVector& v);

SymplecticVector add(const SymplecticVector& u, const SymplecticVector& v);

/// Number of index pairs i with (a_i, b_i) != (0, 0); restricted to I
/// when given (indices are 0-based, must be < n).
size_t symplectic_weight(const SymplecticVector& v);
size_t symplectic_weight(const SymplecticVector& v,
                         std::span<const size_t> indices);

/// [2n, k]_q code under the symplectic form, generator rows in flat
/// layout. self_orthogonal caches whether all generator-row pairs have
/// vanishing symplectic inner product.
struct SymplecticCode {
  Field field;
  size_t n = 0;  // half-length; codewords live in F_q^{2n}
  size_t k = 0;
  std::vector<uint32_t> generator;  // k x 2n, row-major
  bool self_orthogonal = false;

  static SymplecticCode make(Field f, size_t n, size_t k,
                             std::vector<uint32_t> generator);

  SymplecticVector row(size_t r) const;
  size_t rank() const;

  std::string serialize() const;  // header "q 2n k", rows of 2n entries
  static SymplecticCode parse(std::istream& in);
};

/// Basis of {w : <w, c>_S = 0 for all c in C}; dimension 2n - rank(C).
SymplecticCode symplectic_dual(const SymplecticCode& code);

/// Draws generator rows iteratively: u_{i+1} uniform over
/// span{u_1..u_i}^{perp_S} \ span{u_1..u_i}. Result has full rank k and
/// is symplectic self-orthogonal; reproducible from (seed, stream).
SymplecticCode sample_self_orthogonal_code(const Field& field, size_t n,
                                           size_t k, uint64_t seed,
                                           uint64_t stream = 2);

/// Exact min symplectic weight over nonzero codewords (projective
/// enumeration, cap q^k <= 2^26). Returns 0 iff rank-deficient.
size_t min_symplectic_distance(const SymplecticCode& code,
                               size_t early_stop = 1);

/// Exact |B_q^S(2n, d) ∩ ⋂_i <u_i>^{perp_S}| by support-wise enumeration
/// of the ball. Cap q^{2n} <= 2^28.
BigInt ball_orthogonal_intersection_count(
    const Field& field, size_t n, size_t d,
    std::span<const SymplecticVector> constraints);

/// [[n, n-k, d]] parameters with d = d_S(C^{perp_S}).
struct QuantumParams {
  uint32_t q = 0;
  size_t n = 0;
  size_t logical = 0;
  size_t d = 0;

  std::string str() const;
};

/// Requires a self-orthogonal code with k <= n; distance cap applies to
/// the dual dimension 2n - k.
QuantumParams to_quantum_params(const SymplecticCode& code);

/// Exactly uniform sampling from the symplectic ball B_q^S(2n, radius).
class SymplecticBallSampler {
 public:
  SymplecticBallSampler(Field field, size_t n, size_t radius);

  const BigInt& volume() const { return cumulative_.back(); }
  SymplecticVector sample(CounterRng& rng) const;

 private:
  Field field_;
  size_t n_, radius_;
  std::vector<BigInt> cumulative_;
};

}  // namespace gvkit

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

/// Canonical representative of an element of F_q, always reduced to
/// [0, q-1]. Extension-field elements are encoded as base-characteristic
/// digit strings of their polynomial coefficients.
struct FieldElement {
  uint32_t v = 0;
  friend bool operator==(FieldElement a, FieldElement b) { return a.v == b.v; }
  friend bool operator!=(FieldElement a, FieldElement b) { return a.v != b.v; }
};

/// F_q for prime q (modular arithmetic) or q in {4, 8, 9} (built-in
/// irreducible-polynomial tables: x^2+x+1, x^3+x+1, x^2+1). Cheap to copy;
/// extension tables are shared.
class Field {
 public:
  explicit Field(uint32_t q);

  uint32_t q() const { return q_; }
  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return m_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  /// Validates the canonical representative.
  FieldElement element(uint64_t value) const {
    if (value >= q_) throw UsageError("element value not reduced");
    return {static_cast<uint32_t>(value)};
  }

  /// Reduces an arbitrary integer into the prime subfield embedding
  /// (value mod characteristic, mapped through the canonical encoding).
  FieldElement from_int(long long value) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;  // DomainError on zero

  friend bool operator==(const Field& a, const Field& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Field& a, const Field& b) {
    return a.q_ != b.q_;
  }

 private:
  struct Tables {
    std::vector<uint32_t> add, mul, inv, neg;  // q*q, q*q, q, q
  };

  uint32_t q_, p_, m_;
  std::shared_ptr<const Tables> tables_;  // null for prime fields
};

/// Vector over F_q; all entries reduced under the same field.
struct FqVector {
  Field field;
  std::vector<uint32_t> e;

  FqVector(Field f, size_t n) : field(std::move(f)), e(n, 0) {}
  FqVector(Field f, std::vector<uint32_t> entries)
      : field(std::move(f)), e(std::move(entries)) {
    for (uint32_t x : e)
      if (x >= field.q()) throw UsageError("vector entry not reduced");
  }

  size_t size() const { return e.size(); }

  friend bool operator==(const FqVector& a, const FqVector& b) {
    return a.field == b.field && a.e == b.e;
  }
};

FqVector add(const FqVector& u, const FqVector& v);
FqVector sub(const FqVector& u, const FqVector& v);
FqVector scale(FieldElement lambda, const FqVector& v);
FieldElement euclidean_dot(const FqVector& u, const FqVector& v);

/// Number of nonzero entries; wt(v) = d(v, 0).
size_t hamming_weight(const FqVector& v);

}  // namespace gvkit

#include "gvkit/field.hpp"

#include <array>

namespace gvkit {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t mod_pow(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

struct PolyField {
  uint32_t p, m, q;
  std::vector<uint32_t> reduction;  // x^m = sum reduction[i] x^i

  std::vector<uint32_t> digits(uint32_t v) const {
    std::vector<uint32_t> d(m);
    for (uint32_t i = 0; i < m; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  uint32_t encode(const std::vector<uint32_t>& d) const {
    uint32_t v = 0;
    for (uint32_t i = m; i-- > 0;) v = v * p + d[i];
    return v;
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (uint32_t i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }

  uint32_t mul(uint32_t a, uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<uint32_t> prod(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i)
      for (uint32_t j = 0; j < m; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (uint32_t k = 2 * m - 2; k >= m; --k) {
      uint32_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (uint32_t i = 0; i < m; ++i)
        prod[k - m + i] = (prod[k - m + i] + c * reduction[i]) % p;
    }
    prod.resize(m);
    return encode(prod);
  }
};

// Fixed moduli, most significant coefficient implicit:
//   F4 = F2[x]/(x^2+x+1), F8 = F2[x]/(x^3+x+1), F9 = F3[x]/(x^2+1)
PolyField poly_field_for(uint32_t q) {
  switch (q) {
    case 4:
      return {2, 2, 4, {1, 1}};  // x^2 = x + 1
    case 8:
      return {2, 3, 8, {1, 1, 0}};  // x^3 = x + 1
    case 9:
      return {3, 2, 9, {2, 0}};  // x^2 = -1 = 2
    default:
      throw UsageError("unsupported extension field order " +
                       std::to_string(q));
  }
}

}  // namespace

Field::Field(uint32_t q) : q_(q) {
  if (q < 2) throw UsageError("field order must be >= 2");
  if (is_prime(q)) {
    p_ = q;
    m_ = 1;
    return;
  }
  PolyField pf = poly_field_for(q);
  p_ = pf.p;
  m_ = pf.m;

  auto t = std::make_shared<Tables>();
  t->add.resize(static_cast<size_t>(q) * q);
  t->mul.resize(static_cast<size_t>(q) * q);
  t->neg.resize(q);
  t->inv.resize(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    for (uint32_t b = 0; b < q; ++b) {
      t->add[static_cast<size_t>(a) * q + b] = pf.add(a, b);
      t->mul[static_cast<size_t>(a) * q + b] = pf.mul(a, b);
    }
  }
  for (uint32_t a = 0; a < q; ++a) {
    for (uint32_t b = 0; b < q; ++b) {
      if (t->add[static_cast<size_t>(a) * q + b] == 0) t->neg[a] = b;
      if (a != 0 && t->mul[static_cast<size_t>(a) * q + b] == 1)
        t->inv[a] = b;
    }
  }
  tables_ = std::move(t);
}

FieldElement Field::from_int(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};  // prime-subfield digit encoding
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (m_ == 1) {
    uint64_t s = static_cast<uint64_t>(a.v) + b.v;
    if (s >= q_) s -= q_;
    return {static_cast<uint32_t>(s)};
  }
  return {tables_->add[static_cast<size_t>(a.v) * q_ + b.v]};
}

FieldElement Field::neg(FieldElement a) const {
  if (m_ == 1) return {a.v == 0 ? 0 : q_ - a.v};
  return {tables_->neg[a.v]};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (m_ == 1)
    return {static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % q_)};
  return {tables_->mul[static_cast<size_t>(a.v) * q_ + b.v]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.v == 0) throw DomainError("inverse of zero");
  if (m_ == 1)
    return {static_cast<uint32_t>(mod_pow(a.v, q_ - 2, q_))};
  return {tables_->inv[a.v]};
}

namespace {

void check_pair(const FqVector& u, const FqVector& v) {
  if (u.field != v.field) throw UsageError("mismatched field specs");
  if (u.size() != v.size()) throw UsageError("vector length mismatch");
}

}  // namespace

FqVector add(const FqVector& u, const FqVector& v) {
  check_pair(u, v);
  FqVector out(u.field, u.size());
  for (size_t i = 0; i < u.size(); ++i)
    out.e[i] = u.field.add({u.e[i]}, {v.e[i]}).v;
  return out;
}

FqVector sub(const FqVector& u, const FqVector& v) {
  check_pair(u, v);
  FqVector out(u.field, u.size());
  for (size_t i = 0; i < u.size(); ++i)
    out.e[i] = u.field.sub({u.e[i]}, {v.e[i]}).v;
  return out;
}

FqVector scale(FieldElement lambda, const FqVector& v) {
  FqVector out(v.field, v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.e[i] = v.field.mul(lambda, {v.e[i]}).v;
  return out;
}

FieldElement euclidean_dot(const FqVector& u, const FqVector& v) {
  check_pair(u, v);
  FieldElement acc = u.field.zero();
  for (size_t i = 0; i < u.size(); ++i)
    acc = u.field.add(acc, u.field.mul({u.e[i]}, {v.e[i]}));
  return acc;
}

size_t hamming_weight(const FqVector& v) {
  size_t w = 0;
  for (uint32_t x : v.e) w += x != 0;
  return w;
}

}  // namespace gvkit

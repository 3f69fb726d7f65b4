#include "gvkit/symplectic.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace gvkit {

SymplecticVector::SymplecticVector(Field f, std::vector<uint32_t> a_in,
                                   std::vector<uint32_t> b_in)
    : field(std::move(f)), a(std::move(a_in)), b(std::move(b_in)) {
  if (a.size() != b.size()) throw UsageError("halves differ in length");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] >= field.q() || b[i] >= field.q())
      throw UsageError("entry not reduced");
}

bool SymplecticVector::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return !x; }) &&
         std::all_of(b.begin(), b.end(), [](uint32_t x) { return !x; });
}

std::vector<uint32_t> SymplecticVector::flat() const {
  std::vector<uint32_t> row(a);
  row.insert(row.end(), b.begin(), b.end());
  return row;
}

SymplecticVector SymplecticVector::from_flat(
    const Field& f, const std::vector<uint32_t>& row) {
  if (row.size() % 2 != 0) throw UsageError("flat vector length must be even");
  size_t n = row.size() / 2;
  return SymplecticVector(
      f, std::vector<uint32_t>(row.begin(), row.begin() + n),
      std::vector<uint32_t>(row.begin() + n, row.end()));
}

std::string SymplecticVector::serialize() const {
  std::ostringstream out;
  for (size_t i = 0; i < n(); ++i) {
    if (i) out << " ";
    out << a[i];
  }
  out << " |";
  for (size_t i = 0; i < n(); ++i) out << " " << b[i];
  return out.str();
}

FieldElement symplectic_inner(const SymplecticVector& u,
                              const SymplecticVector& v) {
  if (u.field != v.field) throw UsageError("mismatched field specs");
  if (u.n() != v.n()) throw UsageError("length mismatch");
  const Field& F = u.field;
  FieldElement acc = F.zero();
  for (size_t i = 0; i < u.n(); ++i) {
    acc = F.add(acc, F.mul({u.a[i]}, {v.b[i]}));
    acc = F.sub(acc, F.mul({u.b[i]}, {v.a[i]}));
  }
  return acc;
}

SymplecticVector add(const SymplecticVector& u, const SymplecticVector& v) {
  if (u.field != v.field) throw UsageError("mismatched field specs");
  if (u.n() != v.n()) throw UsageError("length mismatch");
  SymplecticVector out(u.field, u.n());
  for (size_t i = 0; i < u.n(); ++i) {
    out.a[i] = u.field.add({u.a[i]}, {v.a[i]}).v;
    out.b[i] = u.field.add({u.b[i]}, {v.b[i]}).v;
  }
  return out;
}

size_t symplectic_weight(const SymplecticVector& v) {
  size_t w = 0;
  for (size_t i = 0; i < v.n(); ++i) w += (v.a[i] != 0 || v.b[i] != 0);
  return w;
}

size_t symplectic_weight(const SymplecticVector& v,
                         std::span<const size_t> indices) {
  size_t w = 0;
  for (size_t i : indices) {
    if (i >= v.n()) throw UsageError("index out of range");
    w += (v.a[i] != 0 || v.b[i] != 0);
  }
  return w;
}

SymplecticCode SymplecticCode::make(Field f, size_t n, size_t k,
                                    std::vector<uint32_t> generator) {
  if (generator.size() != k * 2 * n) throw UsageError("generator shape");
  SymplecticCode code{std::move(f), n, k, std::move(generator), false};
  code.self_orthogonal = true;
  for (size_t i = 0; i < k && code.self_orthogonal; ++i)
    for (size_t j = i; j < k; ++j)
      if (symplectic_inner(code.row(i), code.row(j)).v != 0) {
        code.self_orthogonal = false;
        break;
      }
  return code;
}

SymplecticVector SymplecticCode::row(size_t r) const {
  std::vector<uint32_t> flat(generator.begin() + r * 2 * n,
                             generator.begin() + (r + 1) * 2 * n);
  return SymplecticVector::from_flat(field, flat);
}

size_t SymplecticCode::rank() const {
  FqMatrix m(field, k, 2 * n, generator);
  return m.rank();
}

std::string SymplecticCode::serialize() const {
  std::ostringstream out;
  out << field.q() << " " << 2 * n << " " << k << "\n";
  for (size_t r = 0; r < k; ++r) {
    for (size_t c = 0; c < 2 * n; ++c) {
      if (c) out << " ";
      out << generator[r * 2 * n + c];
    }
    out << "\n";
  }
  return out.str();
}

SymplecticCode SymplecticCode::parse(std::istream& in) {
  skip_comment_lines(in);
  uint32_t q;
  size_t len, k;
  if (!(in >> q >> len >> k)) throw UsageError("bad code header");
  if (len % 2 != 0) throw UsageError("symplectic length must be even");
  Field f(q);
  std::vector<uint32_t> gen(len * k);
  for (auto& e : gen) {
    uint64_t v;
    if (!(in >> v)) throw UsageError("truncated code body");
    if (v >= q) throw UsageError("entry not reduced");
    e = static_cast<uint32_t>(v);
  }
  return make(f, len / 2, k, std::move(gen));
}

namespace {

// <w, u>_S = 0 as a linear constraint on w = (x|y): row (b | -a).
std::vector<uint32_t> constraint_row(const SymplecticVector& u) {
  const Field& F = u.field;
  std::vector<uint32_t> row(2 * u.n());
  for (size_t i = 0; i < u.n(); ++i) {
    row[i] = u.b[i];
    row[u.n() + i] = F.neg({u.a[i]}).v;
  }
  return row;
}

}  // namespace

SymplecticCode symplectic_dual(const SymplecticCode& code) {
  const size_t cols = 2 * code.n;
  FqMatrix constraints(code.field, code.k, cols);
  for (size_t r = 0; r < code.k; ++r) {
    auto row = constraint_row(code.row(r));
    for (size_t c = 0; c < cols; ++c) constraints.at(r, c) = row[c];
  }
  auto basis = constraints.nullspace();
  std::vector<uint32_t> gen;
  gen.reserve(basis.size() * cols);
  for (auto& v : basis) gen.insert(gen.end(), v.begin(), v.end());
  return SymplecticCode::make(code.field, code.n, basis.size(),
                              std::move(gen));
}

SymplecticCode sample_self_orthogonal_code(const Field& field, size_t n,
                                           size_t k, uint64_t seed,
                                           uint64_t stream) {
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  CounterRng rng(seed, stream);
  const size_t cols = 2 * n;
  std::vector<uint32_t> gen;
  RowSpan span(field, cols);
  FqMatrix constraints(field, k, cols);  // grows one row per accepted vector

  for (size_t i = 0; i < k; ++i) {
    FqMatrix current(field, i, cols);
    for (size_t r = 0; r < i; ++r)
      for (size_t c = 0; c < cols; ++c) current.at(r, c) = constraints.at(r, c);
    auto basis = current.nullspace();  // span{u_1..u_i}^{perp_S}
    for (;;) {
      std::vector<uint32_t> x(cols, 0);
      for (const auto& bvec : basis) {
        uint32_t coeff =
            static_cast<uint32_t>(rng.below(static_cast<uint64_t>(field.q())));
        if (coeff == 0) continue;
        FieldElement c{coeff};
        for (size_t j = 0; j < cols; ++j)
          x[j] = field.add({x[j]}, field.mul(c, {bvec[j]})).v;
      }
      if (span.contains(x)) continue;  // includes the zero vector
      span.add(x);
      auto c_row = constraint_row(SymplecticVector::from_flat(field, x));
      for (size_t c = 0; c < cols; ++c) constraints.at(i, c) = c_row[c];
      gen.insert(gen.end(), x.begin(), x.end());
      break;
    }
  }
  return SymplecticCode::make(field, n, k, std::move(gen));
}

size_t min_symplectic_distance(const SymplecticCode& code, size_t early_stop) {
  if (code.k < 1) throw UsageError("k must be >= 1");
  if (!detail::enumeration_within_cap(code.field.q(), code.k))
    throw ResourceError("q^k exceeds the enumeration cap 2^26");
  if (code.rank() < code.k) return 0;
  const size_t n = code.n;
  auto weight = [n](const std::vector<uint32_t>& cw) {
    size_t w = 0;
    for (size_t i = 0; i < n; ++i) w += (cw[i] != 0 || cw[n + i] != 0);
    return w;
  };
  return detail::min_weight_projective(code.field, code.k, 2 * n,
                                       code.generator, weight, early_stop);
}

BigInt ball_orthogonal_intersection_count(
    const Field& field, size_t n, size_t d,
    std::span<const SymplecticVector> constraints) {
  if (d > n) throw UsageError("radius exceeds half-length");
  if (2 * n * std::log2(static_cast<double>(field.q())) > 28 + 1e-9)
    throw ResourceError("q^{2n} exceeds the enumeration cap 2^28");
  const uint32_t q = field.q();
  const size_t ell = constraints.size();
  for (const auto& u : constraints) {
    if (u.field != field || u.n() != n)
      throw UsageError("constraint vector shape mismatch");
  }

  // contribution of pair value v at position p to <x, u_i>_S,
  // v in [1, q^2-1] encoding (x, y) = (v mod q, v div q)
  const size_t nvals = static_cast<size_t>(q) * q;
  std::vector<uint32_t> contrib(ell * n * nvals, 0);
  for (size_t i = 0; i < ell; ++i)
    for (size_t p = 0; p < n; ++p)
      for (size_t v = 1; v < nvals; ++v) {
        FieldElement x{static_cast<uint32_t>(v % q)};
        FieldElement y{static_cast<uint32_t>(v / q)};
        FieldElement c = field.sub(field.mul(x, {constraints[i].b[p]}),
                                   field.mul(y, {constraints[i].a[p]}));
        contrib[(i * n + p) * nvals + v] = c.v;
      }

  BigInt count = 1;  // zero vector satisfies every constraint
  std::vector<size_t> support;
  std::vector<uint32_t> val;
  std::vector<uint32_t> acc(ell);

  for (size_t w = 1; w <= d; ++w) {
    // lexicographic combinations of size w
    support.resize(w);
    for (size_t i = 0; i < w; ++i) support[i] = i;
    for (;;) {
      val.assign(w, 1);
      for (size_t i = 0; i < ell; ++i) {
        FieldElement a = field.zero();
        for (size_t j = 0; j < w; ++j)
          a = field.add(a, {contrib[(i * n + support[j]) * nvals + 1]});
        acc[i] = a.v;
      }
      // odometer over nonzero pair values with incremental accumulators
      for (;;) {
        bool ok = true;
        for (size_t i = 0; i < ell; ++i)
          if (acc[i] != 0) {
            ok = false;
            break;
          }
        if (ok) ++count;

        size_t j = w;
        while (j-- > 0) {
          size_t base = support[j];
          if (val[j] + 1 < nvals) {
            for (size_t i = 0; i < ell; ++i) {
              acc[i] = field
                           .add(field.sub({acc[i]},
                                          {contrib[(i * n + base) * nvals +
                                                   val[j]]}),
                                {contrib[(i * n + base) * nvals + val[j] + 1]})
                           .v;
            }
            ++val[j];
            break;
          }
          for (size_t i = 0; i < ell; ++i) {
            acc[i] = field
                         .add(field.sub({acc[i]}, {contrib[(i * n + base) *
                                                               nvals +
                                                           val[j]]}),
                              {contrib[(i * n + base) * nvals + 1]})
                         .v;
          }
          val[j] = 1;
        }
        if (j == static_cast<size_t>(-1)) break;
      }

      // next support combination
      size_t i = w;
      while (i-- > 0) {
        if (support[i] != i + n - w) {
          ++support[i];
          for (size_t j2 = i + 1; j2 < w; ++j2)
            support[j2] = support[j2 - 1] + 1;
          break;
        }
      }
      if (i == static_cast<size_t>(-1)) break;
    }
  }
  return count;
}

std::string QuantumParams::str() const {
  std::ostringstream out;
  out << "[[" << n << "," << logical << "," << d << "]]_" << q;
  return out.str();
}

QuantumParams to_quantum_params(const SymplecticCode& code) {
  if (!code.self_orthogonal)
    throw DomainError("code is not symplectic self-orthogonal");
  if (code.k > code.n) throw UsageError("k must be <= n");
  SymplecticCode dual = symplectic_dual(code);
  size_t d = min_symplectic_distance(dual);
  return QuantumParams{code.field.q(), code.n, code.n - code.k, d};
}

SymplecticBallSampler::SymplecticBallSampler(Field field, size_t n,
                                             size_t radius)
    : field_(std::move(field)), n_(n), radius_(radius) {
  if (radius > n) throw UsageError("radius exceeds half-length");
  const unsigned long units =
      static_cast<unsigned long>(field_.q()) * field_.q() - 1;
  BigInt acc = 0;
  for (size_t w = 0; w <= radius; ++w) {
    acc += weight_layer(n, w, units);
    cumulative_.push_back(acc);
  }
}

SymplecticVector SymplecticBallSampler::sample(CounterRng& rng) const {
  const uint32_t q = field_.q();
  size_t w = detail::sample_weight(cumulative_, rng);
  SymplecticVector v(field_, n_);
  for (size_t pos : detail::sample_support(n_, w, rng)) {
    uint64_t pair = rng.below(static_cast<uint64_t>(q) * q - 1) + 1;
    v.a[pos] = static_cast<uint32_t>(pair % q);
    v.b[pos] = static_cast<uint32_t>(pair / q);
  }
  return v;
}

}  // namespace gvkit

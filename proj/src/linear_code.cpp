#include "gvkit/linear_code.hpp"

#include <istream>
#include <limits>
#include <sstream>

namespace gvkit {

bool LinearCode::full_rank() const {
  FqMatrix m(field, k, n, generator);
  return m.rank() == k;
}

std::string LinearCode::serialize() const {
  std::ostringstream out;
  out << field.q() << " " << n << " " << k << "\n";
  for (size_t r = 0; r < k; ++r) {
    for (size_t c = 0; c < n; ++c) {
      if (c) out << " ";
      out << at(r, c);
    }
    out << "\n";
  }
  return out.str();
}

void skip_comment_lines(std::istream& in) {
  in >> std::ws;
  while (in.peek() == '#') {
    in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    in >> std::ws;
  }
}

LinearCode LinearCode::parse(std::istream& in) {
  skip_comment_lines(in);
  uint32_t q;
  size_t n, k;
  if (!(in >> q >> n >> k)) throw UsageError("bad code header");
  Field f(q);
  LinearCode code{f, n, k, std::vector<uint32_t>(n * k)};
  for (size_t i = 0; i < n * k; ++i) {
    uint64_t v;
    if (!(in >> v)) throw UsageError("truncated code body");
    if (v >= q) throw UsageError("entry not reduced");
    code.generator[i] = static_cast<uint32_t>(v);
  }
  return code;
}

LinearCode sample_generator_matrix(const Field& field, size_t k, size_t n,
                                   uint64_t seed, uint64_t stream) {
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  CounterRng rng(seed, stream);
  LinearCode code{field, n, k, std::vector<uint32_t>(k * n)};
  for (auto& e : code.generator)
    e = static_cast<uint32_t>(rng.below(static_cast<uint64_t>(field.q())));
  return code;
}

FqVector encode(const FqVector& m, const LinearCode& code) {
  if (m.field != code.field) throw UsageError("mismatched field specs");
  if (m.size() != code.k) throw UsageError("message length != k");
  const Field& F = code.field;
  FqVector c(F, code.n);
  for (size_t r = 0; r < code.k; ++r) {
    if (m.e[r] == 0) continue;
    FieldElement coeff{m.e[r]};
    for (size_t j = 0; j < code.n; ++j)
      c.e[j] = F.add({c.e[j]}, F.mul(coeff, {code.at(r, j)})).v;
  }
  return c;
}

BigInt projective_message_count(unsigned long q, size_t k) {
  return (big_pow(q, k) - 1) / (q - 1);
}

void for_each_projective_message(
    const Field& field, size_t k,
    const std::function<void(const std::vector<uint32_t>&)>& visit) {
  if (k < 1) throw UsageError("k must be >= 1");
  const uint32_t q = field.q();
  std::vector<uint32_t> m(k, 0);
  for (size_t block = 0; block < k; ++block) {
    const size_t lead = k - 1 - block;
    std::fill(m.begin(), m.end(), 0);
    m[lead] = 1;
    // odometer over the suffix x in F_q^block
    for (;;) {
      visit(m);
      size_t j = 0;
      for (; j < block; ++j) {
        if (++m[k - 1 - j] < q) break;
        m[k - 1 - j] = 0;
      }
      if (j == block) break;
    }
  }
}

size_t min_hamming_distance(const LinearCode& code, size_t early_stop) {
  if (code.k < 1) throw UsageError("k must be >= 1");
  if (!detail::enumeration_within_cap(code.field.q(), code.k))
    throw ResourceError("q^k exceeds the enumeration cap 2^26");
  if (!code.full_rank()) return 0;
  auto weight = [](const std::vector<uint32_t>& cw) {
    size_t w = 0;
    for (uint32_t x : cw) w += x != 0;
    return w;
  };
  return detail::min_weight_projective(code.field, code.k, code.n,
                                       code.generator, weight, early_stop);
}

namespace detail {

size_t sample_weight(const std::vector<BigInt>& cumulative, CounterRng& rng) {
  BigInt u = rng.below(cumulative.back());
  size_t w = 0;
  while (cumulative[w] <= u) ++w;
  return w;
}

std::vector<size_t> sample_support(size_t n, size_t w, CounterRng& rng) {
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  for (size_t i = 0; i < w; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(static_cast<uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(w);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace detail

HammingBallSampler::HammingBallSampler(Field field, size_t n, size_t radius)
    : field_(std::move(field)), n_(n), radius_(radius) {
  if (radius > n) throw UsageError("radius exceeds length");
  cumulative_.reserve(radius + 1);
  BigInt acc = 0;
  for (size_t w = 0; w <= radius; ++w) {
    acc += weight_layer(n, w, field_.q() - 1);
    cumulative_.push_back(acc);
  }
}

Rational HammingBallSampler::weight_probability(size_t w) const {
  if (w > radius_) return Rational(0);
  return make_rational(weight_layer(n_, w, field_.q() - 1), volume());
}

FqVector HammingBallSampler::sample(CounterRng& rng) const {
  size_t w = detail::sample_weight(cumulative_, rng);
  FqVector v(field_, n_);
  for (size_t pos : detail::sample_support(n_, w, rng))
    v.e[pos] = static_cast<uint32_t>(
        rng.below(static_cast<uint64_t>(field_.q() - 1)) + 1);
  return v;
}

}  // namespace gvkit

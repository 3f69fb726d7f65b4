#include "gvkit/exact.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt big_pow(unsigned long q, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

namespace {

// Pascal rows, grown on demand. Guarded: volumes and certifier grids hit
// the same rows from concurrent test shards.
std::mutex g_binom_mutex;
std::map<unsigned long, std::vector<BigInt>> g_binom_rows;

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::lock_guard<std::mutex> lock(g_binom_mutex);
  auto it = g_binom_rows.find(n);
  if (it == g_binom_rows.end()) {
    std::vector<BigInt> row(n / 2 + 1);
    row[0] = 1;
    // multiplicative recurrence C(n,j) = C(n,j-1)*(n-j+1)/j, exact at each step
    for (unsigned long j = 1; j < row.size(); ++j) {
      row[j] = row[j - 1] * (n - j + 1);
      mpz_divexact_ui(row[j].get_mpz_t(), row[j].get_mpz_t(), j);
    }
    it = g_binom_rows.emplace(n, std::move(row)).first;
  }
  return it->second[k];
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw DomainError("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

BigInt ceil_of(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw UsageError("bad rational: " + s);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw UsageError("bad decimal: " + s);
    BigInt num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw UsageError("bad decimal: " + s);
    return make_rational(num, big_pow(10ul, frac_len));
  }
  BigInt num;
  if (mpz_set_str(num.get_mpz_t(), s.c_str(), 10) != 0)
    throw UsageError("bad integer: " + s);
  return Rational(num);
}

std::string rational_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (r == 0) return "0";
  std::string sign = r < 0 ? "-" : "";
  Rational a = abs(r);

  auto pow10 = [](long k) -> Rational {
    Rational p(big_pow(10ul, static_cast<unsigned long>(k < 0 ? -k : k)));
    return k < 0 ? Rational(1) / p : p;
  };
  // decimal exponent e with 10^e <= a < 10^(e+1); sizeinbase gives a
  // starting guess within one
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;

  // round a / 10^e to significant_digits digits
  long shift = significant_digits - 1 - e;
  Rational scaled = a;
  if (shift >= 0)
    scaled *= Rational(big_pow(10ul, static_cast<unsigned long>(shift)));
  else
    scaled /= Rational(big_pow(10ul, static_cast<unsigned long>(-shift)));
  BigInt digits = ceil_of(scaled - Rational(1, 2));  // round half up
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // rounding carried into an extra digit (e.g. 9.99 -> 10.0)
    ds.pop_back();
    ++e;
  }
  while (static_cast<int>(ds.size()) < significant_digits) ds.push_back('0');

  std::ostringstream out;
  if (e >= 0 && e < significant_digits + 3 && e <= 17) {
    out << sign << ds.substr(0, e + 1);
    if (static_cast<int>(ds.size()) > e + 1) out << "." << ds.substr(e + 1);
  } else if (e < 0 && e >= -4) {
    out << sign << "0.";
    for (long i = 1; i < -e; ++i) out << '0';
    out << ds;
  } else {
    out << sign << ds[0];
    if (ds.size() > 1) out << "." << ds.substr(1);
    out << "e" << (e >= 0 ? "+" : "") << e;
  }
  return out.str();
}

}  // namespace gvkit

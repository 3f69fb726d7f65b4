#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvkit/errors.hpp"
#include "gvkit/field.hpp"
#include "gvkit/rng.hpp"

using namespace gvkit;

namespace {

void check_field_axioms(uint32_t q) {
  Field f(q);
  CAPTURE(q);
  for (uint32_t a = 0; a < q; ++a) {
    CHECK(f.add({a}, {0}) == FieldElement{a});
    CHECK(f.mul({a}, {1}) == FieldElement{a});
    CHECK(f.add({a}, f.neg({a})).v == 0);
    if (a != 0) CHECK(f.mul({a}, f.inv({a})).v == 1);
    for (uint32_t b = 0; b < q; ++b) {
      CHECK(f.add({a}, {b}) == f.add({b}, {a}));
      CHECK(f.mul({a}, {b}) == f.mul({b}, {a}));
      CHECK(f.sub({a}, {b}) == f.add({a}, f.neg({b})));
      for (uint32_t c = 0; c < q; ++c) {
        CHECK(f.add(f.add({a}, {b}), {c}) == f.add({a}, f.add({b}, {c})));
        CHECK(f.mul(f.mul({a}, {b}), {c}) == f.mul({a}, f.mul({b}, {c})));
        CHECK(f.mul({a}, f.add({b}, {c})) ==
              f.add(f.mul({a}, {b}), f.mul({a}, {c})));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) check_field_axioms(q);
}

TEST_CASE("spot arithmetic values") {
  Field f2(2), f3(3), f5(5);
  CHECK(f2.add({1}, {1}).v == 0);
  CHECK(f3.inv({2}).v == 2);  // 2*2 = 4 = 1 mod 3
  CHECK(f5.mul({3}, {4}).v == 2);
  CHECK_THROWS_AS(f3.inv({0}), DomainError);
  CHECK_THROWS_AS(f3.element(3), UsageError);
  CHECK_THROWS_AS(Field(1), UsageError);
  CHECK_THROWS_AS(Field(6), UsageError);  // not a prime power we table
}

TEST_CASE("extension field structure") {
  Field f4(4), f8(8), f9(9);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.extension_degree() == 2);
  CHECK(f8.extension_degree() == 3);
  CHECK(f9.characteristic() == 3);
  // characteristic p: x + x + ... (p times) = 0
  for (uint32_t a = 0; a < 9; ++a) {
    FieldElement acc{0};
    for (uint32_t i = 0; i < 3; ++i) acc = f9.add(acc, {a});
    CHECK(acc.v == 0);
  }
  for (uint32_t a = 0; a < 8; ++a) CHECK(f8.add({a}, {a}).v == 0);
}

TEST_CASE("vector operations") {
  Field f2(2), f3(3);
  FqVector u(f2, {1, 0, 1}), v(f2, {1, 1, 1});
  CHECK(add(u, v) == FqVector(f2, {0, 1, 0}));
  CHECK(euclidean_dot(u, v).v == 0);
  FqVector w(f3, {1, 2, 0});
  CHECK(scale({2}, w) == FqVector(f3, {2, 1, 0}));

  FqVector short_vec(f2, 2);
  CHECK_THROWS_AS(add(u, short_vec), UsageError);
  FqVector other_field(f3, 3);
  CHECK_THROWS_AS(add(u, other_field), UsageError);
  CHECK_THROWS_AS(FqVector(f2, {0, 2}), UsageError);
}

TEST_CASE("hamming weight basics") {
  Field f3(3);
  CHECK(hamming_weight(FqVector(f3, {0, 0, 0})) == 0);
  CHECK(hamming_weight(FqVector(f3, {1, 2, 0})) == 2);
  Field f2(2);
  CHECK(hamming_weight(FqVector(f2, std::vector<uint32_t>(17, 1))) == 17);
}

TEST_CASE("weight subadditivity and scale invariance") {
  CounterRng rng(9, 1);
  for (uint32_t q : {2u, 3u, 5u, 9u}) {
    Field f(q);
    for (int it = 0; it < 100; ++it) {
      FqVector u(f, 12), v(f, 12);
      for (size_t i = 0; i < 12; ++i) {
        u.e[i] = static_cast<uint32_t>(rng.below(static_cast<uint64_t>(q)));
        v.e[i] = static_cast<uint32_t>(rng.below(static_cast<uint64_t>(q)));
      }
      CHECK(hamming_weight(add(u, v)) <=
            hamming_weight(u) + hamming_weight(v));
      uint32_t lambda =
          static_cast<uint32_t>(rng.below(static_cast<uint64_t>(q - 1))) + 1;
      CHECK(hamming_weight(scale({lambda}, u)) == hamming_weight(u));
    }
  }
}

#include "brute.hpp"
#include "doctest.h"

#include "conic/errors.hpp"
#include "conic/fq_field.hpp"

using conic::FqElement;
using conic::Gf2Poly;

TEST_CASE("fq: construction needs an irreducible modulus") {
  CHECK_THROWS_AS(conic::FqField::make(Gf2Poly::from_bits(0b101)), std::invalid_argument);
  const auto f = conic::FqField::make(Gf2Poly::from_bits(0b111));
  CHECK(f->degree() == 2);
  CHECK(f->size() == 4);
  CHECK(f->element(0b101).value() == Gf2Poly::from_bits(0b10));
}

TEST_CASE("fq: GF(2) and GF(4) examples") {
  const auto f2 = conic::make_standard_field(1);
  CHECK(conic::fq_sqrt(f2->one()) == f2->one());
  CHECK(conic::fq_sqrt(f2->zero()) == f2->zero());
  CHECK(conic::fq_inv(f2->one()) == f2->one());
  CHECK_THROWS_AS(conic::fq_inv(f2->zero()), conic::DivisionByZeroError);

  const auto f4 = conic::make_standard_field(2);
  const FqElement x = f4->generator();
  CHECK(conic::fq_sqrt(x) == x + f4->one());
  CHECK(conic::fq_inv(x) == x + f4->one());
}

TEST_CASE("fq: exhaustive field laws for k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    const auto f = conic::make_standard_field(k);
    CHECK(brute::irreducible(f->modulus().low_bits()));
    const std::uint64_t q = f->size();
    for (std::uint64_t u = 0; u < q; ++u) {
      const FqElement x = f->element(u);
      CHECK(x.value().degree() < k);
      const FqElement s = conic::fq_sqrt(x);
      CHECK(s * s == x);
      CHECK(conic::fq_sqrt(x.square()) == x);
      if (!x.is_zero()) CHECK(x * conic::fq_inv(x) == f->one());
      CHECK(x.pow(q) == x);
    }
  }
}

TEST_CASE("fq: square root is multiplicative") {
  const auto f = conic::make_standard_field(7);
  for (int t = 0; t < 3000; ++t) {
    const FqElement x = f->element(brute::rng()() % 128), y = f->element(brute::rng()() % 128);
    CHECK(conic::fq_sqrt(x * y) == conic::fq_sqrt(x) * conic::fq_sqrt(y));
  }
}

TEST_CASE("fq: products agree with reduced schoolbook products") {
  const auto f = conic::make_standard_field(13);
  const std::uint64_t m = f->modulus().low_bits();
  for (int t = 0; t < 3000; ++t) {
    const std::uint64_t a = brute::rng()() % 8192, b = brute::rng()() % 8192;
    CHECK((f->element(a) * f->element(b)).value().low_bits() == brute::mod(brute::mul(a, b), m));
  }
}

TEST_CASE("fq: mixing fields is rejected") {
  const auto f4 = conic::make_standard_field(2), f8 = conic::make_standard_field(3);
  CHECK_THROWS_AS(f4->one() + f8->one(), conic::FieldMismatchError);
  const auto f4_again = conic::FqField::make(f4->modulus());
  CHECK_NOTHROW(f4->one() * f4_again->one());
}

TEST_CASE("fq: embeddings are field homomorphisms") {
  for (auto [k, big] : {std::pair{1, 3}, {2, 4}, {2, 6}, {3, 6}, {4, 8}}) {
    const auto src = conic::make_standard_field(k), dst = conic::make_standard_field(big);
    const auto e = conic::FieldEmbedding::into(src, dst);
    CHECK(e(src->one()) == dst->one());
    for (std::uint64_t u = 0; u < src->size(); ++u) {
      for (std::uint64_t v = 0; v < src->size(); ++v) {
        const FqElement x = src->element(u), y = src->element(v);
        CHECK(e(x * y) == e(x) * e(y));
        CHECK(e(x + y) == e(x) + e(y));
      }
    }
  }
  const auto src = conic::make_standard_field(2);
  CHECK_THROWS(conic::FieldEmbedding::into(src, conic::make_standard_field(3)));
}

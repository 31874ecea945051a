#include "brute.hpp"
#include "doctest.h"

#include "conic/bivar_poly.hpp"
#include "conic/conic_analyzer.hpp"
#include "conic/errors.hpp"

using conic::BivarPoly;
using conic::FqElement;
using conic::NumberRing;
using conic::RingElement;
using conic::Variable;
using FqPoly = BivarPoly<FqElement>;
using RingPoly = BivarPoly<RingElement>;

namespace {

FqPoly fq_poly(const conic::FqFieldPtr& f, std::initializer_list<std::tuple<std::uint64_t, unsigned, unsigned>> t) {
  FqPoly p;
  for (auto [c, i, j] : t) p.add_term(f->element(c), i, j);
  return p;
}

}  // namespace

TEST_CASE("bivar: no stored zeros") {
  const auto f = conic::make_standard_field(1);
  FqPoly p = fq_poly(f, {{1, 1, 0}, {1, 0, 0}});
  p.add_term(f->one(), 1, 0);
  CHECK(p.num_terms() == 1);
  p.add_term(f->zero(), 5, 5);
  CHECK(p.num_terms() == 1);
  CHECK((p - p).is_zero());
  CHECK(FqPoly{}.degree_in(Variable::X) == -1);
  CHECK_FALSE(p.coeff(1, 0).has_value());
}

TEST_CASE("bivar: evaluation examples over GF(2)") {
  const auto f = conic::make_standard_field(1);
  const FqElement o = f->one(), z = f->zero();
  CHECK(conic::poly_eval(fq_poly(f, {{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}), z, o).is_zero());
  CHECK(conic::poly_eval(fq_poly(f, {{1, 2, 0}, {1, 0, 2}, {1, 0, 0}}), o, o) == o);
  const auto r = NumberRing::make({0, 1});
  const auto p = conic::primes_above_2(r)[0];
  const auto in = conic::ConicInput::make(r, r->one(), r->zero(), r->one());
  const FqPoly gbar = conic::poly_reduce_mod_P(in.equation(), p);
  CHECK(gbar == fq_poly(p.residue_field, {{1, 2, 0}, {1, 0, 2}, {1, 0, 0}}));
  CHECK(conic::poly_eval(gbar, p.residue_field->one(), p.residue_field->zero()).is_zero());
  CHECK(conic::poly_derivative(gbar, Variable::X).is_zero());
  CHECK(conic::poly_reduce_mod_P(RingPoly{}, p).is_zero());
}

TEST_CASE("bivar: reduction of the regular non-smooth conic over Z[(1+sqrt(-7))/2]") {
  const auto r = NumberRing::make({2, -1, 1});
  const auto p = conic::primes_above_2(r)[0];
  const RingElement t = r->theta();
  const auto in = conic::ConicInput::make(r, r->one() - t, t, r->one() - t);
  CHECK(conic::poly_reduce_mod_P(in.equation(), p) ==
        fq_poly(p.residue_field, {{1, 2, 0}, {1, 0, 2}, {1, 0, 0}}));
}

TEST_CASE("bivar: derivatives") {
  const auto r = NumberRing::make({5, 0, 1});
  const RingElement a = r->element({1, 2}), b = r->element({-3, 1}), c = r->element({4, 0});
  RingPoly f;
  f.add_term(a, 2, 0);
  f.add_term(b, 1, 1);
  f.add_term(c, 0, 2);
  RingPoly want;
  want.add_term(a * conic::Integer(2), 1, 0);
  want.add_term(b, 0, 1);
  CHECK(conic::poly_derivative(f, Variable::X) == want);
  CHECK(conic::poly_derivative(RingPoly::constant(a), Variable::Y).is_zero());
}

TEST_CASE("bivar: Euler identity on random quadratic forms") {
  for (const auto& mp : std::vector<conic::IntVector>{{0, 1}, {5, 0, 1}, {2, -1, 1}, {1, 0, -4, 0, 1}}) {
    const auto r = NumberRing::make(mp);
    for (int t = 0; t < 100; ++t) {
      RingPoly f;
      f.add_term(r->element(brute::random_coords(r->degree(), 40)), 2, 0);
      f.add_term(r->element(brute::random_coords(r->degree(), 40)), 1, 1);
      f.add_term(r->element(brute::random_coords(r->degree(), 40)), 0, 2);
      const RingPoly x = RingPoly::term(r->one(), 1, 0), y = RingPoly::term(r->one(), 0, 1);
      const RingPoly lhs =
          x * conic::poly_derivative(f, Variable::X) + y * conic::poly_derivative(f, Variable::Y);
      CHECK(lhs == f.scaled(r->from_int(2)));
    }
  }
}

TEST_CASE("bivar: evaluation is a ring homomorphism") {
  const auto f = conic::make_standard_field(5);
  auto random_poly = [&] {
    FqPoly p;
    for (int k = 0; k < 6; ++k) {
      p.add_term(f->element(brute::rng()() % 32), static_cast<unsigned>(brute::uniform(0, 3)),
                 static_cast<unsigned>(brute::uniform(0, 3)));
    }
    return p;
  };
  for (int t = 0; t < 300; ++t) {
    const FqPoly p = random_poly(), q = random_poly();
    const FqElement x = f->element(brute::rng()() % 32), y = f->element(brute::rng()() % 32);
    CHECK(conic::poly_eval(p * q, x, y) == conic::poly_eval(p, x, y) * conic::poly_eval(q, x, y));
    CHECK(conic::poly_eval(p + q, x, y) == conic::poly_eval(p, x, y) + conic::poly_eval(q, x, y));
  }
}

TEST_CASE("bivar: evaluation through an embedding") {
  const auto f4 = conic::make_standard_field(2), f16 = conic::make_standard_field(4);
  const auto e = conic::FieldEmbedding::into(f4, f16);
  const FqPoly p = fq_poly(f4, {{2, 1, 0}, {3, 0, 1}, {1, 0, 0}});
  for (std::uint64_t u = 0; u < 16; ++u) {
    const FqElement x = f16->element(u), y = f16->element(15 - u);
    const FqPoly mapped = p.map_coeffs([&](const FqElement& c) { return e(c); });
    CHECK(conic::poly_eval(p, e, x, y) == conic::poly_eval(mapped, x, y));
  }
  CHECK_THROWS_AS(conic::poly_eval(p, f16->one(), f16->one()), conic::FieldMismatchError);
  CHECK_THROWS_AS(conic::poly_eval(p, f4->one(), f16->one()), conic::FieldMismatchError);
}

TEST_CASE("bivar: rational substitution") {
  using ZPoly = BivarPoly<conic::Integer>;
  ZPoly g;  // 3X^2 + 2XY + Y^2 - 1
  g.add_term(3, 2, 0);
  g.add_term(2, 1, 1);
  g.add_term(1, 0, 2);
  g.add_term(-1, 0, 0);
  // X -> (Y + 1) / 2, times 2^2
  ZPoly numer;
  numer.add_term(1, 0, 1);
  numer.add_term(1, 0, 0);
  const ZPoly s = conic::substitute_rational(g, Variable::X, numer, conic::Integer(2));
  ZPoly want;  // 3(Y+1)^2 + 4(Y+1)Y + 4Y^2 - 4
  want.add_term(11, 0, 2);
  want.add_term(10, 0, 1);
  want.add_term(-1, 0, 0);
  CHECK(s == want);
}

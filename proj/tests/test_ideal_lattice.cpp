#include <algorithm>

#include "brute.hpp"
#include "doctest.h"

#include "conic/errors.hpp"
#include "conic/ideal_lattice.hpp"

using conic::IdealLattice;
using conic::Integer;
using conic::IntVector;
using conic::NumberRing;
using conic::RingElement;

namespace {

const std::vector<IntVector> kRings{{0, 1}, {5, 0, 1}, {2, -1, 1}, {1, 0, -4, 0, 1}};

RingElement random_nonzero(const conic::NumberRingPtr& r, long bound) {
  for (;;) {
    RingElement x = r->element(brute::random_coords(r->degree(), bound));
    if (!x.is_zero()) return x;
  }
}

}  // namespace

TEST_CASE("hnf: examples in Z[sqrt(-5)]") {
  const auto r = NumberRing::make({5, 0, 1});
  const std::vector<IntVector> gens{{2, 0}, {0, 2}, {1, 1}, {-5, 1}};
  const IdealLattice p = conic::hnf_reduce(r, gens);
  CHECK(p.basis() == conic::IntMatrix{{2, 1}, {0, 1}});
  CHECK(p.norm() == 2);
  CHECK(p == conic::ideal_from_elems({r->from_int(2), r->one() + r->theta()}));
  const std::vector<IntVector> unit{{1, 0}, {0, 1}};
  CHECK(conic::hnf_reduce(r, unit) == IdealLattice::unit(r));
  const IdealLattice p2 = conic::ideal_mul(p, p);
  CHECK(p2.norm() == 4);
  CHECK(p2 == IdealLattice::principal_integer(r, 2));
  CHECK(p.contains(r->from_int(2)));
}

TEST_CASE("hnf: rank deficiency") {
  const auto r = NumberRing::make({5, 0, 1});
  const std::vector<IntVector> gens{{2, 4}, {1, 2}};
  CHECK_THROWS_AS(conic::hnf_reduce(r, gens), conic::RankDeficientError);
  CHECK_THROWS_AS(conic::ideal_from_elems({r->zero()}), conic::RankDeficientError);
}

TEST_CASE("hnf: normalized, idempotent and order-insensitive") {
  for (const auto& mp : kRings) {
    const auto r = NumberRing::make(mp);
    const int n = r->degree();
    for (int t = 0; t < 60; ++t) {
      std::vector<IntVector> gens;
      for (int g = 0; g < n + 2; ++g) gens.push_back(brute::random_coords(n, 20));
      IdealLattice h = IdealLattice::unit(r);
      try {
        h = conic::hnf_reduce(r, gens);
      } catch (const conic::RankDeficientError&) {
        continue;
      }
      CHECK(h.is_normalized_hnf());
      std::vector<IntVector> cols;
      for (int j = 0; j < n; ++j) cols.push_back(h.basis_element(j).coords());
      CHECK(conic::hnf_reduce(r, cols) == h);
      std::shuffle(gens.begin(), gens.end(), brute::rng());
      gens.push_back(conic::elem_add(r->element(gens[0]), r->element(gens[1])).coords());
      CHECK(conic::hnf_reduce(r, gens) == h);
    }
  }
}

TEST_CASE("ideal: principal ideals in Z[(1+sqrt(-7))/2]") {
  const auto r = NumberRing::make({2, -1, 1});
  const RingElement t = r->theta();
  const IdealLattice p = conic::ideal_from_elems({t});
  CHECK(p.norm() == 2);
  CHECK(p.contains(r->from_int(2)));
  CHECK(conic::ideal_from_elems({r->one()}).is_unit());
  const IdealLattice p2 = conic::ideal_mul(p, p);
  CHECK(p2.contains(t - r->from_int(2)));
  CHECK_FALSE(p2.contains(-t));
}

TEST_CASE("ideal: degree-4 ring") {
  const auto r = NumberRing::make({1, 0, -4, 0, 1});
  const IdealLattice q = conic::ideal_from_elems({r->one() + r->theta()});
  CHECK(conic::ideal_pow(q, 4) == IdealLattice::principal_integer(r, 2));
  CHECK(conic::ideal_from_elems({r->from_int(2), r->one() + r->theta()}) == q);
}

TEST_CASE("ideal: lattices are B-modules, norms multiply") {
  for (const auto& mp : kRings) {
    const auto r = NumberRing::make(mp);
    for (int t = 0; t < 40; ++t) {
      const IdealLattice i = conic::ideal_from_elems({random_nonzero(r, 6), random_nonzero(r, 6)});
      const IdealLattice j = conic::ideal_from_elems({random_nonzero(r, 6)});
      CHECK(i.closed_under_theta());
      const IdealLattice ij = conic::ideal_mul(i, j);
      CHECK(ij.closed_under_theta());
      CHECK(ij.norm() == i.norm() * j.norm());
      CHECK(ij == conic::ideal_mul(j, i));
      CHECK(conic::ideal_mul(i, IdealLattice::unit(r)) == i);
      const IdealLattice s = conic::ideal_sum(i, j);
      CHECK(s.contains(i));
      CHECK(s.contains(j));
      CHECK(i.contains(ij));
      const RingElement x = random_nonzero(r, 30);
      CHECK(conic::ideal_contains(ij, x) == ij.contains(x));
      CHECK(i.contains(x * i.basis_element(0)));
    }
  }
}

TEST_CASE("dedekind: maximality examples") {
  CHECK(conic::dedekind_maximal_at_2(*NumberRing::make({5, 0, 1})));
  CHECK_FALSE(conic::dedekind_maximal_at_2(*NumberRing::make({3, 0, 1})));
  CHECK(conic::dedekind_maximal_at_2(*NumberRing::make({2, -1, 1})));
  CHECK(conic::dedekind_maximal_at_2(*NumberRing::make({1, 0, -4, 0, 1})));
  CHECK(conic::dedekind_maximal_at_2(*NumberRing::make({0, 1})));
  CHECK(conic::dedekind_maximal_at_2(*NumberRing::make({1, 0, 1})));
  CHECK_FALSE(conic::dedekind_maximal_at_2(*NumberRing::make({-5, 0, 1})));
  CHECK_FALSE(conic::dedekind_maximal_at_2(*NumberRing::make({7, 0, 1})));
}

TEST_CASE("primes above 2: examples") {
  {
    const auto r = NumberRing::make({0, 1});
    const auto ps = conic::primes_above_2(r);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].ideal == IdealLattice::principal_integer(r, 2));
    CHECK(ps[0].ramification == 1);
    CHECK(ps[0].residue_degree == 1);
    CHECK(ps[0].to_string() == "(2)");
  }
  {
    const auto r = NumberRing::make({2, -1, 1});
    const auto ps = conic::primes_above_2(r);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].ideal == conic::ideal_from_elems({r->from_int(2), r->theta()}));
    CHECK(ps[1].ideal == conic::ideal_from_elems({r->from_int(2), r->theta() + r->one()}));
    for (const auto& p : ps) CHECK((p.ramification == 1 && p.residue_degree == 1));
  }
  {
    const auto r = NumberRing::make({1, 0, -4, 0, 1});
    const auto ps = conic::primes_above_2(r);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].ramification == 4);
    CHECK(ps[0].residue_degree == 1);
    CHECK(ps[0].second_generator == r->theta() + r->one());
  }
  CHECK_THROWS_AS(conic::primes_above_2(NumberRing::make({3, 0, 1})), conic::NonMaximalOrderError);
}

TEST_CASE("primes above 2: structural invariants in many rings") {
  const std::vector<IntVector> rings{{0, 1},          {5, 0, 1},    {2, -1, 1}, {1, 0, -4, 0, 1},
                                     {1, 1, 1},       {1, 1, 0, 1}, {2, 0, 1},  {-2, 0, 0, 1},
                                     {1, 1, 0, 0, 1}, {-7, 0, 1},   {3, 1, 1},  {1, 1, 1, 1, 1, 1, 1}};
  for (const auto& mp : rings) {
    const auto r = NumberRing::make(mp);
    if (!conic::dedekind_maximal_at_2(*r)) continue;
    const auto ps = conic::primes_above_2(r);
    IdealLattice prod = IdealLattice::unit(r);
    for (const auto& p : ps) {
      CHECK(p.ideal.norm() == Integer(1) << p.residue_degree);
      CHECK(p.contains(r->from_int(2)));
      CHECK(p.contains(p.second_generator));
      CHECK(p.residue_field->degree() == p.residue_degree);
      prod = conic::ideal_mul(prod, conic::ideal_pow(p.ideal, static_cast<unsigned>(p.ramification)));
      const conic::FractionalIdeal inv = conic::prime_inverse(p);
      CHECK(inv.denominator() == 2);
      CHECK((inv * p.ideal).as_integral().is_unit());
      const IdealLattice p2 = conic::ideal_mul(p.ideal, p.ideal);
      for (int t = 0; t < 50; ++t) {
        const RingElement x = r->element(brute::random_coords(r->degree(), 9));
        if (p2.contains(x)) CHECK(p.contains(x));
        CHECK(p.contains(x) == p.residue(x).is_zero());
        CHECK(p.residue(p.lift(p.residue(x))) == p.residue(x));
        CHECK(p.residue(x * x) == p.residue(x) * p.residue(x));
      }
    }
    CHECK(prod == IdealLattice::principal_integer(r, 2));
  }
}

TEST_CASE("prime inverse: examples") {
  {
    const auto r = NumberRing::make({0, 1});
    const auto inv = conic::prime_inverse(conic::primes_above_2(r)[0]);
    CHECK(inv.denominator() == 2);
    CHECK(inv.numerator().is_unit());
  }
  {
    const auto r = NumberRing::make({2, -1, 1});
    const auto inv = conic::prime_inverse(conic::primes_above_2(r)[0]);
    CHECK(inv.denominator() == 2);
    CHECK(inv.numerator() == conic::hnf_reduce(r, std::vector<IntVector>{{2, 0}, {1, -1}}));
  }
  {
    const auto r = NumberRing::make({5, 0, 1});
    const auto p = conic::primes_above_2(r)[0];
    const auto inv = conic::prime_inverse(p);
    CHECK(inv == conic::FractionalIdeal(p.ideal, 2));
  }
}

#include "conic/oracle.hpp"

#include <string>

#include "conic/errors.hpp"

namespace conic {

namespace {

using FqPoly = BivarPoly<FqElement>;

/// Brute-force square root in a residue field, kept apart from fq_sqrt.
FqElement search_sqrt(const FqElement& z) {
  const FqFieldPtr& field = z.field();
  const std::uint64_t q = field->size();
  for (std::uint64_t bits = 0; bits < q; ++bits) {
    const FqElement r = field->element(bits);
    if (r * r == z) return r;
  }
  throw std::logic_error("no square root in a field of characteristic 2");
}

struct FiberField {
  FqFieldPtr field;
  FieldEmbedding embed;
};

FiberField fiber_field(const PrimeAbove2& p, int m, const OracleConfig& cfg) {
  const int k = p.residue_degree * m;
  if (k >= 32 || (std::uint64_t{1} << (2 * k)) > cfg.max_points) {
    throw CapacityError("oracle search over GF(2^" + std::to_string(k) + ")^2 exceeds " +
                        std::to_string(cfg.max_points) + " points");
  }
  if (m == 1) return {p.residue_field, FieldEmbedding::identity(p.residue_field)};
  FqFieldPtr target = make_standard_field(k);
  return {target, FieldEmbedding::into(p.residue_field, target)};
}

std::optional<FiberWitness> search_fibers(const std::vector<PrimeAbove2>& primes,
                                          const std::vector<std::optional<std::vector<FqPoly>>>& systems,
                                          const OracleConfig& cfg) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!systems[i]) continue;
    for (int m = 1; m <= cfg.degree_bound; ++m) {
      FiberField ff = fiber_field(primes[i], m, cfg);
      PointSystem system{ff.field, {}};
      for (const auto& eq : *systems[i]) {
        system.equations.push_back(eq.map_coeffs([&](const FqElement& c) { return ff.embed(c); }));
      }
      if (auto pt = find_common_zero(system, cfg.parallel)) {
        return FiberWitness{i, m, std::move(*pt)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

void OracleConfig::validate() const {
  if (degree_bound < 1) throw InputError("oracle degree bound must be >= 1");
}

std::optional<FiberWitness> find_singular_fiber_point(const ConicInput& input, const OracleConfig& cfg) {
  cfg.validate();
  const auto primes = primes_above_2(input.ring);
  const RingPoly g = input.equation();
  std::vector<std::optional<std::vector<FqPoly>>> systems;
  for (const auto& p : primes) {
    const FqPoly gbar = poly_reduce_mod_P(g, p);
    systems.push_back(std::vector<FqPoly>{gbar, poly_derivative(gbar, Variable::X),
                                          poly_derivative(gbar, Variable::Y)});
  }
  return search_fibers(primes, systems, cfg);
}

std::optional<FiberWitness> find_nonregular_point(const ConicInput& input, const OracleConfig& cfg) {
  cfg.validate();
  const auto primes = primes_above_2(input.ring);
  const RingPoly g = input.equation();
  const NumberRing& ring = *input.ring;
  std::vector<std::optional<std::vector<FqPoly>>> systems;
  for (const auto& p : primes) {
    const FqElement abar = p.residue(input.a);
    const FqElement cbar = p.residue(input.c);
    // Only primes containing (2, b) can carry singular points; when a and c
    // also lie in P the fiber of g is the empty curve 1 = 0.
    if (!p.residue(input.b).is_zero() || (abar.is_zero() && cbar.is_zero())) {
      systems.emplace_back(std::nullopt);
      continue;
    }
    const RingElement d = p.lift(search_sqrt(abar));
    const RingElement e = p.lift(search_sqrt(cbar));
    RingPoly f_p;
    if (!abar.is_zero()) {
      // d^2 g((-eY - 1)/d, Y)
      RingPoly numer;
      numer.add_term(-e, 0, 1);
      numer.add_term(-ring.one(), 0, 0);
      f_p = substitute_rational(g, Variable::X, numer, d);
    } else {
      // e^2 g(X, -1/e)
      f_p = substitute_rational(g, Variable::Y, RingPoly::constant(-ring.one()), e);
    }
    const FractionalIdeal inv = prime_inverse(p);
    std::vector<FqPoly> eqs{poly_reduce_mod_P(g, p)};
    for (int j = 0; j < inv.numerator().degree(); ++j) {
      const RingElement t = inv.basis_numerator(j);
      const RingPoly h = f_p.map_coeffs(
          [&](const RingElement& coeff) { return (coeff * t).divide_exact(inv.denominator()); });
      eqs.push_back(poly_reduce_mod_P(h, p));
    }
    systems.emplace_back(std::move(eqs));
  }
  return search_fibers(primes, systems, cfg);
}

bool smooth_oracle(const ConicInput& input, const OracleConfig& cfg) {
  return !find_singular_fiber_point(input, cfg).has_value();
}

bool regular_oracle(const ConicInput& input, const OracleConfig& cfg) {
  return !find_nonregular_point(input, cfg).has_value();
}

}  // namespace conic

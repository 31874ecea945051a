#include <string>

#include "conic/errors.hpp"
#include "conic/oracle.hpp"

namespace conic {

namespace {

using ZPoly = BivarPoly<Integer>;

constexpr long kMaxExample14Prime = 50;

long eval_mod(const ZPoly& f, long x, long y, long p) {
  long acc = 0;
  for (const auto& [m, c] : f.terms()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    long v = r.get_si();
    for (unsigned i = 0; i < m.x; ++i) v = v * x % p;
    for (unsigned j = 0; j < m.y; ++j) v = v * y % p;
    acc = (acc + v) % p;
  }
  return acc;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

Example14Report example14_verify(long p) {
  if (p > kMaxExample14Prime || !is_small_prime(p)) {
    throw InputError("example14 needs a prime <= " + std::to_string(kMaxExample14Prime) +
                     ", got " + std::to_string(p));
  }
  const auto up = static_cast<unsigned>(p);
  const Integer pz = p;

  ZPoly g;
  g.add_term(pz + 1, up, 0);
  g.add_term(pz * pz, 0, up);
  g.add_term(-1, 0, 0);

  Example14Report report;

  const ZPoly gx = poly_derivative(g, Variable::X);
  const ZPoly gy = poly_derivative(g, Variable::Y);
  for (long x = 0; x < p && !report.not_smooth; ++x) {
    for (long y = 0; y < p; ++y) {
      if (eval_mod(g, x, y, p) == 0 && eval_mod(gx, x, y, p) == 0 && eval_mod(gy, x, y, p) == 0) {
        report.not_smooth = true;
        break;
      }
    }
  }

  // Work in Z = X - 1: the X slot of the polynomials below holds Z.
  ZPoly z_plus_one;
  z_plus_one.add_term(1, 1, 0);
  z_plus_one.add_term(1, 0, 0);
  const ZPoly shifted = substitute_rational(g, Variable::X, z_plus_one, Integer(1));

  ZPoly bracket = ZPoly::term(1, up, 0);
  bool binomials_divisible = true;
  for (long k = 1; k <= p - 1; ++k) {
    const Integer c = binomial(p, k);
    if (c % pz != 0) binomials_divisible = false;
    bracket.add_term(c, static_cast<unsigned>(p - k), 0);
  }
  ZPoly tail_expected;  // p(pY^p + 1)
  tail_expected.add_term(pz * pz, 0, up);
  tail_expected.add_term(pz, 0, 0);

  const ZPoly scaled_bracket = bracket.scaled(pz + 1);
  report.identity_ok =
      binomials_divisible && (shifted - (scaled_bracket + tail_expected)).is_zero();

  // (p^2 Y^p + p) / p, then reduce modulo (p, Z).
  const ZPoly tail = shifted - scaled_bracket;
  bool divisible = true;
  ZPoly residue;
  for (const auto& [m, c] : tail.terms()) {
    if (c % pz != 0) {
      divisible = false;
      break;
    }
    if (m.x != 0) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), Integer(c / pz).get_mpz_t(), pz.get_mpz_t());
    residue.add_term(r, m.x, m.y);
  }
  report.regular = report.identity_ok && divisible && residue == ZPoly::constant(1);
  return report;
}

}  // namespace conic

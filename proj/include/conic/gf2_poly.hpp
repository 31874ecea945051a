#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace conic {

/// Polynomial over GF(2), bit i holding the coefficient of x^i.
///
/// Storage is a fixed 192-bit word array, enough for the product of two
/// polynomials at the input cap. Values are always normalized: there is no
/// separate leading-coefficient field, and the zero polynomial has degree
/// kMinusInfinity.
class Gf2Poly {
 public:
  static constexpr int kWords = 3;
  static constexpr int kCapacityBits = 64 * kWords;
  static constexpr int kMaxInputDegree = 64;
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  constexpr Gf2Poly() = default;

  static Gf2Poly from_bits(std::uint64_t bits);
  static Gf2Poly from_exponents(std::initializer_list<int> exponents);
  static Gf2Poly from_exponents(const std::vector<int>& exponents);
  static Gf2Poly monomial(int exponent);
  static Gf2Poly one() { return from_bits(1); }
  static Gf2Poly x() { return from_bits(2); }

  int degree() const;
  bool is_zero() const;
  bool is_one() const;
  bool coeff(int i) const;
  void set_coeff(int i, bool value);
  void flip_coeff(int i);

  /// Low 64 coefficients, for enumeration of small fields.
  std::uint64_t low_bits() const { return words_[0]; }
  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  Gf2Poly shifted_left(int k) const;
  Gf2Poly derivative() const;
  /// Requires derivative() == 0; returns h with h^2 == *this.
  Gf2Poly square_root() const;

  Gf2Poly& operator+=(const Gf2Poly& other);
  Gf2Poly& operator-=(const Gf2Poly& other) { return *this += other; }
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  /// Carry-less product; throws CapacityError if the result would not fit.
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  /// Orders by (degree, bit value); the two coincide for GF(2) polynomials.
  friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b);

  std::string to_string(char var = 'x') const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

struct Gf2Factor {
  Gf2Poly factor;
  int multiplicity = 0;
  friend bool operator==(const Gf2Factor&, const Gf2Factor&) = default;
};

/// Product over GF(2). Inputs above kMaxInputDegree are rejected.
Gf2Poly gf2_mul(const Gf2Poly& p, const Gf2Poly& q);

Gf2DivMod gf2_divmod(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gf2_mod(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);

/// Rabin's test.
bool gf2_is_irreducible(const Gf2Poly& p);

/// Complete factorization into monic irreducibles, sorted by (degree, bit
/// value). Uses square-free decomposition, distinct-degree splitting and a
/// trace-based equal-degree split with deterministically enumerated probes.
std::vector<Gf2Factor> gf2_factor(const Gf2Poly& p);

/// Smallest irreducible polynomial of the given degree, by bit value.
Gf2Poly gf2_smallest_irreducible(int degree);

}  // namespace conic

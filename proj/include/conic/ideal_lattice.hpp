#pragma once

#include <span>
#include <string>
#include <vector>

#include "conic/fq_field.hpp"
#include "conic/gf2_poly.hpp"
#include "conic/number_ring.hpp"

namespace conic {

/// Square integer matrix, row-major: basis[row][col].
using IntMatrix = std::vector<IntVector>;

/// A nonzero integral ideal of B as a full-rank sublattice of Z^n.
///
/// The basis is the column-style Hermite normal form: column j holds the
/// coordinates of the j-th Z-basis vector and is zero below row j, the
/// diagonal is positive, and each entry right of a diagonal entry lies in
/// [0, diagonal).
class IdealLattice {
 public:
  /// The unit ideal B.
  static IdealLattice unit(const NumberRingPtr& ring);
  /// kB for k != 0.
  static IdealLattice principal_integer(const NumberRingPtr& ring, const Integer& k);

  const NumberRingPtr& ring() const { return ring_; }
  const IntMatrix& basis() const { return basis_; }
  int degree() const { return static_cast<int>(basis_.size()); }

  /// Index [B : I], the product of the diagonal.
  Integer norm() const;
  RingElement basis_element(int j) const;
  std::vector<RingElement> basis_elements() const;

  bool contains(const RingElement& x) const;
  /// Lattice inclusion other ⊆ *this.
  bool contains(const IdealLattice& other) const;
  bool is_unit() const { return norm() == 1; }

  /// theta * (each basis vector) stays in the lattice.
  bool closed_under_theta() const;
  bool is_normalized_hnf() const;

  friend bool operator==(const IdealLattice& a, const IdealLattice& b);

  std::string to_string() const;

 private:
  friend IdealLattice hnf_reduce(const NumberRingPtr& ring, std::span<const IntVector> generators);
  IdealLattice(NumberRingPtr ring, IntMatrix basis);

  NumberRingPtr ring_;
  IntMatrix basis_;
};

/// Normalized HNF of the Z-span of the generators (each of length n).
/// Throws RankDeficientError if the span has rank < n.
IdealLattice hnf_reduce(const NumberRingPtr& ring, std::span<const IntVector> generators);

/// The B-module generated by the elements: Z-span of elem_i * theta^j.
IdealLattice ideal_from_elems(std::span<const RingElement> elems);
IdealLattice ideal_from_elems(std::initializer_list<RingElement> elems);

IdealLattice ideal_mul(const IdealLattice& i, const IdealLattice& j);
IdealLattice ideal_pow(const IdealLattice& i, unsigned exponent);
IdealLattice ideal_sum(const IdealLattice& i, const IdealLattice& j);
bool ideal_contains(const IdealLattice& i, const RingElement& x);

/// numerator / denominator, in lowest terms.
class FractionalIdeal {
 public:
  FractionalIdeal(IdealLattice numerator, Integer denominator);

  const IdealLattice& numerator() const { return numerator_; }
  const Integer& denominator() const { return denominator_; }

  /// Z-basis element j is basis_numerator(j) / denominator().
  RingElement basis_numerator(int j) const { return numerator_.basis_element(j); }

  /// Returns the integral ideal when the denominator is 1, otherwise throws.
  IdealLattice as_integral() const;

  friend FractionalIdeal operator*(const FractionalIdeal& q, const IdealLattice& i);
  friend bool operator==(const FractionalIdeal&, const FractionalIdeal&);

  std::string to_string() const;

 private:
  IdealLattice numerator_;
  Integer denominator_;
};

/// A prime P = (2, beta) of B above 2, read off a Dedekind splitting
/// factor of the minimal polynomial mod 2.
struct PrimeAbove2 {
  IdealLattice ideal;
  RingElement second_generator;
  Gf2Poly residue_modulus;
  int residue_degree = 0;
  int ramification = 0;
  FqFieldPtr residue_field;

  /// The image of x in B/P = GF(2)[x]/(residue_modulus), sending theta to x.
  FqElement residue(const RingElement& x) const;
  /// Lift with 0/1 power-basis coordinates.
  RingElement lift(const FqElement& z) const;
  bool contains(const RingElement& x) const { return ideal.contains(x); }

  std::string to_string() const;
};

/// Dedekind's criterion at 2 for Z[theta].
bool dedekind_maximal_at_2(const NumberRing& ring);

/// Throws NonMaximalOrderError when dedekind_maximal_at_2 fails. Primes are
/// returned in gf2_factor order.
std::vector<PrimeAbove2> primes_above_2(const NumberRingPtr& ring);

/// P^-1 = (1/2){x in B : xP ⊆ 2B}.
FractionalIdeal prime_inverse(const PrimeAbove2& p);

/// Reduction of the minimal polynomial mod 2.
Gf2Poly min_poly_mod_2(const NumberRing& ring);

}  // namespace conic

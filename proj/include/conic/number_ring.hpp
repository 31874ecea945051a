#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace conic {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class RingElement;

/// B = Z[theta] for a monic integer polynomial, in the power basis
/// 1, theta, ..., theta^(n-1). Immutable after construction.
class NumberRing : public std::enable_shared_from_this<NumberRing> {
 public:
  static constexpr int kMaxDegree = 16;

  /// min_poly is constant term first with leading coefficient exactly 1.
  /// Throws InputError for a non-monic polynomial, degree outside [1, 16],
  /// or (for degree >= 2) an integer root, which proves reducibility.
  static std::shared_ptr<const NumberRing> make(IntVector min_poly);
  static std::shared_ptr<const NumberRing> make(std::initializer_list<long> min_poly);

  int degree() const { return degree_; }
  const IntVector& min_poly() const { return min_poly_; }
  /// Coordinates of theta^i * theta^j.
  const IntVector& basis_product(int i, int j) const { return table_[i * degree_ + j]; }

  RingElement zero() const;
  RingElement one() const;
  RingElement theta() const;
  RingElement from_int(const Integer& k) const;
  RingElement element(IntVector coords) const;
  RingElement element(std::initializer_list<long> coords) const;

  bool same_as(const NumberRing& other) const {
    return this == &other || min_poly_ == other.min_poly_;
  }

  /// "x^2 - x + 2" style rendering of the minimal polynomial.
  std::string describe() const;

 private:
  struct Token {};

 public:
  NumberRing(Token, IntVector min_poly);

 private:
  int degree_;
  IntVector min_poly_;
  std::vector<IntVector> table_;
};

using NumberRingPtr = std::shared_ptr<const NumberRing>;

class RingElement {
 public:
  /// coords.size() must equal the ring degree.
  RingElement(NumberRingPtr ring, IntVector coords);

  const NumberRingPtr& ring() const { return ring_; }
  const IntVector& coords() const { return coords_; }
  const Integer& coord(int i) const { return coords_[i]; }
  bool is_zero() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  RingElement& operator*=(const Integer& k);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const Integer& k) { return a *= k; }
  friend RingElement operator*(const Integer& k, RingElement a) { return a *= k; }
  RingElement operator-() const;

  RingElement pow(unsigned exponent) const;
  /// Divides every coordinate by k; throws std::domain_error if inexact.
  RingElement divide_exact(const Integer& k) const;

  friend bool operator==(const RingElement& a, const RingElement& b);

  /// "2 - 3*t + t^2" with t standing for theta.
  std::string to_string() const;

 private:
  NumberRingPtr ring_;
  IntVector coords_;
};

RingElement elem_add(const RingElement& x, const RingElement& y);
RingElement elem_mul(const RingElement& x, const RingElement& y);
RingElement elem_from_int(const Integer& k, const NumberRingPtr& ring);

}  // namespace conic

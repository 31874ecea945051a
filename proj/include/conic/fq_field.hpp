#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "conic/gf2_poly.hpp"

namespace conic {

class FqElement;

/// GF(2^k) realized as GF(2)[x]/(modulus). Always handled through
/// shared_ptr so elements can keep their parent alive.
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  /// Throws std::invalid_argument if the modulus is not irreducible.
  static std::shared_ptr<const FqField> make(const Gf2Poly& modulus);

  const Gf2Poly& modulus() const { return modulus_; }
  int degree() const { return degree_; }
  /// 2^k; only meaningful for k < 64.
  std::uint64_t size() const;

  FqElement zero() const;
  FqElement one() const;
  /// The class of x.
  FqElement generator() const;
  /// Element whose representative has the given coefficient bits.
  FqElement element(std::uint64_t bits) const;
  FqElement element(const Gf2Poly& representative) const;

  bool same_as(const FqField& other) const {
    return this == &other || modulus_ == other.modulus_;
  }

  std::string to_string() const;

 private:
  struct Token {};

 public:
  FqField(Token, Gf2Poly modulus);

 private:
  Gf2Poly modulus_;
  int degree_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

class FqElement {
 public:
  /// Reduces the representative modulo the field's modulus.
  FqElement(FqFieldPtr field, const Gf2Poly& representative);

  const FqFieldPtr& field() const { return field_; }
  const Gf2Poly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_.is_one(); }

  FqElement& operator+=(const FqElement& other);
  FqElement& operator-=(const FqElement& other) { return *this += other; }
  FqElement& operator*=(const FqElement& other);
  friend FqElement operator+(FqElement a, const FqElement& b) { return a += b; }
  friend FqElement operator-(FqElement a, const FqElement& b) { return a += b; }
  friend FqElement operator*(FqElement a, const FqElement& b) { return a *= b; }
  FqElement operator-() const { return *this; }

  FqElement square() const { return *this * *this; }
  FqElement pow(std::uint64_t exponent) const;

  friend bool operator==(const FqElement& a, const FqElement& b);

  std::string to_string() const { return value_.to_string(); }

 private:
  FqFieldPtr field_;
  Gf2Poly value_;
};

/// Unique square root: x^(2^(k-1)).
FqElement fq_sqrt(const FqElement& x);

/// Throws DivisionByZeroError on zero.
FqElement fq_inv(const FqElement& x);

/// Field homomorphism GF(2^k) -> GF(2^K), k | K, determined by the image of
/// the source generator (a root of the source modulus in the target).
class FieldEmbedding {
 public:
  static FieldEmbedding identity(const FqFieldPtr& field);
  /// Picks the root with the smallest bit value. Root search is exhaustive
  /// over the target, so the target must have at most 2^24 elements.
  static FieldEmbedding into(const FqFieldPtr& source, const FqFieldPtr& target);

  const FqFieldPtr& source() const { return source_; }
  const FqFieldPtr& target() const { return target_; }
  const FqElement& generator_image() const { return image_; }

  FqElement operator()(const FqElement& x) const;

 private:
  FieldEmbedding(FqFieldPtr source, FqFieldPtr target, FqElement image);

  FqFieldPtr source_;
  FqFieldPtr target_;
  FqElement image_;
};

/// GF(2^k) with the smallest irreducible modulus of degree k.
FqFieldPtr make_standard_field(int k);

}  // namespace conic

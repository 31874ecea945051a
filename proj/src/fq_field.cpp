#include "conic/fq_field.hpp"

#include <stdexcept>
#include <utility>

#include "conic/errors.hpp"

namespace conic {

namespace {
constexpr int kMaxEmbeddingSearchDegree = 24;

void require_same_field(const FqElement& a, const FqElement& b) {
  if (!a.field()->same_as(*b.field())) throw FieldMismatchError();
}
}  // namespace

FqField::FqField(Token, Gf2Poly modulus) : modulus_(modulus), degree_(modulus.degree()) {}

std::shared_ptr<const FqField> FqField::make(const Gf2Poly& modulus) {
  if (!gf2_is_irreducible(modulus)) {
    throw std::invalid_argument("field modulus " + modulus.to_string() + " is not irreducible");
  }
  return std::make_shared<FqField>(Token{}, modulus);
}

std::uint64_t FqField::size() const {
  if (degree_ >= 64) throw CapacityError("field too large to enumerate");
  return std::uint64_t{1} << degree_;
}

FqElement FqField::zero() const { return FqElement(shared_from_this(), Gf2Poly{}); }
FqElement FqField::one() const { return FqElement(shared_from_this(), Gf2Poly::one()); }
FqElement FqField::generator() const { return FqElement(shared_from_this(), Gf2Poly::x()); }
FqElement FqField::element(std::uint64_t bits) const {
  return FqElement(shared_from_this(), Gf2Poly::from_bits(bits));
}
FqElement FqField::element(const Gf2Poly& representative) const {
  return FqElement(shared_from_this(), representative);
}

std::string FqField::to_string() const {
  return "GF(2^" + std::to_string(degree_) + ") = GF(2)[x]/(" + modulus_.to_string() + ")";
}

FqElement::FqElement(FqFieldPtr field, const Gf2Poly& representative)
    : field_(std::move(field)), value_(gf2_mod(representative, field_->modulus())) {}

FqElement& FqElement::operator+=(const FqElement& other) {
  require_same_field(*this, other);
  value_ += other.value_;
  return *this;
}

FqElement& FqElement::operator*=(const FqElement& other) {
  require_same_field(*this, other);
  value_ = gf2_mod(value_ * other.value_, field_->modulus());
  return *this;
}

FqElement FqElement::pow(std::uint64_t exponent) const {
  FqElement result = field_->one();
  FqElement base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

bool operator==(const FqElement& a, const FqElement& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

FqElement fq_sqrt(const FqElement& x) {
  FqElement r = x;
  for (int i = 1; i < x.field()->degree(); ++i) r = r.square();
  return r;
}

FqElement fq_inv(const FqElement& x) {
  if (x.is_zero()) throw DivisionByZeroError("inverse of zero in " + x.field()->to_string());
  Gf2Poly r0 = x.field()->modulus();
  Gf2Poly r1 = x.value();
  Gf2Poly s0;
  Gf2Poly s1 = Gf2Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = gf2_divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Gf2Poly next = s0 + q * s1;
    s0 = s1;
    s1 = next;
  }
  return x.field()->element(s0);
}

FieldEmbedding::FieldEmbedding(FqFieldPtr source, FqFieldPtr target, FqElement image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

FieldEmbedding FieldEmbedding::identity(const FqFieldPtr& field) {
  return FieldEmbedding(field, field, field->generator());
}

FieldEmbedding FieldEmbedding::into(const FqFieldPtr& source, const FqFieldPtr& target) {
  if (source->same_as(*target)) return identity(source);
  if (target->degree() % source->degree() != 0) {
    throw std::invalid_argument("no embedding of " + source->to_string() + " into " +
                                target->to_string());
  }
  if (target->degree() > kMaxEmbeddingSearchDegree) {
    throw CapacityError("embedding root search limited to GF(2^" +
                        std::to_string(kMaxEmbeddingSearchDegree) + ")");
  }
  const Gf2Poly& f = source->modulus();
  const std::uint64_t n = target->size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    const FqElement z = target->element(bits);
    FqElement value = target->zero();
    for (int i = f.degree(); i >= 0; --i) {
      value *= z;
      if (f.coeff(i)) value += target->one();
    }
    if (value.is_zero()) return FieldEmbedding(source, target, z);
  }
  throw std::logic_error("irreducible modulus has no root in extension field");
}

FqElement FieldEmbedding::operator()(const FqElement& x) const {
  if (!x.field()->same_as(*source_)) throw FieldMismatchError();
  FqElement value = target_->zero();
  const Gf2Poly& rep = x.value();
  for (int i = rep.degree(); i >= 0; --i) {
    value *= image_;
    if (rep.coeff(i)) value += target_->one();
  }
  return value;
}

FqFieldPtr make_standard_field(int k) { return FqField::make(gf2_smallest_irreducible(k)); }

}  // namespace conic

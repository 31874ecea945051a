#include "conic/number_ring.hpp"

#include <stdexcept>
#include <utility>

#include "conic/errors.hpp"

namespace conic {

namespace {

// Divisors of the constant term are tried up to this bound (and their
// cofactors), which makes the integer-root check exhaustive whenever
// |c0| <= 10^14.
constexpr unsigned long kRootTrialLimit = 10'000'000;

Integer evaluate(const IntVector& poly, const Integer& x) {
  Integer acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool has_integer_root(const IntVector& poly) {
  const Integer c0 = abs(poly.front());
  if (c0 == 0) return true;
  auto is_root = [&](const Integer& r) { return evaluate(poly, r) == 0 || evaluate(poly, -r) == 0; };
  for (unsigned long i = 1; i <= kRootTrialLimit; ++i) {
    const Integer d = i;
    if (d * d > c0) break;
    if (mpz_divisible_ui_p(c0.get_mpz_t(), i) == 0) continue;
    if (is_root(d) || is_root(c0 / d)) return true;
  }
  return false;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatchError();
}

std::string render_polynomial(const IntVector& coords, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Integer& c = coords[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

NumberRing::NumberRing(Token, IntVector min_poly)
    : degree_(static_cast<int>(min_poly.size()) - 1), min_poly_(std::move(min_poly)) {
  const int n = degree_;
  // powers[k] = coordinates of theta^k for k <= 2n - 2.
  std::vector<IntVector> powers;
  for (int k = 0; k < n; ++k) {
    IntVector v(n, 0);
    v[k] = 1;
    powers.push_back(std::move(v));
  }
  for (int k = n; k <= 2 * n - 2; ++k) {
    const IntVector& prev = powers.back();
    IntVector next(n, 0);
    const Integer top = prev[n - 1];
    for (int i = 0; i < n; ++i) {
      next[i] = (i > 0 ? prev[i - 1] : Integer(0)) - min_poly_[i] * top;
    }
    powers.push_back(std::move(next));
  }
  table_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table_.push_back(powers[i + j]);
  }
}

std::shared_ptr<const NumberRing> NumberRing::make(IntVector min_poly) {
  if (min_poly.size() < 2) throw InputError("minimal polynomial must have degree >= 1");
  const int n = static_cast<int>(min_poly.size()) - 1;
  if (n > kMaxDegree) {
    throw CapacityError("ring degree " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxDegree));
  }
  if (min_poly.back() != 1) throw InputError("minimal polynomial must be monic");
  if (n >= 2 && has_integer_root(min_poly)) {
    throw InputError("minimal polynomial " + render_polynomial(min_poly, "x") +
                     " has an integer root");
  }
  return std::make_shared<NumberRing>(Token{}, std::move(min_poly));
}

std::shared_ptr<const NumberRing> NumberRing::make(std::initializer_list<long> min_poly) {
  IntVector v;
  for (long c : min_poly) v.emplace_back(c);
  return make(std::move(v));
}

RingElement NumberRing::zero() const { return RingElement(shared_from_this(), IntVector(degree_, 0)); }

RingElement NumberRing::one() const { return from_int(1); }

RingElement NumberRing::theta() const {
  IntVector v(degree_, 0);
  if (degree_ == 1) {
    v[0] = -min_poly_[0];
  } else {
    v[1] = 1;
  }
  return RingElement(shared_from_this(), std::move(v));
}

RingElement NumberRing::from_int(const Integer& k) const {
  IntVector v(degree_, 0);
  v[0] = k;
  return RingElement(shared_from_this(), std::move(v));
}

RingElement NumberRing::element(IntVector coords) const {
  return RingElement(shared_from_this(), std::move(coords));
}

RingElement NumberRing::element(std::initializer_list<long> coords) const {
  IntVector v;
  for (long c : coords) v.emplace_back(c);
  return element(std::move(v));
}

std::string NumberRing::describe() const { return render_polynomial(min_poly_, "x"); }

RingElement::RingElement(NumberRingPtr ring, IntVector coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ring_->degree()) {
    throw InputError("element has " + std::to_string(coords_.size()) +
                     " coordinates, ring degree is " + std::to_string(ring_->degree()));
  }
}

bool RingElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const NumberRing& ring = *a.ring_;
  const int n = ring.degree();
  IntVector out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coords_[j] == 0) continue;
      const Integer s = a.coords_[i] * b.coords_[j];
      const IntVector& t = ring.basis_product(i, j);
      for (int k = 0; k < n; ++k) {
        if (t[k] != 0) out[k] += s * t[k];
      }
    }
  }
  return RingElement(a.ring_, std::move(out));
}

RingElement& RingElement::operator*=(const RingElement& other) { return *this = *this * other; }

RingElement& RingElement::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result = ring_->one();
  RingElement base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

RingElement RingElement::divide_exact(const Integer& k) const {
  if (k == 0) throw DivisionByZeroError("ring element divided by zero");
  RingElement r = *this;
  for (auto& c : r.coords_) {
    if (mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()) == 0) {
      throw std::domain_error("inexact division of " + to_string() + " by " + k.get_str());
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_->same_as(*b.ring_) && a.coords_ == b.coords_;
}

std::string RingElement::to_string() const { return render_polynomial(coords_, "t"); }

RingElement elem_add(const RingElement& x, const RingElement& y) { return x + y; }
RingElement elem_mul(const RingElement& x, const RingElement& y) { return x * y; }
RingElement elem_from_int(const Integer& k, const NumberRingPtr& ring) { return ring->from_int(k); }

}  // namespace conic

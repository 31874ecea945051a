#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conic/errors.hpp"
#include "conic/fq_field.hpp"
#include "conic/ideal_lattice.hpp"
#include "conic/number_ring.hpp"

namespace conic {

enum class Variable { X, Y };

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Per-coefficient-type hooks. Specialized below for RingElement,
/// FqElement and plain integers.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<RingElement> {
  static bool is_zero(const RingElement& c) { return c.is_zero(); }
  static RingElement scale(const RingElement& c, long k) { return c * Integer(k); }
  static RingElement one_like(const RingElement& c) { return c.ring()->one(); }
  static std::string to_string(const RingElement& c);
};

template <>
struct CoeffTraits<FqElement> {
  static bool is_zero(const FqElement& c) { return c.is_zero(); }
  static FqElement scale(const FqElement& c, long k) { return k % 2 == 0 ? c.field()->zero() : c; }
  static FqElement one_like(const FqElement& c) { return c.field()->one(); }
  static std::string to_string(const FqElement& c) { return c.to_string(); }
};

template <>
struct CoeffTraits<Integer> {
  static bool is_zero(const Integer& c) { return c == 0; }
  static Integer scale(const Integer& c, long k) { return c * k; }
  static Integer one_like(const Integer&) { return 1; }
  static std::string to_string(const Integer& c) { return c.get_str(); }
};

template <class C>
concept Coefficient = requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { CoeffTraits<C>::is_zero(a) } -> std::convertible_to<bool>;
  { CoeffTraits<C>::scale(a, 1L) } -> std::convertible_to<C>;
  { CoeffTraits<C>::one_like(a) } -> std::convertible_to<C>;
};

/// Sparse polynomial sum c_ij X^i Y^j. Zero coefficients are never stored,
/// so the zero polynomial has no terms and needs no coefficient context.
template <Coefficient C>
class BivarPoly {
 public:
  using Terms = std::map<Monomial, C>;

  BivarPoly() = default;

  static BivarPoly constant(const C& c) { return term(c, 0, 0); }
  static BivarPoly term(const C& c, unsigned i, unsigned j) {
    BivarPoly p;
    p.add_term(c, i, j);
    return p;
  }

  void add_term(const C& c, unsigned i, unsigned j) {
    if (CoeffTraits<C>::is_zero(c)) return;
    const Monomial m{i, j};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  std::optional<C> coeff(unsigned i, unsigned j) const {
    auto it = terms_.find(Monomial{i, j});
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  /// -1 for the zero polynomial.
  int degree_in(Variable v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(v == Variable::X ? m.x : m.y));
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.x + m.y));
    return d;
  }

  BivarPoly& operator+=(const BivarPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(c, m.x, m.y);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(-c, m.x, m.y);
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  BivarPoly operator-() const { return BivarPoly{} - *this; }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.x + mb.x, ma.y + mb.y);
    }
    return r;
  }

  BivarPoly scaled(const C& k) const {
    BivarPoly r;
    for (const auto& [m, c] : terms_) r.add_term(c * k, m.x, m.y);
    return r;
  }

  BivarPoly pow(unsigned exponent, const C& one) const {
    BivarPoly result = constant(one);
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
  }

  /// Applies f to every coefficient, dropping results that are zero.
  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    BivarPoly<D> r;
    for (const auto& [m, c] : terms_) r.add_term(f(c), m.x, m.y);
    return r;
  }

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in descending (deg X, deg Y) order, coefficients parenthesized.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!out.empty()) out += " + ";
      out += "(" + CoeffTraits<C>::to_string(c) + ")";
      if (m.x) out += "*X" + (m.x > 1 ? "^" + std::to_string(m.x) : std::string{});
      if (m.y) out += "*Y" + (m.y > 1 ? "^" + std::to_string(m.y) : std::string{});
    }
    return out;
  }

 private:
  Terms terms_;
};

inline std::string CoeffTraits<RingElement>::to_string(const RingElement& c) { return c.to_string(); }

template <Coefficient C>
BivarPoly<C> poly_derivative(const BivarPoly<C>& p, Variable v) {
  BivarPoly<C> r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = v == Variable::X ? m.x : m.y;
    if (e == 0) continue;
    const C scaled = CoeffTraits<C>::scale(c, static_cast<long>(e));
    if (v == Variable::X) {
      r.add_term(scaled, m.x - 1, m.y);
    } else {
      r.add_term(scaled, m.x, m.y - 1);
    }
  }
  return r;
}

/// Value at (x, y). The coefficients, x and y must share one field.
FqElement poly_eval(const BivarPoly<FqElement>& p, const FqElement& x, const FqElement& y);

/// Value at (x, y) in the embedding's target, coefficients mapped through it.
FqElement poly_eval(const BivarPoly<FqElement>& p, const FieldEmbedding& embed, const FqElement& x,
                    const FqElement& y);

/// Coefficient-wise image in B/P.
BivarPoly<FqElement> poly_reduce_mod_P(const BivarPoly<RingElement>& p, const PrimeAbove2& prime);

/// D^k * p evaluated with the variable v replaced by numer / D, where k is
/// the degree of p in v. Division-free, so it stays inside the coefficient
/// ring: sum c_ij * numer^i * D^(k-i) * (other variable)^j.
template <Coefficient C>
BivarPoly<C> substitute_rational(const BivarPoly<C>& p, Variable v, const BivarPoly<C>& numer,
                                 const C& denom) {
  const int k = p.degree_in(v);
  if (k < 0) return {};
  const C one = CoeffTraits<C>::one_like(denom);
  std::vector<BivarPoly<C>> numer_pow{BivarPoly<C>::constant(one)};
  std::vector<C> denom_pow{one};
  for (int i = 1; i <= k; ++i) {
    numer_pow.push_back(numer_pow.back() * numer);
    denom_pow.push_back(denom_pow.back() * denom);
  }
  BivarPoly<C> r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = v == Variable::X ? m.x : m.y;
    const C factor = c * denom_pow[k - e];
    const BivarPoly<C> rest =
        v == Variable::X ? BivarPoly<C>::term(factor, 0, m.y) : BivarPoly<C>::term(factor, m.x, 0);
    r += rest * numer_pow[e];
  }
  return r;
}

}  // namespace conic

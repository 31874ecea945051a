#include "conic/gf2_poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "conic/errors.hpp"

namespace conic {

namespace {

void check_input_degree(const Gf2Poly& p, const char* what) {
  if (p.degree() > Gf2Poly::kMaxInputDegree) {
    throw CapacityError(std::string(what) + ": GF(2) polynomial degree exceeds " +
                        std::to_string(Gf2Poly::kMaxInputDegree));
  }
}

void check_bit_index(int i) {
  if (i < 0 || i >= Gf2Poly::kCapacityBits) {
    throw CapacityError("GF(2) polynomial exponent out of range: " + std::to_string(i));
  }
}

}  // namespace

Gf2Poly Gf2Poly::from_bits(std::uint64_t bits) {
  Gf2Poly p;
  p.words_[0] = bits;
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::vector<int>(exponents));
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<int>& exponents) {
  Gf2Poly p;
  for (int e : exponents) p.flip_coeff(e);
  return p;
}

Gf2Poly Gf2Poly::monomial(int exponent) {
  Gf2Poly p;
  p.set_coeff(exponent, true);
  return p;
}

int Gf2Poly::degree() const {
  for (int w = kWords - 1; w >= 0; --w) {
    if (words_[w] != 0) return 64 * w + 63 - std::countl_zero(words_[w]);
  }
  return kMinusInfinity;
}

bool Gf2Poly::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Gf2Poly::is_one() const { return words_[0] == 1 && words_[1] == 0 && words_[2] == 0; }

bool Gf2Poly::coeff(int i) const {
  if (i < 0 || i >= kCapacityBits) return false;
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void Gf2Poly::set_coeff(int i, bool value) {
  check_bit_index(i);
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

void Gf2Poly::flip_coeff(int i) {
  check_bit_index(i);
  words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

Gf2Poly Gf2Poly::shifted_left(int k) const {
  if (is_zero() || k == 0) return *this;
  if (degree() + k >= kCapacityBits) throw CapacityError("GF(2) polynomial overflow in shift");
  Gf2Poly r;
  const int word_shift = k / 64;
  const int bit_shift = k % 64;
  for (int w = kWords - 1; w >= word_shift; --w) {
    std::uint64_t v = words_[w - word_shift] << bit_shift;
    if (bit_shift != 0 && w - word_shift - 1 >= 0) {
      v |= words_[w - word_shift - 1] >> (64 - bit_shift);
    }
    r.words_[w] = v;
  }
  return r;
}

Gf2Poly Gf2Poly::derivative() const {
  // d/dx x^i = i x^(i-1): keep odd exponents, shifted down by one.
  Gf2Poly r;
  for (int w = 0; w < kWords; ++w) {
    std::uint64_t odd = words_[w] & 0xAAAAAAAAAAAAAAAAull;
    r.words_[w] = odd >> 1;
  }
  return r;
}

Gf2Poly Gf2Poly::square_root() const {
  if (!derivative().is_zero()) throw std::invalid_argument("GF(2) polynomial is not a square");
  Gf2Poly r;
  const int d = degree();
  for (int i = 0; 2 * i <= d; ++i) {
    if (coeff(2 * i)) r.set_coeff(i, true);
  }
  return r;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  for (int w = 0; w < kWords; ++w) words_[w] ^= other.words_[w];
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() + b.degree() >= Gf2Poly::kCapacityBits) {
    throw CapacityError("GF(2) polynomial product overflow");
  }
  Gf2Poly r;
  const int db = b.degree();
  for (int i = 0; i <= db; ++i) {
    if (b.coeff(i)) r += a.shifted_left(i);
  }
  return r;
}

std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
  for (int w = Gf2Poly::kWords - 1; w >= 0; --w) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Gf2Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else {
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

Gf2Poly gf2_mul(const Gf2Poly& p, const Gf2Poly& q) {
  check_input_degree(p, "gf2_mul");
  check_input_degree(q, "gf2_mul");
  return p * q;
}

Gf2DivMod gf2_divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("GF(2) polynomial division by zero");
  Gf2DivMod r{{}, a};
  const int db = b.degree();
  for (int dr = r.remainder.degree(); dr >= db; dr = r.remainder.degree()) {
    r.quotient.flip_coeff(dr - db);
    r.remainder += b.shifted_left(dr - db);
  }
  return r;
}

Gf2Poly gf2_mod(const Gf2Poly& a, const Gf2Poly& m) { return gf2_divmod(a, m).remainder; }

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = gf2_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
  return gf2_mod(gf2_mod(a, m) * gf2_mod(b, m), m);
}

namespace {

/// x^(2^k) mod m.
Gf2Poly frobenius_power_of_x(int k, const Gf2Poly& m) {
  Gf2Poly h = gf2_mod(Gf2Poly::x(), m);
  for (int i = 0; i < k; ++i) h = gf2_mulmod(h, h, m);
  return h;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void split_equal_degree(const Gf2Poly& g, int d, std::vector<Gf2Poly>& out) {
  const int n = g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  // Trace to GF(2) of a probe is 0 or 1 in every factor; a probe whose trace
  // differs between two factors splits g.
  for (std::uint64_t bits = 2;; ++bits) {
    const Gf2Poly a = gf2_mod(Gf2Poly::from_bits(bits), g);
    Gf2Poly power = a;
    Gf2Poly trace = a;
    for (int i = 1; i < d; ++i) {
      power = gf2_mulmod(power, power, g);
      trace += power;
    }
    const Gf2Poly h = gf2_gcd(g, trace);
    const int dh = h.degree();
    if (dh > 0 && dh < n) {
      split_equal_degree(h, d, out);
      split_equal_degree(gf2_divmod(g, h).quotient, d, out);
      return;
    }
  }
}

void factor_squarefree(const Gf2Poly& f, int multiplicity, std::map<Gf2Poly, int>& acc) {
  Gf2Poly rest = f;
  Gf2Poly h = gf2_mod(Gf2Poly::x(), rest);
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = gf2_mulmod(h, h, rest);
    const Gf2Poly g = gf2_gcd(h + gf2_mod(Gf2Poly::x(), rest), rest);
    if (!g.is_one()) {
      std::vector<Gf2Poly> parts;
      split_equal_degree(g, d, parts);
      for (const auto& part : parts) acc[part] += multiplicity;
      rest = gf2_divmod(rest, g).quotient;
      h = gf2_mod(h, rest);
    }
  }
  if (rest.degree() > 0) acc[rest] += multiplicity;
}

// Musser's square-free decomposition adapted to characteristic 2.
void factor_into(const Gf2Poly& f, int multiplicity, std::map<Gf2Poly, int>& acc) {
  if (f.degree() <= 0) return;
  const Gf2Poly df = f.derivative();
  if (df.is_zero()) {
    factor_into(f.square_root(), 2 * multiplicity, acc);
    return;
  }
  Gf2Poly c = gf2_gcd(f, df);
  Gf2Poly w = gf2_divmod(f, c).quotient;
  for (int i = 1; !w.is_one(); ++i) {
    const Gf2Poly y = gf2_gcd(w, c);
    const Gf2Poly z = gf2_divmod(w, y).quotient;
    if (!z.is_one()) factor_squarefree(z, i * multiplicity, acc);
    w = y;
    c = gf2_divmod(c, y).quotient;
  }
  if (!c.is_one()) factor_into(c.square_root(), 2 * multiplicity, acc);
}

}  // namespace

bool gf2_is_irreducible(const Gf2Poly& p) {
  check_input_degree(p, "gf2_is_irreducible");
  const int n = p.degree();
  if (n <= 0) return false;
  const Gf2Poly x_mod = gf2_mod(Gf2Poly::x(), p);
  if (frobenius_power_of_x(n, p) != x_mod) return false;
  for (int q : prime_divisors(n)) {
    if (!gf2_gcd(frobenius_power_of_x(n / q, p) + x_mod, p).is_one()) return false;
  }
  return true;
}

std::vector<Gf2Factor> gf2_factor(const Gf2Poly& p) {
  check_input_degree(p, "gf2_factor");
  if (p.degree() < 1) throw std::invalid_argument("gf2_factor requires degree >= 1");
  std::map<Gf2Poly, int> acc;
  factor_into(p, 1, acc);
  std::vector<Gf2Factor> out;
  out.reserve(acc.size());
  for (const auto& [factor, mult] : acc) out.push_back({factor, mult});
  return out;
}

Gf2Poly gf2_smallest_irreducible(int degree) {
  if (degree < 1 || degree > 63) throw CapacityError("irreducible degree out of range");
  const std::uint64_t lo = std::uint64_t{1} << degree;
  const std::uint64_t hi = degree == 63 ? ~std::uint64_t{0} : (lo << 1) - 1;
  for (std::uint64_t bits = lo;; ++bits) {
    const Gf2Poly candidate = Gf2Poly::from_bits(bits);
    if (gf2_is_irreducible(candidate)) return candidate;
    if (bits == hi) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace conic

#include "conic/ideal_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "conic/errors.hpp"

namespace conic {

namespace {

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
}

IntVector unit_vector(int n, int i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

void check_same_ring(const IdealLattice& a, const IdealLattice& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatchError();
}

/// Kernel of a GF(2) matrix whose rows are bitmasks over ncols columns.
std::vector<std::uint32_t> gf2_kernel(std::vector<std::uint32_t> rows, int ncols) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    const std::uint32_t bit = 1u << col;
    auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                           [bit](std::uint32_t r) { return (r & bit) != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<long>(rank), it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::uint32_t> kernel;
  for (int free = 0; free < ncols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::uint32_t v = 1u << free;
    for (std::size_t r = 0; r < rank; ++r) {
      if (rows[r] & (1u << free)) v |= 1u << pivot_col[r];
    }
    kernel.push_back(v);
  }
  return kernel;
}

IntVector int_poly_mul(const IntVector& a, const IntVector& b) {
  IntVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntVector lift_gf2(const Gf2Poly& p) {
  IntVector out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, 0);
  for (int i = 0; i <= p.degree(); ++i) out[i] = p.coeff(i) ? 1 : 0;
  return out;
}

Gf2Poly reduce_int_poly(const IntVector& p) {
  Gf2Poly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mpz_odd_p(p[i].get_mpz_t())) out.set_coeff(static_cast<int>(i), true);
  }
  return out;
}

}  // namespace

IdealLattice::IdealLattice(NumberRingPtr ring, IntMatrix basis)
    : ring_(std::move(ring)), basis_(std::move(basis)) {}

IdealLattice hnf_reduce(const NumberRingPtr& ring, std::span<const IntVector> generators) {
  const int n = ring->degree();
  std::vector<IntVector> vecs;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw InputError("generator length differs from ring degree");
    if (!is_zero_vector(g)) vecs.push_back(g);
  }
  IntMatrix basis(n, IntVector(n, 0));
  for (int row = n - 1; row >= 0; --row) {
    std::size_t pivot = 0;
    for (;;) {
      // Euclid across all vectors on this coordinate, smallest entry as pivot.
      bool found = false;
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i][row] == 0) continue;
        if (!found || abs(vecs[i][row]) < abs(vecs[pivot][row])) pivot = i;
        found = true;
      }
      if (!found) throw RankDeficientError("generators span a lattice of rank < " + std::to_string(n));
      bool done = true;
      const IntVector& p = vecs[pivot];
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (i == pivot || vecs[i][row] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), vecs[i][row].get_mpz_t(), p[row].get_mpz_t());
        for (int k = 0; k <= row; ++k) vecs[i][k] -= q * p[k];
        if (vecs[i][row] != 0) done = false;
      }
      if (done) break;
    }
    IntVector col = std::move(vecs[pivot]);
    vecs.erase(vecs.begin() + static_cast<long>(pivot));
    if (col[row] < 0) {
      for (auto& c : col) c = -c;
    }
    for (int k = 0; k < n; ++k) basis[k][row] = std::move(col[k]);
    std::erase_if(vecs, is_zero_vector);
  }
  for (int j = 1; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[i][j].get_mpz_t(), basis[i][i].get_mpz_t());
      if (q == 0) continue;
      for (int k = 0; k <= i; ++k) basis[k][j] -= q * basis[k][i];
    }
  }
  return IdealLattice(ring, std::move(basis));
}

IdealLattice IdealLattice::unit(const NumberRingPtr& ring) {
  std::vector<IntVector> gens;
  for (int i = 0; i < ring->degree(); ++i) gens.push_back(unit_vector(ring->degree(), i));
  return hnf_reduce(ring, gens);
}

IdealLattice IdealLattice::principal_integer(const NumberRingPtr& ring, const Integer& k) {
  std::vector<IntVector> gens;
  for (int i = 0; i < ring->degree(); ++i) {
    IntVector v(ring->degree(), 0);
    v[i] = k;
    gens.push_back(std::move(v));
  }
  return hnf_reduce(ring, gens);
}

Integer IdealLattice::norm() const {
  Integer d = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) d *= basis_[i][i];
  return d;
}

RingElement IdealLattice::basis_element(int j) const {
  IntVector v(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) v[k] = basis_[k][j];
  return ring_->element(std::move(v));
}

std::vector<RingElement> IdealLattice::basis_elements() const {
  std::vector<RingElement> out;
  for (int j = 0; j < degree(); ++j) out.push_back(basis_element(j));
  return out;
}

bool IdealLattice::contains(const RingElement& x) const {
  if (!x.ring()->same_as(*ring_)) throw RingMismatchError();
  IntVector r = x.coords();
  for (int j = degree() - 1; j >= 0; --j) {
    if (r[j] == 0) continue;
    if (mpz_divisible_p(r[j].get_mpz_t(), basis_[j][j].get_mpz_t()) == 0) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), r[j].get_mpz_t(), basis_[j][j].get_mpz_t());
    for (int k = 0; k <= j; ++k) r[k] -= q * basis_[k][j];
  }
  return true;
}

bool IdealLattice::contains(const IdealLattice& other) const {
  check_same_ring(*this, other);
  for (int j = 0; j < other.degree(); ++j) {
    if (!contains(other.basis_element(j))) return false;
  }
  return true;
}

bool IdealLattice::closed_under_theta() const {
  const RingElement theta = ring_->theta();
  for (int j = 0; j < degree(); ++j) {
    if (!contains(theta * basis_element(j))) return false;
  }
  return true;
}

bool IdealLattice::is_normalized_hnf() const {
  const int n = degree();
  for (int i = 0; i < n; ++i) {
    if (basis_[i][i] <= 0) return false;
    for (int j = 0; j < n; ++j) {
      if (j < i && basis_[i][j] != 0) return false;
      if (j > i && (basis_[i][j] < 0 || basis_[i][j] >= basis_[i][i])) return false;
    }
  }
  return true;
}

bool operator==(const IdealLattice& a, const IdealLattice& b) {
  return a.ring_->same_as(*b.ring_) && a.basis_ == b.basis_;
}

std::string IdealLattice::to_string() const {
  std::string out = "Z<";
  for (int j = 0; j < degree(); ++j) {
    if (j) out += ", ";
    out += basis_element(j).to_string();
  }
  return out + ">";
}

IdealLattice ideal_from_elems(std::span<const RingElement> elems) {
  if (elems.empty()) throw RankDeficientError("ideal needs at least one generator");
  const NumberRingPtr& ring = elems.front().ring();
  const int n = ring->degree();
  std::vector<IntVector> gens;
  bool any_nonzero = false;
  for (const auto& e : elems) {
    if (!e.ring()->same_as(*ring)) throw RingMismatchError();
    if (e.is_zero()) continue;
    any_nonzero = true;
    for (int j = 0; j < n; ++j) gens.push_back((e * ring->element(unit_vector(n, j))).coords());
  }
  if (!any_nonzero) throw RankDeficientError("the zero ideal is not representable");
  return hnf_reduce(ring, gens);
}

IdealLattice ideal_from_elems(std::initializer_list<RingElement> elems) {
  return ideal_from_elems(std::span<const RingElement>(elems.begin(), elems.size()));
}

IdealLattice ideal_mul(const IdealLattice& i, const IdealLattice& j) {
  check_same_ring(i, j);
  std::vector<IntVector> gens;
  const auto bi = i.basis_elements();
  const auto bj = j.basis_elements();
  for (const auto& x : bi) {
    for (const auto& y : bj) gens.push_back((x * y).coords());
  }
  return hnf_reduce(i.ring(), gens);
}

IdealLattice ideal_pow(const IdealLattice& i, unsigned exponent) {
  IdealLattice result = IdealLattice::unit(i.ring());
  for (unsigned k = 0; k < exponent; ++k) result = ideal_mul(result, i);
  return result;
}

IdealLattice ideal_sum(const IdealLattice& i, const IdealLattice& j) {
  check_same_ring(i, j);
  std::vector<IntVector> gens;
  for (const auto& x : i.basis_elements()) gens.push_back(x.coords());
  for (const auto& y : j.basis_elements()) gens.push_back(y.coords());
  return hnf_reduce(i.ring(), gens);
}

bool ideal_contains(const IdealLattice& i, const RingElement& x) { return i.contains(x); }

FractionalIdeal::FractionalIdeal(IdealLattice numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ <= 0) throw std::invalid_argument("fractional ideal denominator must be positive");
  Integer g = denominator_;
  for (const auto& row : numerator_.basis()) {
    for (const auto& c : row) g = gcd(g, c);
  }
  if (g > 1) {
    std::vector<IntVector> gens;
    for (const auto& b : numerator_.basis_elements()) gens.push_back(b.divide_exact(g).coords());
    numerator_ = hnf_reduce(numerator_.ring(), gens);
    denominator_ /= g;
  }
}

IdealLattice FractionalIdeal::as_integral() const {
  if (denominator_ != 1) throw std::domain_error("fractional ideal is not integral");
  return numerator_;
}

FractionalIdeal operator*(const FractionalIdeal& q, const IdealLattice& i) {
  return FractionalIdeal(ideal_mul(q.numerator_, i), q.denominator_);
}

bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
  return a.denominator_ == b.denominator_ && a.numerator_ == b.numerator_;
}

std::string FractionalIdeal::to_string() const {
  if (denominator_ == 1) return numerator_.to_string();
  return "(1/" + denominator_.get_str() + ")" + numerator_.to_string();
}

FqElement PrimeAbove2::residue(const RingElement& x) const {
  Gf2Poly rep;
  for (int j = 0; j < x.ring()->degree(); ++j) {
    if (mpz_odd_p(x.coord(j).get_mpz_t())) rep.set_coeff(j, true);
  }
  return residue_field->element(rep);
}

RingElement PrimeAbove2::lift(const FqElement& z) const {
  if (!z.field()->same_as(*residue_field)) throw FieldMismatchError();
  const int n = ideal.ring()->degree();
  IntVector coords(n, 0);
  for (int j = 0; j < n; ++j) coords[j] = z.value().coeff(j) ? 1 : 0;
  return ideal.ring()->element(std::move(coords));
}

std::string PrimeAbove2::to_string() const {
  if (second_generator.is_zero()) return "(2)";
  return "(2, " + second_generator.to_string() + ")";
}

Gf2Poly min_poly_mod_2(const NumberRing& ring) { return reduce_int_poly(ring.min_poly()); }

bool dedekind_maximal_at_2(const NumberRing& ring) {
  const Gf2Poly fbar = min_poly_mod_2(ring);
  Gf2Poly radical = Gf2Poly::one();
  for (const auto& [g, e] : gf2_factor(fbar)) radical = radical * g;
  const Gf2Poly cofactor = gf2_divmod(fbar, radical).quotient;
  IntVector t = int_poly_mul(lift_gf2(radical), lift_gf2(cofactor));
  const IntVector& f = ring.min_poly();
  t.resize(std::max(t.size(), f.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) t[i] -= f[i];
  for (auto& c : t) {
    if (mpz_odd_p(c.get_mpz_t())) throw std::logic_error("Dedekind lift is not congruent mod 2");
    c /= 2;
  }
  const Gf2Poly tbar = reduce_int_poly(t);
  return gf2_gcd(gf2_gcd(tbar, radical), cofactor).is_one();
}

std::vector<PrimeAbove2> primes_above_2(const NumberRingPtr& ring) {
  if (!dedekind_maximal_at_2(*ring)) throw NonMaximalOrderError();
  std::vector<PrimeAbove2> out;
  const RingElement theta = ring->theta();
  for (const auto& [g, e] : gf2_factor(min_poly_mod_2(*ring))) {
    RingElement beta = ring->zero();
    for (int j = g.degree(); j >= 0; --j) {
      beta *= theta;
      if (g.coeff(j)) beta += ring->one();
    }
    IdealLattice ideal = ideal_from_elems({ring->from_int(2), beta});
    const int k = g.degree();
    if (ideal.norm() != Integer(1) << k) throw std::logic_error("prime above 2 has unexpected norm");
    out.push_back(PrimeAbove2{std::move(ideal), std::move(beta), g, k, e, FqField::make(g)});
  }
  return out;
}

FractionalIdeal prime_inverse(const PrimeAbove2& p) {
  const NumberRingPtr& ring = p.ideal.ring();
  const int n = ring->degree();
  // x P ⊆ 2B is a GF(2)-linear condition on x mod 2: for every basis vector
  // b of P and basis monomial e_i, the coordinates of e_i * b must cancel.
  std::vector<std::uint32_t> rows;
  for (const auto& b : p.ideal.basis_elements()) {
    std::vector<std::uint32_t> rows_here(n, 0);
    for (int i = 0; i < n; ++i) {
      const RingElement prod = ring->element(unit_vector(n, i)) * b;
      for (int k = 0; k < n; ++k) {
        if (mpz_odd_p(prod.coord(k).get_mpz_t())) rows_here[k] |= 1u << i;
      }
    }
    rows.insert(rows.end(), rows_here.begin(), rows_here.end());
  }
  std::vector<IntVector> gens;
  for (int i = 0; i < n; ++i) {
    IntVector v(n, 0);
    v[i] = 2;
    gens.push_back(std::move(v));
  }
  for (std::uint32_t w : gf2_kernel(std::move(rows), n)) {
    IntVector v(n, 0);
    for (int i = 0; i < n; ++i) v[i] = (w >> i) & 1u;
    gens.push_back(std::move(v));
  }
  return FractionalIdeal(hnf_reduce(ring, gens), 2);
}

}  // namespace conic

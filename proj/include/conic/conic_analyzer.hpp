#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conic/bivar_poly.hpp"
#include "conic/ideal_lattice.hpp"
#include "conic/number_ring.hpp"

namespace conic {

using RingPoly = BivarPoly<RingElement>;

/// The conic ring A = B[X,Y]/(aX^2 + bXY + cY^2 - 1).
struct ConicInput {
  NumberRingPtr ring;
  RingElement a;
  RingElement b;
  RingElement c;

  /// Throws RingMismatchError unless a, b, c all live in ring.
  static ConicInput make(NumberRingPtr ring, RingElement a, RingElement b, RingElement c);

  /// g = aX^2 + bXY + cY^2 - 1.
  RingPoly equation() const;
};

enum class FpCase {
  kANotInP,  // F_P = (ae^2 - bde + cd^2)Y^2 + (2ae - bd)Y + (a - d^2)
  kAInP,     // F_P = ae^2 X^2 - beX + (c - e^2)
};

std::string to_string(FpCase c);

/// One membership test of the mod-P^2 regularity criterion.
struct Cor8Condition {
  std::string name;
  RingElement element;
  bool in_p2 = false;
  /// Whether the criterion asks for membership (true) or non-membership.
  bool wants_in_p2 = true;

  bool satisfied() const { return in_p2 == wants_in_p2; }
};

struct PrimeReport {
  PrimeAbove2 prime;
  RingElement d;
  RingElement e;
  FpCase fp_case;
  RingPoly f_p;
  std::vector<Cor8Condition> cor8;
  bool regular_at_p = false;
  /// Generators of (P, F_P P^-1): the Z-basis of P as constants, then
  /// F_P * t_j for the Z-basis t_j of P^-1.
  std::vector<RingPoly> h_factor_generators;
};

struct SingularLocus {
  /// H = A, i.e. A is regular.
  bool unit = true;
  std::vector<PrimeReport> nonregular;
  /// Products of one generator per non-regular factor. Factors equal to A
  /// are left out of the product. Empty when unit.
  std::vector<RingPoly> generators;
};

struct AnalysisReport {
  ConicInput input;
  bool smooth = false;
  std::vector<PrimeReport> gamma;
  bool regular = false;
  bool singular_locus_empty = false;
  SingularLocus singular_locus;
};

/// Per-ring state shared by every analysis over the same B: the primes
/// above 2 with their squares and inverses. Immutable, safe to share
/// between threads.
class ConicAnalyzer {
 public:
  /// Throws NonMaximalOrderError when Z[theta] is not maximal at 2.
  explicit ConicAnalyzer(NumberRingPtr ring);

  const NumberRingPtr& ring() const { return ring_; }
  const std::vector<PrimeAbove2>& primes() const { return primes_; }
  const IdealLattice& prime_square(std::size_t index) const { return squares_[index]; }
  const FractionalIdeal& inverse(std::size_t index) const { return inverses_[index]; }

  bool is_smooth(const ConicInput& input) const;
  /// Indices into primes() of the primes in Γ.
  std::vector<std::size_t> gamma_indices(const ConicInput& input) const;
  std::vector<PrimeAbove2> compute_gamma(const ConicInput& input) const;
  PrimeReport prime_report(std::size_t index, const ConicInput& input) const;
  bool is_regular(const ConicInput& input) const;
  SingularLocus singular_locus(const ConicInput& input) const;
  AnalysisReport analyze(const ConicInput& input) const;

 private:
  void check_ring(const ConicInput& input) const;

  NumberRingPtr ring_;
  std::vector<PrimeAbove2> primes_;
  std::vector<IdealLattice> squares_;
  std::vector<FractionalIdeal> inverses_;
};

bool is_smooth(const ConicInput& input);
std::vector<PrimeAbove2> compute_gamma(const ConicInput& input);

/// Lifts (0/1 coordinates) of the square roots of a and c in B/P.
std::pair<RingElement, RingElement> compute_de(const PrimeAbove2& p, const RingElement& a,
                                               const RingElement& c);

/// Throws std::invalid_argument when a and c both lie in P.
RingPoly compute_FP(const PrimeAbove2& p, const RingElement& a, const RingElement& b,
                    const RingElement& c, const RingElement& d, const RingElement& e);

PrimeReport cor8_check(const PrimeAbove2& p, const ConicInput& input, const RingElement& d,
                       const RingElement& e);

bool is_regular(const ConicInput& input);
SingularLocus singular_locus(const ConicInput& input);
AnalysisReport analyze(const ConicInput& input);

}  // namespace conic

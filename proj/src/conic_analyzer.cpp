#include "conic/conic_analyzer.hpp"

#include <algorithm>
#include <stdexcept>

#include "conic/errors.hpp"

namespace conic {

namespace {

RingPoly constant(const RingElement& c) { return RingPoly::constant(c); }

std::vector<Cor8Condition> conditions_for(const IdealLattice& p2, const ConicInput& in, FpCase fp_case,
                                          const RingElement& d, const RingElement& e) {
  const RingElement& a = in.a;
  const RingElement& b = in.b;
  const RingElement& c = in.c;
  const Integer two = 2;
  std::vector<Cor8Condition> out;
  auto add = [&](std::string name, RingElement x, bool wants) {
    const bool member = p2.contains(x);
    out.push_back(Cor8Condition{std::move(name), std::move(x), member, wants});
  };
  if (fp_case == FpCase::kANotInP) {
    add("b-2de in P^2", b - two * (d * e), true);
    add("cd^2-ae^2 in P^2", c * d * d - a * e * e, true);
    add("a-d^2 notin P^2", a - d * d, false);
  } else {
    add("a in P^2", a, true);
    add("b in P^2", b, true);
    add("c-e^2 notin P^2", c - e * e, false);
  }
  return out;
}

std::vector<RingPoly> h_factor(const PrimeAbove2& p, const FractionalIdeal& inv, const RingPoly& f_p) {
  std::vector<RingPoly> gens;
  for (const auto& x : p.ideal.basis_elements()) gens.push_back(constant(x));
  const int n = inv.numerator().degree();
  for (int j = 0; j < n; ++j) {
    const RingElement t = inv.basis_numerator(j);
    gens.push_back(f_p.map_coeffs(
        [&](const RingElement& coeff) { return (coeff * t).divide_exact(inv.denominator()); }));
  }
  return gens;
}

PrimeReport build_report(const PrimeAbove2& p, const IdealLattice& p2, const FractionalIdeal& inv,
                         const ConicInput& in, const RingElement& d, const RingElement& e) {
  const FpCase fp_case = p.contains(in.a) ? FpCase::kAInP : FpCase::kANotInP;
  RingPoly f_p = compute_FP(p, in.a, in.b, in.c, d, e);
  std::vector<Cor8Condition> cor8 = conditions_for(p2, in, fp_case, d, e);
  const bool regular =
      std::all_of(cor8.begin(), cor8.end(), [](const Cor8Condition& k) { return k.satisfied(); });
  std::vector<RingPoly> gens = h_factor(p, inv, f_p);
  return PrimeReport{p, d, e, fp_case, std::move(f_p), std::move(cor8), regular, std::move(gens)};
}

SingularLocus assemble_locus(const std::vector<PrimeReport>& gamma) {
  SingularLocus locus;
  for (const auto& r : gamma) {
    if (!r.regular_at_p) locus.nonregular.push_back(r);
  }
  locus.unit = locus.nonregular.empty();
  if (locus.unit) return locus;
  locus.generators = locus.nonregular.front().h_factor_generators;
  for (std::size_t i = 1; i < locus.nonregular.size(); ++i) {
    std::vector<RingPoly> next;
    for (const auto& g : locus.generators) {
      for (const auto& h : locus.nonregular[i].h_factor_generators) next.push_back(g * h);
    }
    locus.generators = std::move(next);
  }
  return locus;
}

}  // namespace

ConicInput ConicInput::make(NumberRingPtr ring, RingElement a, RingElement b, RingElement c) {
  for (const RingElement* x : {&a, &b, &c}) {
    if (!x->ring()->same_as(*ring)) throw RingMismatchError();
  }
  return ConicInput{std::move(ring), std::move(a), std::move(b), std::move(c)};
}

RingPoly ConicInput::equation() const {
  RingPoly g;
  g.add_term(a, 2, 0);
  g.add_term(b, 1, 1);
  g.add_term(c, 0, 2);
  g.add_term(-ring->one(), 0, 0);
  return g;
}

std::string to_string(FpCase c) { return c == FpCase::kANotInP ? "a notin P" : "a in P"; }

std::pair<RingElement, RingElement> compute_de(const PrimeAbove2& p, const RingElement& a,
                                               const RingElement& c) {
  return {p.lift(fq_sqrt(p.residue(a))), p.lift(fq_sqrt(p.residue(c)))};
}

RingPoly compute_FP(const PrimeAbove2& p, const RingElement& a, const RingElement& b,
                    const RingElement& c, const RingElement& d, const RingElement& e) {
  const Integer two = 2;
  RingPoly f;
  if (!p.contains(a)) {
    f.add_term(a * e * e - b * d * e + c * d * d, 0, 2);
    f.add_term(two * (a * e) - b * d, 0, 1);
    f.add_term(a - d * d, 0, 0);
    return f;
  }
  if (p.contains(c)) {
    throw std::invalid_argument("F_P undefined: a and c both lie in " + p.to_string());
  }
  f.add_term(a * e * e, 2, 0);
  f.add_term(-(b * e), 1, 0);
  f.add_term(c - e * e, 0, 0);
  return f;
}

PrimeReport cor8_check(const PrimeAbove2& p, const ConicInput& input, const RingElement& d,
                       const RingElement& e) {
  return build_report(p, ideal_mul(p.ideal, p.ideal), prime_inverse(p), input, d, e);
}

ConicAnalyzer::ConicAnalyzer(NumberRingPtr ring)
    : ring_(std::move(ring)), primes_(primes_above_2(ring_)) {
  for (const auto& p : primes_) {
    squares_.push_back(ideal_mul(p.ideal, p.ideal));
    inverses_.push_back(prime_inverse(p));
  }
}

void ConicAnalyzer::check_ring(const ConicInput& input) const {
  if (!input.ring->same_as(*ring_)) throw RingMismatchError();
}

bool ConicAnalyzer::is_smooth(const ConicInput& input) const {
  check_ring(input);
  // √((2,b)B) is the intersection of the primes above 2 containing b.
  return std::all_of(primes_.begin(), primes_.end(), [&](const PrimeAbove2& p) {
    return !p.contains(input.b) || (p.contains(input.a) && p.contains(input.c));
  });
}

std::vector<std::size_t> ConicAnalyzer::gamma_indices(const ConicInput& input) const {
  check_ring(input);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const PrimeAbove2& p = primes_[i];
    if (p.contains(input.b) && !(p.contains(input.a) && p.contains(input.c))) out.push_back(i);
  }
  return out;
}

std::vector<PrimeAbove2> ConicAnalyzer::compute_gamma(const ConicInput& input) const {
  std::vector<PrimeAbove2> out;
  for (std::size_t i : gamma_indices(input)) out.push_back(primes_[i]);
  return out;
}

PrimeReport ConicAnalyzer::prime_report(std::size_t index, const ConicInput& input) const {
  const PrimeAbove2& p = primes_.at(index);
  auto [d, e] = compute_de(p, input.a, input.c);
  return build_report(p, squares_[index], inverses_[index], input, d, e);
}

bool ConicAnalyzer::is_regular(const ConicInput& input) const {
  for (std::size_t i : gamma_indices(input)) {
    if (!prime_report(i, input).regular_at_p) return false;
  }
  return true;
}

SingularLocus ConicAnalyzer::singular_locus(const ConicInput& input) const {
  std::vector<PrimeReport> gamma;
  for (std::size_t i : gamma_indices(input)) gamma.push_back(prime_report(i, input));
  return assemble_locus(gamma);
}

AnalysisReport ConicAnalyzer::analyze(const ConicInput& input) const {
  std::vector<PrimeReport> gamma;
  for (std::size_t i : gamma_indices(input)) gamma.push_back(prime_report(i, input));
  const bool regular = std::all_of(gamma.begin(), gamma.end(),
                                   [](const PrimeReport& r) { return r.regular_at_p; });
  SingularLocus locus = assemble_locus(gamma);
  return AnalysisReport{input, is_smooth(input), std::move(gamma), regular, regular, std::move(locus)};
}

bool is_smooth(const ConicInput& input) { return ConicAnalyzer(input.ring).is_smooth(input); }
std::vector<PrimeAbove2> compute_gamma(const ConicInput& input) {
  return ConicAnalyzer(input.ring).compute_gamma(input);
}
bool is_regular(const ConicInput& input) { return ConicAnalyzer(input.ring).is_regular(input); }
SingularLocus singular_locus(const ConicInput& input) {
  return ConicAnalyzer(input.ring).singular_locus(input);
}
AnalysisReport analyze(const ConicInput& input) { return ConicAnalyzer(input.ring).analyze(input); }

}  // namespace conic

#include "conic/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "conic/conic_analyzer.hpp"
#include "conic/errors.hpp"
#include "conic/oracle.hpp"

namespace conic {

namespace {

const IntVector kZ{0, 1};
const IntVector kSqrtMinus5{5, 0, 1};
const IntVector kHalfSqrtMinus7{2, -1, 1};
const IntVector kDeg4{1, 0, -4, 0, 1};

const std::vector<long> kExample14Primes{2, 3, 5, 7, 11, 13};

std::string coords_label(const IntVector& v) {
  if (v.size() == 1) return v[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

/// Every vector in {0, ..., base-1}^n, first coordinate fastest.
std::vector<IntVector> residue_reps(int n, long base) {
  std::vector<IntVector> out{IntVector(static_cast<std::size_t>(n), Integer(0))};
  for (int i = 0; i < n; ++i) {
    std::vector<IntVector> next;
    for (long r = 0; r < base; ++r) {
      for (IntVector v : out) {
        v[static_cast<std::size_t>(i)] = r;
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Expect = std::function<ExpectedVerdicts(const RingElement&, const RingElement&, const RingElement&)>;

std::vector<CorpusCase> sweep(const std::string& id, const IntVector& min_poly, long base,
                              const std::string& note, const Expect& expect) {
  const NumberRingPtr ring = NumberRing::make(min_poly);
  const auto reps = residue_reps(ring->degree(), base);
  std::vector<CorpusCase> out;
  out.reserve(reps.size() * reps.size() * reps.size());
  for (const auto& a : reps) {
    for (const auto& b : reps) {
      for (const auto& c : reps) {
        const std::string label = id + "/a=" + coords_label(a) + ",b=" + coords_label(b) +
                                  ",c=" + coords_label(c);
        out.push_back(CorpusCase{label, JobConfig{min_poly, a, b, c, std::nullopt},
                                 expect(ring->element(a), ring->element(b), ring->element(c)), note});
      }
    }
  }
  return out;
}

std::vector<CorpusCase> roberts(const std::string& id, bool with_regular) {
  return sweep(id, kZ, 4,
               with_regular ? "regular and not smooth iff (3,2,3), (0,0,3) or (3,0,0) mod 4"
                            : "smooth iff b odd or a, b, c all even",
               [with_regular](const RingElement& a, const RingElement& b, const RingElement& c) {
                 const long x = a.coord(0).get_si(), y = b.coord(0).get_si(), z = c.coord(0).get_si();
                 const bool smooth = y % 2 == 1 || (x % 2 == 0 && y % 2 == 0 && z % 2 == 0);
                 ExpectedVerdicts v{smooth, std::nullopt};
                 if (with_regular) {
                   const bool listed = (x == 3 && y == 2 && z == 3) || (x == 0 && y == 0 && z == 3) ||
                                       (x == 3 && y == 0 && z == 0);
                   v.regular = smooth || listed;
                 }
                 return v;
               });
}

std::vector<CorpusCase> sqrt_minus5() {
  const NumberRingPtr ring = NumberRing::make(kSqrtMinus5);
  const IdealLattice p = ideal_from_elems({ring->from_int(2), ring->one() + ring->theta()});
  const IdealLattice two = IdealLattice::principal_integer(ring, 2);
  const RingElement theta = ring->theta();
  return sweep("z-sqrt-minus5", kSqrtMinus5, 2,
               "smooth iff b notin P or a, b, c in P; regular and not smooth iff "
               "a-t, b, c-t or a, b, c-t or a-t, b, c divisible by 2",
               [=](const RingElement& a, const RingElement& b, const RingElement& c) {
                 const bool smooth =
                     !p.contains(b) || (p.contains(a) && p.contains(b) && p.contains(c));
                 auto div2 = [&](const RingElement& x) { return two.contains(x); };
                 const bool listed = (div2(a - theta) && div2(b) && div2(c - theta)) ||
                                     (div2(a) && div2(b) && div2(c - theta)) ||
                                     (div2(a - theta) && div2(b) && div2(c));
                 return ExpectedVerdicts{smooth, smooth || listed};
               });
}

std::vector<CorpusCase> half_sqrt_minus7() {
  const NumberRingPtr ring = NumberRing::make(kHalfSqrtMinus7);
  const RingElement theta = ring->theta();
  const IdealLattice t = ideal_from_elems({theta});
  const IdealLattice tbar = ideal_from_elems({ring->one() - theta});
  const IdealLattice two = IdealLattice::principal_integer(ring, 2);
  return sweep("z-sqrt-minus7", kHalfSqrtMinus7, 2,
               "smooth iff one of the four divisibility cases by t, 1-t and 2 holds",
               [=](const RingElement& a, const RingElement& b, const RingElement& c) {
                 auto all_in = [&](const IdealLattice& i) {
                   return i.contains(a) && i.contains(b) && i.contains(c);
                 };
                 const bool smooth = (!t.contains(b) && !tbar.contains(b)) ||
                                     (!t.contains(b) && all_in(tbar)) ||
                                     (!tbar.contains(b) && all_in(t)) || all_in(two);
                 return ExpectedVerdicts{smooth, std::nullopt};
               });
}

std::vector<CorpusCase> theta_deg4() {
  const NumberRingPtr ring = NumberRing::make(kDeg4);
  const IdealLattice q = ideal_from_elems({ring->one() + ring->theta()});
  return sweep("z-theta-deg4", kDeg4, 2,
               "smooth iff b not divisible by 1+t or a, b, c all divisible by 1+t",
               [=](const RingElement& a, const RingElement& b, const RingElement& c) {
                 const bool smooth =
                     !q.contains(b) || (q.contains(a) && q.contains(b) && q.contains(c));
                 return ExpectedVerdicts{smooth, std::nullopt};
               });
}

CorpusCase example13_case() {
  return CorpusCase{"example13", JobConfig{kHalfSqrtMinus7, {1, -1}, {0, 1}, {1, -1}, std::nullopt},
                    ExpectedVerdicts{false, true},
                    "(1-t)X^2 + tXY + (1-t)Y^2 - 1 is regular and not smooth"};
}

std::vector<CorpusCheck> example13_checks(const ConicAnalyzer& analyzer, const ConicInput& in) {
  const NumberRingPtr& ring = in.ring;
  const AnalysisReport r = analyzer.analyze(in);
  std::vector<CorpusCheck> out;
  const bool one_prime = r.gamma.size() == 1;
  out.push_back({"gamma = {tB}", one_prime && r.gamma[0].prime.ideal == ideal_from_elems({ring->theta()})});
  if (!one_prime) return out;
  const PrimeReport& p = r.gamma[0];
  out.push_back({"d = 1", p.d == ring->one()});
  out.push_back({"e = 1", p.e == ring->one()});
  const IdealLattice p2 = ideal_mul(p.prime.ideal, p.prime.ideal);
  const Integer two = 2;
  out.push_back({"b-2de in P^2", p2.contains(in.b - two * p.d * p.e)});
  out.push_back({"cd^2-ae^2 = 0", (in.c * p.d * p.d - in.a * p.e * p.e).is_zero()});
  out.push_back({"a-d^2 notin P^2", !p2.contains(in.a - p.d * p.d)});
  return out;
}

std::vector<CorpusCheck> deg4_checks(const ConicAnalyzer& analyzer) {
  const NumberRingPtr& ring = analyzer.ring();
  const auto& primes = analyzer.primes();
  const RingElement q = ring->one() + ring->theta();
  const IdealLattice qb = ideal_from_elems({q});
  std::vector<CorpusCheck> out;
  out.push_back({"one prime above 2", primes.size() == 1});
  out.push_back({"ramification 4, residue degree 1",
                 primes.size() == 1 && primes[0].ramification == 4 && primes[0].residue_degree == 1});
  out.push_back({"(1+t)^4 B = 2B", ideal_pow(qb, 4) == IdealLattice::principal_integer(ring, 2)});
  out.push_back({"(2, 1+t)B = (1+t)B", ideal_from_elems({ring->from_int(2), q}) == qb});
  return out;
}

bool matches(const ExpectedVerdicts& want, const ConicAnalyzer& analyzer, const ConicInput& in) {
  if (want.smooth && *want.smooth != analyzer.is_smooth(in)) return false;
  if (want.regular && *want.regular != analyzer.is_regular(in)) return false;
  return true;
}

void run_cases(CorpusResult& result, std::vector<CorpusCase> cases, const CorpusOptions& options) {
  if (cases.empty()) return;
  if (options.corrupt_expected) {
    auto& s = cases.front().expected.smooth;
    s = !s.value_or(false);
  }
  const NumberRingPtr ring = NumberRing::make(cases.front().config.min_poly);
  const ConicAnalyzer analyzer(ring);
  std::vector<char> ok(cases.size(), 0);
  const auto n = static_cast<long>(cases.size());
  auto eval = [&](long i) {
    const JobConfig& cfg = cases[static_cast<std::size_t>(i)].config;
    const ConicInput in = ConicInput::make(ring, ring->element(cfg.a), ring->element(cfg.b),
                                           ring->element(cfg.c));
    ok[static_cast<std::size_t>(i)] = matches(cases[static_cast<std::size_t>(i)].expected, analyzer, in);
  };
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) eval(i);
  } else {
    for (long i = 0; i < n; ++i) eval(i);
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    ++result.cells;
    if (ok[i]) {
      ++result.passed;
    } else {
      result.failures.push_back(cases[i].id);
    }
  }
}

void add_checks(CorpusResult& result, std::vector<CorpusCheck> checks) {
  for (auto& c : checks) {
    if (!c.passed) result.failures.push_back(result.id + "/" + c.label);
    result.checks.push_back(std::move(c));
  }
}

void run_example14(CorpusResult& result, const CorpusOptions& options) {
  std::vector<long> primes = kExample14Primes;
  if (options.prime) {
    if (!is_small_prime(*options.prime) || *options.prime > 50) {
      throw InputError("example14 needs a prime <= 50, got " + std::to_string(*options.prime));
    }
    primes = {*options.prime};
  }
  const Example14Report want{true, true, true};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const bool ok = example14_verify(primes[i]) == want && !(options.corrupt_expected && i == 0);
    ++result.cells;
    if (ok) {
      ++result.passed;
    } else {
      result.failures.push_back("example14/p=" + std::to_string(primes[i]));
    }
  }
}

}  // namespace

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids{"roberts-smooth", "roberts-mod4", "z-sqrt-minus7",
                                            "z-theta-deg4",   "z-sqrt-minus5", "example13",
                                            "example14"};
  return ids;
}

bool is_corpus_id(const std::string& id) {
  const auto& ids = corpus_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<CorpusCase> corpus_cases(const std::string& id) {
  if (id == "roberts-smooth") return roberts(id, false);
  if (id == "roberts-mod4") return roberts(id, true);
  if (id == "z-sqrt-minus7") return half_sqrt_minus7();
  if (id == "z-theta-deg4") return theta_deg4();
  if (id == "z-sqrt-minus5") return sqrt_minus5();
  if (id == "example13") return {example13_case()};
  if (id == "example14") return {};
  throw InputError("unknown corpus case '" + id + "'");
}

CorpusResult run_corpus(const std::string& id, const CorpusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.prime && id != "example14") {
    throw InputError("--prime only applies to example14");
  }
  CorpusResult result;
  result.id = id;
  std::vector<CorpusCase> cases = corpus_cases(id);
  if (id == "example14") {
    result.note = "(p+1)X^p + p^2 Y^p - 1 is regular and not smooth over Z";
    run_example14(result, options);
  } else {
    result.note = cases.front().note;
    run_cases(result, cases, options);
    if (id == "example13") {
      const NumberRingPtr ring = NumberRing::make(kHalfSqrtMinus7);
      const ConicAnalyzer analyzer(ring);
      const JobConfig& cfg = cases.front().config;
      add_checks(result, example13_checks(analyzer, ConicInput::make(ring, ring->element(cfg.a),
                                                                     ring->element(cfg.b),
                                                                     ring->element(cfg.c))));
    } else if (id == "z-theta-deg4") {
      add_checks(result, deg4_checks(ConicAnalyzer(NumberRing::make(kDeg4))));
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace conic

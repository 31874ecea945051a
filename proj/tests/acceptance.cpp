// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "inputs.hpp"

#include "conic/cli.hpp"
#include "conic/conic_analyzer.hpp"
#include "conic/oracle.hpp"

using conic::ConicAnalyzer;
using conic::ConicInput;
using conic::Integer;
using conic::IntVector;
using conic::NumberRing;
using conic::RingElement;
using RingPoly = conic::RingPoly;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = o.ok && in_time;
  failures += !pass;
  std::string timing = std::to_string(secs).substr(0, 6) + " s";
  if (limit_seconds > 0) timing += " (limit " + std::to_string(static_cast<int>(limit_seconds)) + " s)";
  std::printf("%s %s  %s: %s, %s\n", id, pass ? "PASS" : "FAIL", title, o.detail.c_str(), timing.c_str());
}

long mod(const Integer& x, long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

/// Every vector in {0, 1}^n.
std::vector<IntVector> bit_vectors(int n) {
  std::vector<IntVector> out;
  for (int bits = 0; bits < (1 << n); ++bits) {
    IntVector v;
    for (int i = 0; i < n; ++i) v.emplace_back((bits >> i) & 1);
    out.push_back(v);
  }
  return out;
}

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

Outcome roberts_table() {
  const auto r = NumberRing::make({0, 1});
  const ConicAnalyzer an(r);
  int good = 0;
  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) {
      for (long c = 0; c < 4; ++c) {
        const ConicInput in = ConicInput::make(r, r->from_int(a), r->from_int(b), r->from_int(c));
        const bool got = an.is_regular(in) && !an.is_smooth(in);
        const bool want = (a == 3 && b == 2 && c == 3) || (a == 0 && b == 0 && c == 3) ||
                          (a == 3 && b == 0 && c == 0);
        good += got == want;
      }
    }
  }
  return {good == 64, ratio(good, 64)};
}

Outcome roberts_smooth() {
  const auto r = NumberRing::make({0, 1});
  const ConicAnalyzer an(r);
  int good = 0;
  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) {
      for (long c = 0; c < 4; ++c) {
        const ConicInput in = ConicInput::make(r, r->from_int(a), r->from_int(b), r->from_int(c));
        const bool want = b % 2 == 1 || (a % 2 == 0 && b % 2 == 0 && c % 2 == 0);
        good += an.is_smooth(in) == want;
      }
    }
  }
  return {good == 64, ratio(good, 64)};
}

/// Sweep of {0,1}^n representatives; check(a, b, c, smooth, regular).
template <class Check>
Outcome sweep(const IntVector& min_poly, Check&& check) {
  const auto r = NumberRing::make(min_poly);
  const ConicAnalyzer an(r);
  const auto reps = bit_vectors(r->degree());
  int good = 0, total = 0;
  for (const auto& a : reps) {
    for (const auto& b : reps) {
      for (const auto& c : reps) {
        const ConicInput in = ConicInput::make(r, r->element(a), r->element(b), r->element(c));
        good += check(a, b, c, an.is_smooth(in), an.is_regular(in));
        ++total;
      }
    }
  }
  return {good == total, ratio(good, total)};
}

Outcome sqrt_minus5() {
  // P = (2, 1+t) contains x iff x0 + x1 is even; x = t mod 2 iff x = (0, 1).
  auto in_p = [](const IntVector& x) { return mod(x[0] + x[1], 2) == 0; };
  auto is = [](const IntVector& x, long u, long v) { return x[0] == u && x[1] == v; };
  return sweep({5, 0, 1}, [&](const IntVector& a, const IntVector& b, const IntVector& c, bool smooth,
                              bool regular) {
    const bool want_smooth = !in_p(b) || (in_p(a) && in_p(b) && in_p(c));
    const bool b0 = is(b, 0, 0);
    const bool listed = (is(a, 0, 1) && b0 && is(c, 0, 1)) || (is(a, 0, 0) && b0 && is(c, 0, 1)) ||
                        (is(a, 0, 1) && b0 && is(c, 0, 0));
    return smooth == want_smooth && (regular && !smooth) == listed;
  });
}

Outcome sqrt_minus7() {
  // t = (1+sqrt(-7))/2 divides x iff x0 is even; 1-t divides x iff x0 + x1 is even.
  auto by_t = [](const IntVector& x) { return mod(x[0], 2) == 0; };
  auto by_tbar = [](const IntVector& x) { return mod(x[0] + x[1], 2) == 0; };
  auto by_2 = [](const IntVector& x) { return mod(x[0], 2) == 0 && mod(x[1], 2) == 0; };
  return sweep({2, -1, 1}, [&](const IntVector& a, const IntVector& b, const IntVector& c, bool smooth, bool) {
    const bool want = (!by_t(b) && !by_tbar(b)) ||
                      (!by_t(b) && by_tbar(a) && by_tbar(b) && by_tbar(c)) ||
                      (!by_tbar(b) && by_t(a) && by_t(b) && by_t(c)) || (by_2(a) && by_2(b) && by_2(c));
    return smooth == want;
  });
}

Outcome theta_conic() {
  const auto r = NumberRing::make({2, -1, 1});
  const RingElement t = r->theta(), one = r->one();
  const ConicInput in = ConicInput::make(r, one - t, t, one - t);
  const auto rep = conic::analyze(in);
  std::vector<std::pair<const char*, bool>> facts{{"smooth = false", !rep.smooth},
                                                  {"regular = true", rep.regular},
                                                  {"gamma = {tB}", rep.gamma.size() == 1}};
  if (rep.gamma.size() == 1) {
    const auto& p = rep.gamma[0];
    const auto p2 = conic::ideal_mul(p.prime.ideal, p.prime.ideal);
    facts.back().second = p.prime.ideal == conic::ideal_from_elems({t});
    facts.emplace_back("d = 1", p.d == one);
    facts.emplace_back("e = 1", p.e == one);
    facts.emplace_back("b-2de in P^2", p2.contains(in.b - Integer(2) * p.d * p.e));
    facts.emplace_back("cd^2-ae^2 = 0", (in.c * p.d * p.d - in.a * p.e * p.e).is_zero());
    facts.emplace_back("a-d^2 notin P^2", !p2.contains(in.a - p.d * p.d));
  }
  bool ok = true;
  std::string detail;
  for (const auto& [name, holds] : facts) {
    ok = ok && holds;
    detail += std::string(detail.empty() ? "" : ", ") + name + (holds ? "" : " [violated]");
  }
  return {ok, detail};
}

Outcome degree4() {
  const auto r = NumberRing::make({1, 0, -4, 0, 1});
  const auto primes = conic::primes_above_2(r);
  const RingElement q = r->one() + r->theta();
  const auto qb = conic::ideal_from_elems({q});
  const bool shape = primes.size() == 1 && primes[0].ramification == 4 && primes[0].residue_degree == 1;
  const bool pow4 = conic::ideal_pow(qb, 4) == conic::IdealLattice::principal_integer(r, 2);
  const bool two_gen = conic::ideal_from_elems({r->from_int(2), q}) == qb;
  // 1+t divides x iff the coordinate sum is even.
  auto by_q = [](const IntVector& x) { return mod(x[0] + x[1] + x[2] + x[3], 2) == 0; };
  const Outcome s = sweep({1, 0, -4, 0, 1}, [&](const IntVector& a, const IntVector& b, const IntVector& c,
                                                bool smooth, bool) {
    return smooth == (!by_q(b) || (by_q(a) && by_q(b) && by_q(c)));
  });
  return {shape && pow4 && two_gen && s.ok, std::string("one prime e=4 k=1: ") + (shape ? "yes" : "no") +
                                                  ", (1+t)^4B = 2B: " + (pow4 ? "yes" : "no") +
                                                  ", (2,1+t)B = (1+t)B: " + (two_gen ? "yes" : "no") +
                                                  ", smoothness sweep " + s.detail};
}

Outcome oracle_agreement() {
  int good = 0, total = 0, singular = 0, nonregular = 0;
  std::string per_ring;
  for (const auto& mp : inputs::corpus_rings()) {
    const ConicAnalyzer an(NumberRing::make(mp));
    int ring_good = 0;
    for (int t = 0; t < 200; ++t) {
      const ConicInput in = inputs::random_input(an);
      const bool smooth = conic::smooth_oracle(in), regular = conic::regular_oracle(in);
      ring_good += smooth == an.is_smooth(in) && regular == an.is_regular(in);
      singular += !smooth;
      nonregular += !regular;
    }
    good += ring_good;
    total += 200;
    per_ring += (per_ring.empty() ? "" : " ") + ratio(ring_good, 200);
  }
  return {good == total, ratio(good, total) + " (per ring " + per_ring + "; " + std::to_string(singular) +
                            " not smooth, " + std::to_string(nonregular) + " not regular)"};
}

Outcome p_family() {
  const conic::Example14Report want{true, true, true};
  std::string detail;
  bool ok = true;
  for (long p : {2, 3, 5, 7, 11, 13}) {
    const bool hit = conic::example14_verify(p) == want;
    ok = ok && hit;
    detail += (detail.empty() ? "p=" : ",") + std::to_string(p) + (hit ? "" : "[fail]");
  }
  return {ok, detail + " all (not_smooth, regular, identity_ok)"};
}

Outcome invariants() {
  int failed = 0, checked = 0;
  auto expect = [&](bool b) {
    ++checked;
    failed += !b;
  };
  for (const auto& mp : inputs::corpus_rings()) {
    const ConicAnalyzer an(NumberRing::make(mp));
    const auto& r = an.ring();
    conic::IdealLattice prod = conic::IdealLattice::unit(r);
    for (std::size_t i = 0; i < an.primes().size(); ++i) {
      const auto& p = an.primes()[i];
      expect((an.inverse(i) * p.ideal).as_integral().is_unit());
      prod = conic::ideal_mul(prod, conic::ideal_pow(p.ideal, static_cast<unsigned>(p.ramification)));
    }
    expect(prod == conic::IdealLattice::principal_integer(r, 2));
    for (int t = 0; t < 500; ++t) {
      const ConicInput in = inputs::random_input(an);
      const RingPoly g = in.equation();
      for (const auto& pr : an.analyze(in).gamma) {
        const auto& p = pr.prime;
        expect(p.residue(pr.d * pr.d) == p.residue(in.a));
        expect(p.residue(pr.e * pr.e) == p.residue(in.c));
        for (const auto& [m, c] : pr.f_p.terms()) expect(p.contains(c));
        RingPoly z;
        z.add_term(pr.d, 1, 0);
        z.add_term(pr.e, 0, 1);
        z.add_term(r->one(), 0, 0);
        if (pr.fp_case == conic::FpCase::kANotInP) {
          const RingPoly ey1 = RingPoly::term(pr.e, 0, 1) + RingPoly::constant(r->one());
          const RingPoly rhs = (z * z).scaled(in.a) - (z * ey1).scaled(Integer(2) * in.a) +
                               (RingPoly::term(r->one(), 0, 1) * z).scaled(in.b * pr.d) + pr.f_p;
          expect(g.scaled(pr.d * pr.d) == rhs);
        }
      }
    }
  }
  return {failed == 0, std::to_string(failed) + " failures in " + std::to_string(checked) + " checks"};
}

Outcome non_maximal() {
  const std::string path = (std::filesystem::temp_directory_path() / "conic_x2_plus_3.json").string();
  if (FILE* f = std::fopen(path.c_str(), "w")) {
    std::fputs(R"({"min_poly": [3, 0, 1], "a": [1, 0], "b": [0, 0], "c": [1, 0]})", f);
    std::fclose(f);
  }
  std::ostringstream out, err;
  const int code = conic::run_cli({"analyze", path}, out, err);
  std::remove(path.c_str());
  const bool message = err.str().find("order not maximal at 2") != std::string::npos;
  return {code == 2 && message && out.str().empty(),
          "exit " + std::to_string(code) + (message ? ", non-maximal-order error" : ", wrong message") +
              (out.str().empty() ? ", no verdict printed" : ", verdict printed")};
}

}  // namespace

int main() {
  criterion("AC1", "Roberts regular-not-smooth table", 1, roberts_table);
  criterion("AC2", "Roberts smoothness", 0, roberts_smooth);
  criterion("AC3", "Z[sqrt(-5)] residue sweep", 0, sqrt_minus5);
  criterion("AC4", "Z[(1+sqrt(-7))/2] smoothness cases", 0, sqrt_minus7);
  criterion("AC5", "conic (1-t, t, 1-t) over Z[(1+sqrt(-7))/2]", 0, theta_conic);
  criterion("AC6", "degree-4 ring x^4-4x^2+1", 0, degree4);
  criterion("AC7", "oracle agreement, 200 inputs per ring", 30, oracle_agreement);
  criterion("AC8", "family (p+1)X^p + p^2Y^p - 1", 5, p_family);
  criterion("AC9", "algebraic invariants, 500 inputs per ring", 0, invariants);
  criterion("AC10", "x^2+3 rejected", 0, non_maximal);
  return failures ? 1 : 0;
}

#include "conic/report.hpp"

#include "conic/errors.hpp"
#include "conic/job_config.hpp"

namespace conic {

nlohmann::json poly_to_json(const RingPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({m.x, m.y, coords_to_json(c.coords())});
  return out;
}

namespace {

nlohmann::json polys_to_json(const std::vector<RingPoly>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(poly_to_json(p));
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

nlohmann::json prime_report_to_json(const PrimeReport& r) {
  nlohmann::json cor8 = nlohmann::json::array();
  for (const auto& k : r.cor8) {
    cor8.push_back({{"name", k.name},
                    {"element", coords_to_json(k.element.coords())},
                    {"in_P2", k.in_p2},
                    {"wants_in_P2", k.wants_in_p2}});
  }
  return {{"prime",
           {{"gens", {coords_to_json(r.prime.ideal.ring()->from_int(2).coords()),
                      coords_to_json(r.prime.second_generator.coords())}},
            {"residue_degree", r.prime.residue_degree},
            {"ramification", r.prime.ramification},
            {"residue_modulus", r.prime.residue_modulus.to_string()}}},
          {"case", to_string(r.fp_case)},
          {"d", coords_to_json(r.d.coords())},
          {"e", coords_to_json(r.e.coords())},
          {"F_P", poly_to_json(r.f_p)},
          {"cor8", cor8},
          {"regular_at_P", r.regular_at_p},
          {"H_factor", polys_to_json(r.h_factor_generators)}};
}

nlohmann::json singular_locus_to_json(const SingularLocus& locus) {
  return {{"unit", locus.unit}, {"generators", polys_to_json(locus.generators)}};
}

nlohmann::json report_to_json(const AnalysisReport& report) {
  nlohmann::json gamma = nlohmann::json::array();
  for (const auto& r : report.gamma) gamma.push_back(prime_report_to_json(r));
  return {{"min_poly", coords_to_json(report.input.ring->min_poly())},
          {"smooth", report.smooth},
          {"regular", report.regular},
          {"singular_locus_empty", report.singular_locus_empty},
          {"gamma", gamma},
          {"H", singular_locus_to_json(report.singular_locus)}};
}

void write_text_report(std::ostream& out, const AnalysisReport& report) {
  const ConicInput& in = report.input;
  out << "ring: Z[t], t root of " << in.ring->describe() << "\n";
  out << "a = " << in.a.to_string() << ", b = " << in.b.to_string() << ", c = " << in.c.to_string()
      << "\n";
  out << "smooth: " << yes_no(report.smooth) << "\n";
  out << "regular: " << yes_no(report.regular) << "\n";
  out << "gamma: " << report.gamma.size() << " prime(s)\n";
  for (const auto& r : report.gamma) {
    out << "  P = " << r.prime.to_string() << "  residue degree " << r.prime.residue_degree
        << ", ramification " << r.prime.ramification << "\n";
    out << "    d = " << r.d.to_string() << ", e = " << r.e.to_string() << ", case "
        << to_string(r.fp_case) << "\n";
    out << "    F_P = " << r.f_p.to_string() << "\n";
    for (const auto& k : r.cor8) {
      out << "    [" << (k.satisfied() ? "ok" : "FAIL") << "] " << k.name << ": "
          << k.element.to_string() << (k.in_p2 ? " in P^2" : " notin P^2") << "\n";
    }
    out << "    regular at P: " << yes_no(r.regular_at_p) << "\n";
  }
  out << "singular locus: "
      << (report.singular_locus.unit ? "empty (H = A)" : "V(H), H given by generators") << "\n";
}

void write_singular_locus_text(std::ostream& out, const AnalysisReport& report) {
  for (const auto& r : report.gamma) {
    out << "factor at P = " << r.prime.to_string() << (r.regular_at_p ? " (unit ideal)" : "")
        << "\n";
    for (const auto& g : r.h_factor_generators) out << "  " << g.to_string() << "\n";
  }
  if (report.singular_locus.unit) {
    out << "H = A (unit ideal)\n";
    return;
  }
  out << "H generators (" << report.singular_locus.generators.size() << "):\n";
  for (const auto& g : report.singular_locus.generators) out << "  " << g.to_string() << "\n";
}

ReportVerdicts verdicts_of(const AnalysisReport& report) {
  ReportVerdicts v{report.smooth, report.regular, {}};
  for (const auto& r : report.gamma) {
    PrimeVerdicts pv{r.d.coords(), r.e.coords(), {}, r.regular_at_p};
    for (const auto& k : r.cor8) pv.in_p2.push_back(k.in_p2);
    v.gamma.push_back(std::move(pv));
  }
  return v;
}

ReportVerdicts verdicts_from_json(const nlohmann::json& j) {
  try {
    ReportVerdicts v{j.at("smooth").get<bool>(), j.at("regular").get<bool>(), {}};
    for (const auto& g : j.at("gamma")) {
      PrimeVerdicts pv{coords_from_json(g.at("d"), "d"), coords_from_json(g.at("e"), "e"), {},
                       g.at("regular_at_P").get<bool>()};
      for (const auto& k : g.at("cor8")) pv.in_p2.push_back(k.at("in_P2").get<bool>());
      v.gamma.push_back(std::move(pv));
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report does not follow the schema: ") + e.what());
  }
}

}  // namespace conic

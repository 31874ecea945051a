#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"

#include "conic/conic_analyzer.hpp"

namespace conic {

/// [[i, j, coords], ...] in ascending monomial order.
nlohmann::json poly_to_json(const RingPoly& p);

nlohmann::json prime_report_to_json(const PrimeReport& r);
nlohmann::json singular_locus_to_json(const SingularLocus& locus);
nlohmann::json report_to_json(const AnalysisReport& report);

void write_text_report(std::ostream& out, const AnalysisReport& report);
void write_singular_locus_text(std::ostream& out, const AnalysisReport& report);

/// Every verdict bit of a report, for comparisons between output modes.
struct PrimeVerdicts {
  IntVector d;
  IntVector e;
  std::vector<bool> in_p2;
  bool regular_at_p = false;
  friend bool operator==(const PrimeVerdicts&, const PrimeVerdicts&) = default;
};

struct ReportVerdicts {
  bool smooth = false;
  bool regular = false;
  std::vector<PrimeVerdicts> gamma;
  friend bool operator==(const ReportVerdicts&, const ReportVerdicts&) = default;
};

ReportVerdicts verdicts_of(const AnalysisReport& report);
/// Throws InputError if the document does not follow the report schema.
ReportVerdicts verdicts_from_json(const nlohmann::json& j);

}  // namespace conic

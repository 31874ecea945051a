#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conic/job_config.hpp"

namespace conic {

/// Unset fields are not compared.
struct ExpectedVerdicts {
  std::optional<bool> smooth;
  std::optional<bool> regular;
  friend bool operator==(const ExpectedVerdicts&, const ExpectedVerdicts&) = default;
};

struct CorpusCase {
  std::string id;
  JobConfig config;
  ExpectedVerdicts expected;
  std::string note;
};

struct CorpusOptions {
  bool parallel = true;
  /// Restricts example14 to one prime.
  std::optional<long> prime;
  /// Test hook: flips the expectation of the first cell so the run fails.
  bool corrupt_expected = false;
};

struct CorpusCheck {
  std::string label;
  bool passed = false;
};

struct CorpusResult {
  std::string id;
  std::string note;
  std::size_t cells = 0;
  std::size_t passed = 0;
  /// Labels of mismatching cells and failed side checks.
  std::vector<std::string> failures;
  std::vector<CorpusCheck> checks;
  double seconds = 0;

  bool ok() const { return failures.empty() && passed == cells; }
};

/// Every corpus id, in the order "reproduce all" runs them.
const std::vector<std::string>& corpus_ids();
bool is_corpus_id(const std::string& id);

/// The sweep cells of a corpus entry; empty for example14, which is not a
/// conic over a number ring. Throws InputError on an unknown id.
std::vector<CorpusCase> corpus_cases(const std::string& id);

/// Throws InputError on an unknown id or an unusable --prime.
CorpusResult run_corpus(const std::string& id, const CorpusOptions& options = {});

}  // namespace conic

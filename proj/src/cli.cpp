#include "conic/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"

#include "conic/conic_analyzer.hpp"
#include "conic/corpus.hpp"
#include "conic/errors.hpp"
#include "conic/job_config.hpp"
#include "conic/oracle.hpp"
#include "conic/report.hpp"

namespace conic {

namespace {

const char* verdict(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string file;
  bool json = false;
  std::optional<int> degree_bound;
  bool serial = false;
  std::string corpus_id;
  std::optional<long> prime;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const ConicInput in = make_conic_input(load_job_config(o.file));
  const AnalysisReport r = analyze(in);
  if (o.json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    write_text_report(out, r);
  }
  return kExitOk;
}

int cmd_smooth(const Options& o, std::ostream& out) {
  out << "smooth: " << verdict(is_smooth(make_conic_input(load_job_config(o.file)))) << "\n";
  return kExitOk;
}

int cmd_regular(const Options& o, std::ostream& out) {
  out << "regular: " << verdict(is_regular(make_conic_input(load_job_config(o.file)))) << "\n";
  return kExitOk;
}

int cmd_singular_locus(const Options& o, std::ostream& out) {
  const AnalysisReport r = analyze(make_conic_input(load_job_config(o.file)));
  if (o.json) {
    out << singular_locus_to_json(r.singular_locus).dump(2) << "\n";
  } else {
    write_singular_locus_text(out, r);
  }
  return kExitOk;
}

void print_witness(std::ostream& out, const std::optional<FiberWitness>& w,
                   const std::vector<PrimeAbove2>& primes) {
  if (!w) return;
  out << "  witness over " << primes[w->prime_index].to_string() << " in GF(2^"
      << w->point.field->degree() << "): (" << w->point.x.to_string() << ", "
      << w->point.y.to_string() << ")\n";
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  const JobConfig cfg = load_job_config(o.file);
  const ConicInput in = make_conic_input(cfg);
  OracleConfig oc;
  oc.degree_bound = o.degree_bound.value_or(cfg.oracle_degree_bound.value_or(oc.degree_bound));
  oc.parallel = !o.serial;
  oc.validate();

  const ConicAnalyzer analyzer(in.ring);
  bool smooth = analyzer.is_smooth(in);
  bool regular = analyzer.is_regular(in);
  if (hooks.corrupt_oracle_expectation) {
    smooth = !smooth;
    regular = !regular;
  }
  const auto singular = find_singular_fiber_point(in, oc);
  const auto nonregular = find_nonregular_point(in, oc);
  const bool smooth_ok = smooth == !singular.has_value();
  const bool regular_ok = regular == !nonregular.has_value();

  out << "degree bound: " << oc.degree_bound << "\n";
  out << "smooth:  analyzer " << verdict(smooth) << ", oracle " << verdict(!singular) << "  "
      << (smooth_ok ? "agree" : "DISAGREE") << "\n";
  print_witness(out, singular, analyzer.primes());
  out << "regular: analyzer " << verdict(regular) << ", oracle " << verdict(!nonregular) << "  "
      << (regular_ok ? "agree" : "DISAGREE") << "\n";
  print_witness(out, nonregular, analyzer.primes());
  if (smooth_ok && regular_ok) return kExitOk;
  err << "oracle disagrees with the analyzer\n";
  return kExitMismatch;
}

int cmd_reproduce(const Options& o, std::ostream& out, const CliHooks& hooks) {
  std::vector<std::string> ids;
  if (o.corpus_id == "all") {
    ids = corpus_ids();
  } else if (is_corpus_id(o.corpus_id)) {
    ids = {o.corpus_id};
  } else {
    throw InputError("unknown corpus case '" + o.corpus_id + "'");
  }
  if (o.prime && std::find(ids.begin(), ids.end(), "example14") == ids.end()) {
    throw InputError("--prime only applies to example14");
  }
  CorpusOptions co;
  co.parallel = !o.serial;
  co.corrupt_expected = hooks.corrupt_corpus_expectation;

  std::vector<CorpusResult> results;
  for (const auto& id : ids) {
    co.prime = id == "example14" ? o.prime : std::nullopt;
    results.push_back(run_corpus(id, co));
  }

  out << std::left << std::setw(16) << "case" << std::setw(8) << "result" << std::setw(12)
      << "cells" << "time\n";
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    out << std::setw(16) << r.id << std::setw(8) << (r.ok() ? "pass" : "FAIL") << std::setw(12)
        << (std::to_string(r.passed) + "/" + std::to_string(r.cells)) << std::fixed
        << std::setprecision(3) << r.seconds << "s\n";
    for (const auto& c : r.checks) out << "    [" << (c.passed ? "ok" : "FAIL") << "] " << c.label << "\n";
  }
  for (const auto& r : results) {
    for (const auto& f : r.failures) out << "mismatch: " << f << "\n";
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_example14(const Options& o, std::ostream& out) {
  const Example14Report r = example14_verify(*o.prime);
  out << "p = " << *o.prime << "\n";
  out << "not_smooth: " << verdict(r.not_smooth) << "\n";
  out << "regular: " << verdict(r.regular) << "\n";
  out << "identity_ok: " << verdict(r.identity_ok) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Smoothness and regularity of conics aX^2 + bXY + cY^2 = 1 over rings of integers",
               "conic"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: smoothness, regularity, H");
  analyze_cmd->add_option("file", o.file, "JSON job file")->required();
  analyze_cmd->add_flag("--json", o.json, "Emit JSON");

  auto* smooth_cmd = app.add_subcommand("smooth", "Smoothness verdict");
  smooth_cmd->add_option("file", o.file, "JSON job file")->required();

  auto* regular_cmd = app.add_subcommand("regular", "Regularity verdict");
  regular_cmd->add_option("file", o.file, "JSON job file")->required();

  auto* locus_cmd = app.add_subcommand("singular-locus", "Generators of the ideal H");
  locus_cmd->add_option("file", o.file, "JSON job file")->required();
  locus_cmd->add_flag("--json", o.json, "Emit JSON");

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check against brute-force point search");
  oracle_cmd->add_option("file", o.file, "JSON job file")->required();
  oracle_cmd->add_option("--degree-bound", o.degree_bound, "Largest residue extension degree")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--serial", o.serial, "Use the serial search");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run the built-in corpus");
  reproduce_cmd->add_option("case", o.corpus_id, "Corpus id or 'all'")->required();
  reproduce_cmd->add_option("--prime", o.prime, "Prime for example14");
  reproduce_cmd->add_flag("--serial", o.serial, "Evaluate cells serially");

  auto* ex14_cmd = app.add_subcommand("example14", "The family (p+1)X^p + p^2 Y^p - 1");
  ex14_cmd->add_option("--prime", o.prime, "A prime <= 50")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "conic: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (smooth_cmd->parsed()) return cmd_smooth(o, out);
    if (regular_cmd->parsed()) return cmd_regular(o, out);
    if (locus_cmd->parsed()) return cmd_singular_locus(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out, err, hooks);
    if (reproduce_cmd->parsed()) return cmd_reproduce(o, out, hooks);
    if (ex14_cmd->parsed()) return cmd_example14(o, out);
  } catch (const InputError& e) {
    err << "conic: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "conic: internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace conic

/*
 * suite.hpp: seeded verification corpus and report emission.
 *
 * A corpus member is (operator of size N, random vector f, derived seed).
 * Each check folds its per-member measurements into one record per
 * (check, parameters) pair holding the worst value; a record passes iff
 * measured ≤ tolerance and both are finite.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwa/operators.hpp"

namespace pwa {

struct CorpusParams {
  std::size_t count = 10;
  std::uint64_t seed = 1;
  // Operator sizes; ignored for non-resizable operators.
  std::vector<std::size_t> sizes{16};
  // Replaces the default tolerance of every record of the named check.
  std::map<std::string, double> tolerance_overrides;
};

struct CheckRecord {
  std::string check;
  std::map<std::string, std::string> params;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct CorpusMetadata {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
  std::string operator_spec;
  std::vector<std::uint64_t> member_seeds;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  CorpusMetadata corpus;
  // Empirical constants: c1, c2, A(n,r), C(alpha,n,r), C^h_{m,k}.
  std::map<std::string, double> constants;

  bool passed() const;
};

const std::vector<std::string>& all_checks();

/// The random vector f of the corpus member with the given seed.
HilbertVector corpus_vector(std::uint64_t member_seed, std::size_t dim);

/// Unknown check names raise InvalidParams.
VerificationReport run_suite(const OperatorSpec& spec, const CorpusParams& corpus,
                             const std::vector<std::string>& checks);

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

enum class ReportFormat { json, csv };
ReportFormat report_format_from_string(const std::string& name);

void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out);
void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path);

}  // namespace pwa

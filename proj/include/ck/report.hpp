#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/corpus.hpp"
#include "ck/predicates.hpp"

namespace ck {

struct CheckOutcome {
  std::string name;
  bool ok = false;
  std::string detail;
  std::optional<Witness> witness;
  std::vector<std::string> witness_cycles;  // cycle text per witness element
};

struct PropertyReport {
  std::string group_name;
  long long order = 0;
  int degree = 0;
  int class_count = 0;
  std::vector<long long> class_sizes;
  std::vector<long long> character_degrees;
  std::vector<CheckOutcome> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool all_ok() const;
};

struct VerifyOptions {
  /// Empty runs everything; entries from {BW, A, B, C, DY, 2.2, 2.3, 2.4,
  /// 2.5, 3.1, 4.2}.
  std::vector<std::string> theorems;
  std::optional<long long> prime;
  std::optional<std::string> group_filter;
  bool with_timings = false;
};

std::vector<PropertyReport> run_verification(const Corpus& corpus, const VerifyOptions& options);

nlohmann::json witness_json(const GroupContext& ctx, const Witness& w);
nlohmann::json report_json(const PropertyReport& report, bool with_timings);
nlohmann::json reports_json(const std::vector<PropertyReport>& reports, bool with_timings);
std::string reports_csv(const std::vector<PropertyReport>& reports);
std::string summary_table(const std::vector<PropertyReport>& reports);

nlohmann::json table_json(const GroupContext& ctx);
std::string table_text(const GroupContext& ctx);
nlohmann::json classes_json(const GroupContext& ctx);

nlohmann::json explore_q41(const Corpus& corpus);
nlohmann::json explore_q43(const Corpus& corpus);

}  // namespace ck

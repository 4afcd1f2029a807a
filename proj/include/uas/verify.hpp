#ifndef UAS_VERIFY_HPP
#define UAS_VERIFY_HPP

#include "uas/config.hpp"
#include "uas/json_io.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace uas {

struct VerifyRow {
  std::string check;
  Json expected;
  Json computed;
  std::string source;  // "published" or "derived"
  bool pass = false;
  double seconds = 0;
};

struct VerifyReport {
  std::string suite;
  std::string anchor;  // where the expected values come from
  std::string title;
  std::vector<VerifyRow> rows;  // ordered by check name
  Settings settings;
  double seconds = 0;

  bool pass() const;
  // Timings are left out unless asked for, so reports are byte-stable.
  Json json(bool timings = false) const;
  std::string text() const;
};

std::vector<std::string> verify_suite_ids();
// Accepts a suite id or one of the aliases listed in its expected-value file.
std::string resolve_suite(std::string_view id);
Json expected_table(std::string_view suite);
// Runs every check of the suite (in parallel over settings().threads) and
// compares with the embedded expected values.
VerifyReport run_verify(std::string_view id);
// JSON schema of VerifyReport::json().
const std::string& verify_report_schema();

}  // namespace uas

#endif

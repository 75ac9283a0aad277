// Machine-readable reports emitted by the command-line tool.
#pragma once

#include "hilbdim/arith.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace hilbdim {

using Json = nlohmann::ordered_json;

struct ReportRow {
  Json input = Json::object();
  Json computed = Json::object();
  Json paper = Json::object();  // values as printed in the source tables
  bool pass = false;
  std::vector<std::string> notes;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
  std::string command;
  std::string version = HILBDIM_VERSION;
  std::vector<ReportRow> rows;

  int pass_count() const;
  int fail_count() const;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class OutputFormat { text, json, csv };

/// {"command", "version", "rows": [{"input","computed","paper","pass","notes"}], "summary": {"pass","fail"}}
Json to_json(const Report& r);
/// Inverse of to_json; throws InvalidArgument on schema violations or an
/// inconsistent summary.
Report report_from_json(const Json& j);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json json_integer(const Integer& z);

/// One "PASS|FAIL  key=value ..." line per row followed by a summary line.
void write_text(std::ostream& os, const Report& r, bool quiet);
void write_csv(std::ostream& os, const Report& r);
void write_report(std::ostream& os, const Report& r, OutputFormat format, bool quiet);

}  // namespace hilbdim

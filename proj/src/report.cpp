#include "hilbdim/report.hpp"

#include <algorithm>
#include <limits>

namespace hilbdim {

int Report::pass_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass; }));
}

int Report::fail_count() const { return static_cast<int>(rows.size()) - pass_count(); }

Json json_integer(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max()) {
    return z.convert_to<long long>();
  }
  return z.str();
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["version"] = r.version;
  j["rows"] = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["input"] = row.input;
    jr["computed"] = row.computed;
    jr["paper"] = row.paper;
    jr["pass"] = row.pass;
    jr["notes"] = row.notes;
    j["rows"].push_back(std::move(jr));
  }
  j["summary"] = {{"pass", r.pass_count()}, {"fail", r.fail_count()}};
  return j;
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    if (j.contains("version")) r.version = j.at("version").get<std::string>();
    for (const auto& jr : j.at("rows")) {
      ReportRow row;
      row.input = jr.at("input");
      row.computed = jr.at("computed");
      row.paper = jr.at("paper");
      row.pass = jr.at("pass").get<bool>();
      row.notes = jr.at("notes").get<std::vector<std::string>>();
      r.rows.push_back(std::move(row));
    }
    const auto& summary = j.at("summary");
    if (summary.at("pass").get<int>() != r.pass_count() ||
        summary.at("fail").get<int>() != r.fail_count()) {
      throw InvalidArgument("report summary disagrees with its rows");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += scalar(v[i]);
    }
    return s;
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      if (!first) s += " ";
      first = false;
      s += k + "=" + scalar(x);
    }
    return s + "}";
  }
  return v.dump();
}

std::string flatten(const Json& obj, const char* sep) {
  std::string s;
  for (const auto& [k, v] : obj.items()) {
    if (!s.empty()) s += sep;
    s += k + "=" + scalar(v);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void write_text(std::ostream& os, const Report& r, bool quiet) {
  if (!quiet) {
    os << r.command << "\n";
    for (const auto& row : r.rows) {
      os << (row.pass ? "PASS" : "FAIL") << "  " << flatten(row.input, " ");
      if (!row.computed.empty()) os << "  | " << flatten(row.computed, " ");
      if (!row.paper.empty()) os << "  | printed: " << flatten(row.paper, " ");
      os << "\n";
      for (const auto& note : row.notes) os << "      note: " << note << "\n";
    }
  }
  os << "summary: " << r.pass_count() << " pass, " << r.fail_count() << " fail\n";
}

void write_csv(std::ostream& os, const Report& r) {
  os << "command,row,pass,input,computed,paper,notes\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    std::string notes;
    for (std::size_t k = 0; k < row.notes.size(); ++k) {
      if (k) notes += "; ";
      notes += row.notes[k];
    }
    os << csv_field(r.command) << "," << i + 1 << "," << (row.pass ? "true" : "false") << ","
       << csv_field(flatten(row.input, ";")) << "," << csv_field(flatten(row.computed, ";")) << ","
       << csv_field(flatten(row.paper, ";")) << "," << csv_field(notes) << "\n";
  }
}

void write_report(std::ostream& os, const Report& r, OutputFormat format, bool quiet) {
  switch (format) {
    case OutputFormat::json:
      os << to_json(r).dump(2) << "\n";
      break;
    case OutputFormat::csv:
      write_csv(os, r);
      break;
    case OutputFormat::text:
      write_text(os, r, quiet);
      break;
  }
}

}  // namespace hilbdim

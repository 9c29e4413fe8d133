#include "slopes/report.hpp"

#include <sstream>

namespace slopes {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::error: return "error";
  }
  return "?";
}

void VerificationReport::add_mismatch(nlohmann::json what) {
  if (!details.contains("mismatches")) details["mismatches"] = nlohmann::json::array();
  details["mismatches"].push_back(std::move(what));
  if (outcome == Outcome::pass) outcome = Outcome::fail;
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = std::move(p);
  j["outcome"] = to_string(r.outcome);
  j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string csv_header() { return "claim,outcome,elapsed_ms,params,detail"; }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv_line(const VerificationReport& r) {
  std::ostringstream params;
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) params << ';';
    params << r.params[i].first << '=' << r.params[i].second;
  }
  std::string detail;
  if (r.details.contains("mismatches"))
    detail = std::to_string(r.details["mismatches"].size()) + " mismatches";
  std::ostringstream line;
  line << csv_escape(r.claim) << ',' << to_string(r.outcome) << ',' << r.elapsed_ms << ','
       << csv_escape(params.str()) << ',' << csv_escape(detail);
  return line.str();
}

}  // namespace slopes

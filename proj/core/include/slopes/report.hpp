#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace slopes {

enum class Outcome { pass, fail, error };

const char* to_string(Outcome o);

// Structured pass/fail record for one claim at one parameter point.
// Invariant: outcome == pass implies an empty mismatch list.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  Outcome outcome = Outcome::pass;
  nlohmann::json details = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;

  void add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }
  void add_param(const std::string& key, long value) {
    params.emplace_back(key, std::to_string(value));
  }

  // Records a failed sub-check under details["mismatches"] and flips the
  // outcome to fail.
  void add_mismatch(nlohmann::json what);

  bool passed() const { return outcome == Outcome::pass; }
};

std::string to_json_line(const VerificationReport& r);
std::string csv_header();
std::string to_csv_line(const VerificationReport& r);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace slopes

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slopes::cli {

// Exit code contract: 0 all-pass, 1 any verification failure, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class ReportFormat { json, csv };

struct VerifyClassicalOptions {
  std::vector<long> weights;  // explicit weights; when empty, use the range
  long from = 12;
  long to = 512;
  long step = 2;
  bool long_tier = false;  // extend the range to k = 2048
  int jobs = 0;            // 0: SLOPES_JOBS or hardware concurrency
  ReportFormat format = ReportFormat::json;
  bool ordered = false;    // emit reports in weight order instead of completion order
};
int cmd_verify_classical(const VerifyClassicalOptions& opt, std::ostream& out,
                         std::ostream& err);

struct SlopesOptions {
  enum class Weight { w0, p11 };
  Weight weight = Weight::w0;
  long count = 0;
  long truncation_cap = 1024;
};
int cmd_slopes(const SlopesOptions& opt, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  std::vector<std::string> names;  // subset of the known suites
  long adb_nmax = 60;
  long integrality_nmax = 200;
  long minors_nmax = 40;
  long selfadjoint_nmax = 60;
  long nplemma_nmax = 8;
  long nplemma_seeds = 10;
  long appendix_prec = 200;
  long ufcross_kmax = 24;
  int jobs = 0;
  ReportFormat format = ReportFormat::json;
};
int cmd_suite(const SuiteOptions& opt, std::ostream& out, std::ostream& err);

struct QexpOptions {
  std::string series;  // delta | f | g | e4 | e6 | theta | j-inverse
  long terms = 0;
  std::string output;  // empty: stdout
};
int cmd_qexp(const QexpOptions& opt, std::ostream& out, std::ostream& err);

// SLOPES_JOBS env override, else hardware concurrency.
int default_jobs();

}  // namespace slopes::cli

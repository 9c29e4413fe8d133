#include "slopes/commands.hpp"

#include "slopes/classical.hpp"
#include "slopes/parallel.hpp"
#include "slopes/qseries.hpp"
#include "slopes/series.hpp"
#include "slopes/spectral.hpp"
#include "slopes/valuation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace slopes::cli {

int default_jobs() {
  if (const char* env = std::getenv("SLOPES_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

std::string render(const VerificationReport& r, ReportFormat f) {
  return f == ReportFormat::json ? to_json_line(r) : to_csv_line(r);
}

// Runs one report-producing task per item, streaming results either as they
// complete or buffered in input order.
int run_report_stream(long count, int jobs, bool ordered, ReportFormat format,
                      std::ostream& out,
                      const std::function<VerificationReport(long)>& task) {
  std::mutex out_mu;
  std::vector<VerificationReport> buffered;
  if (ordered) buffered.resize(static_cast<std::size_t>(count));
  bool all_pass = true;

  if (format == ReportFormat::csv) out << csv_header() << '\n';
  parallel_for(count, jobs, [&](long i) {
    VerificationReport rep = task(i);
    std::lock_guard<std::mutex> lock(out_mu);
    if (!rep.passed()) all_pass = false;
    if (ordered)
      buffered[static_cast<std::size_t>(i)] = std::move(rep);
    else
      out << render(rep, format) << '\n';
  });
  if (ordered)
    for (const auto& rep : buffered) out << render(rep, format) << '\n';
  out.flush();
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int cmd_verify_classical(const VerifyClassicalOptions& opt, std::ostream& out,
                         std::ostream& err) {
  std::vector<long> weights = opt.weights;
  if (weights.empty()) {
    long to = opt.long_tier ? std::max<long>(opt.to, 2048) : opt.to;
    if (opt.step <= 0 || opt.step % 2 != 0) {
      err << "usage error: step must be a positive even integer\n";
      return kExitUsage;
    }
    for (long k = opt.from; k <= to; k += opt.step) weights.push_back(k);
  }
  if (weights.empty()) {
    err << "usage error: empty weight range\n";
    return kExitUsage;
  }
  for (long k : weights) {
    if (k < 12 || k % 2 != 0) {
      err << "usage error: weight " << k << " is not an even integer >= 12\n";
      return kExitUsage;
    }
  }

  int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
  return run_report_stream(static_cast<long>(weights.size()), jobs, opt.ordered, opt.format,
                           out, [&](long i) {
                             return verify_classical_polygon(weights[static_cast<std::size_t>(i)]);
                           });
}

int cmd_slopes(const SlopesOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.count < 1) {
    err << "usage error: slope count must be >= 1\n";
    return kExitUsage;
  }
  if (opt.weight == SlopesOptions::Weight::p11) {
    out << "n\tpredicted_v11\n";
    for (long n = 1; n <= opt.count; ++n) out << n << '\t' << slope_p11(n) << '\n';
    return kExitPass;
  }

  SpectralSlopes computed;
  try {
    computed = spectral_slopes(opt.count, opt.truncation_cap);
  } catch (const std::exception& e) {
    err << "stabilization failure: " << e.what() << '\n';
    return kExitFail;
  }
  out << "n\tpredicted_v2\tcomputed_v2\n";
  bool mismatch = false;
  for (long n = 1; n <= opt.count; ++n) {
    const Rat& s = computed.slopes.slopes[static_cast<std::size_t>(n - 1)];
    out << n << '\t' << slope_weight0(n) << '\t' << to_string(s) << '\n';
    if (s != slope_weight0(n)) mismatch = true;
  }
  out << "# stabilized at truncation N=" << computed.truncation << " (agrees with N="
      << 2 * computed.truncation << ")\n";
  return mismatch ? kExitFail : kExitPass;
}

namespace {

VerificationReport sweep_adb(long nmax, int jobs) {
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "adb-factorization-sweep";
  rep.add_param("nmax", nmax);
  std::mutex mu;
  parallel_for(nmax, jobs, [&](long row) {
    long i = row + 1;
    for (long j = 1; j <= nmax; ++j) {
      VerificationReport one = verify_adb(i, j);
      if (!one.passed()) {
        std::lock_guard<std::mutex> lock(mu);
        rep.add_mismatch({{"i", i}, {"j", j}});
      }
    }
  });
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport sweep_minors(long nmax, int jobs) {
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "minor-identity-sweep";
  rep.add_param("nmax", nmax);
  std::mutex mu;
  parallel_for(nmax, jobs, [&](long row) {
    long i = row + 1;
    for (long j = 1; j <= nmax; ++j) {
      if (!(i <= 2 * j && j <= 2 * i)) continue;
      VerificationReport one = minor_identity(i, j);
      if (!one.passed()) {
        std::lock_guard<std::mutex> lock(mu);
        rep.add_mismatch({{"i", i}, {"j", j}});
      }
    }
  });
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport sweep_selfadjoint(long nmax, int jobs) {
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "u-selfadjoint-sweep";
  rep.add_param("nmax", nmax);
  std::mutex mu;
  parallel_for(nmax, jobs, [&](long row) {
    long i = row + 1;
    for (long j = 1; j <= nmax; ++j) {
      VerificationReport one = selfadjoint_check(i, j);
      if (!one.passed()) {
        std::lock_guard<std::mutex> lock(mu);
        rep.add_mismatch({{"i", i}, {"j", j}});
      }
    }
  });
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport sweep_nplemma(long nmax, long seeds) {
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "np-diagonal-congruence-sweep";
  rep.add_param("nmax", nmax);
  rep.add_param("seeds", seeds);
  for (long n = 1; n <= nmax; ++n)
    for (long seed = 0; seed < seeds; ++seed) {
      VerificationReport one = np_diagonal_check(n, static_cast<unsigned long long>(seed));
      if (!one.passed()) rep.add_mismatch({{"N", n}, {"seed", seed}});
    }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport sweep_ufcross(long kmax) {
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "uf-polynomial-crosscheck";
  rep.add_param("kmax", kmax);

  // Window wide enough that U(f^k) is known past degree 2k in f.
  long prec = 4 * kmax + kmax + 2;
  QSeries f = f_qexp(prec);
  std::vector<FPolynomial> xs = uf_polynomials(kmax);
  QSeries fpow = QSeries::one(prec);
  for (long k = 1; k <= kmax; ++k) {
    fpow = (fpow * f).truncated(prec);
    FPolynomial from_qexp = decompose_in_f(u_on_qexp(fpow), 2 * k);
    if (!(from_qexp == xs[static_cast<std::size_t>(k)]))
      rep.add_mismatch({{"k", k}});
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace

int cmd_suite(const SuiteOptions& opt, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> known{
      "adb", "integrality", "minors", "selfadjoint", "nplemma", "appendix", "ufcross"};
  if (opt.names.empty()) {
    err << "usage error: no suite names given\n";
    return kExitUsage;
  }
  for (const auto& name : opt.names) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      err << "usage error: unknown suite '" << name << "'\n";
      return kExitUsage;
    }
  }

  int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
  bool all_pass = true;
  if (opt.format == ReportFormat::csv) out << csv_header() << '\n';
  for (const auto& name : opt.names) {
    VerificationReport rep;
    if (name == "adb")
      rep = sweep_adb(opt.adb_nmax, jobs);
    else if (name == "integrality")
      rep = verify_integrality(opt.integrality_nmax);
    else if (name == "minors")
      rep = sweep_minors(opt.minors_nmax, jobs);
    else if (name == "selfadjoint")
      rep = sweep_selfadjoint(opt.selfadjoint_nmax, jobs);
    else if (name == "nplemma")
      rep = sweep_nplemma(opt.nplemma_nmax, opt.nplemma_seeds);
    else if (name == "appendix")
      rep = theta_j_identities(opt.appendix_prec);
    else if (name == "ufcross")
      rep = sweep_ufcross(opt.ufcross_kmax);
    if (!rep.passed()) all_pass = false;
    out << render(rep, opt.format) << '\n';
  }
  out.flush();
  return all_pass ? kExitPass : kExitFail;
}

int cmd_qexp(const QexpOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.terms < 0) {
    err << "usage error: terms must be >= 0\n";
    return kExitUsage;
  }
  long prec = opt.terms;
  QSeries series(0);
  if (opt.series == "delta")
    series = delta_qexp(std::max<long>(1, prec));
  else if (opt.series == "f")
    series = f_qexp(std::max<long>(1, prec));
  else if (opt.series == "g")
    series = g_qexp(std::max<long>(1, prec));
  else if (opt.series == "e4")
    series = e4_qexp(prec);
  else if (opt.series == "e6")
    series = e6_qexp(prec);
  else if (opt.series == "theta")
    series = theta_qexp(prec);
  else if (opt.series == "j-inverse")
    series = j_inverse_qexp(std::max<long>(1, prec));
  else {
    err << "usage error: unknown series '" << opt.series << "'\n";
    return kExitUsage;
  }

  std::ostringstream dump;
  for (long n = 0; n <= opt.terms; ++n)
    dump << n << '\t' << to_string(series.coeff(n)) << '\n';

  if (opt.output.empty()) {
    out << dump.str();
    out.flush();
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      err << "cannot open output file '" << opt.output << "'\n";
      return kExitFail;
    }
    file << dump.str();
  }
  return kExitPass;
}

}  // namespace slopes::cli

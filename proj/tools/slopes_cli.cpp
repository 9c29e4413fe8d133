#include "slopes/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

slopes::cli::ReportFormat parse_format(const std::string& s) {
  return s == "csv" ? slopes::cli::ReportFormat::csv : slopes::cli::ReportFormat::json;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace slopes::cli;

  CLI::App app{"Exact 2-adic slope computations: T_2 Newton polygons, the explicit "
               "U operator in weight 0, its triangular-diagonal factorization, and "
               "the associated q-expansions."};
  app.require_subcommand(1);

  // verify-classical
  VerifyClassicalOptions vc;
  std::string vc_format = "json";
  auto* verify = app.add_subcommand(
      "verify-classical", "Compare T_2 Newton polygons with the predicted product polygons");
  verify->add_option("--k", vc.weights, "Explicit weights (even, >= 12)");
  verify->add_option("--from", vc.from, "Range start (default 12)");
  verify->add_option("--to", vc.to, "Range end (default 512)");
  verify->add_option("--step", vc.step, "Range step (default 2)");
  verify->add_flag("--long", vc.long_tier, "Extend the range to k = 2048");
  verify->add_option("-j,--jobs", vc.jobs, "Worker threads (default: SLOPES_JOBS or all cores)");
  verify->add_option("--format", vc_format, "Report format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--ordered", vc.ordered, "Emit reports in weight order");

  // slopes
  SlopesOptions sl;
  bool w0 = false, p11 = false;
  auto* slopes_cmd = app.add_subcommand("slopes", "Predicted and computed slope tables");
  slopes_cmd->add_flag("--weight0", w0, "Weight-0 2-adic slopes (predicted and computed)");
  slopes_cmd->add_flag("--p11", p11, "Conjectural 11-adic slopes (evaluation only)");
  slopes_cmd->add_option("--count", sl.count, "Number of slopes")->required();
  slopes_cmd->add_option("--cap", sl.truncation_cap,
                         "Truncation cap for the stabilization search (default 1024)");

  // suite
  SuiteOptions su;
  std::string su_format = "json";
  long su_nmax = -1;
  auto* suite = app.add_subcommand("suite", "Run verification sweeps");
  suite->add_option("names", su.names,
                    "Suites: adb integrality minors selfadjoint nplemma appendix ufcross")
      ->required();
  suite->add_option("--nmax", su_nmax,
                    "Index bound for the adb/integrality/minors/selfadjoint sweeps");
  suite->add_option("--prec", su.appendix_prec, "Window for the 'appendix' suite identities");
  suite->add_option("--kmax", su.ufcross_kmax, "Power bound for the U(f^k) cross-check");
  suite->add_option("--n", su.nplemma_nmax, "Max truncation for the diagonal polygon check");
  suite->add_option("--seeds", su.nplemma_seeds, "Seeds per truncation size");
  suite->add_option("-j,--jobs", su.jobs, "Worker threads");
  suite->add_option("--format", su_format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // qexp
  QexpOptions qe;
  auto* qexp = app.add_subcommand("qexp", "Dump a named q-expansion, one coefficient per line");
  qexp->add_option("series", qe.series, "delta | f | g | e4 | e6 | theta | j-inverse")
      ->required();
  qexp->add_option("--terms", qe.terms, "Dump coefficients of q^0..q^terms")->required();
  qexp->add_option("--output", qe.output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      vc.format = parse_format(vc_format);
      return cmd_verify_classical(vc, std::cout, std::cerr);
    }
    if (slopes_cmd->parsed()) {
      if (w0 == p11) {
        std::cerr << "usage error: pick exactly one of --weight0 / --p11\n";
        return kExitUsage;
      }
      sl.weight = w0 ? SlopesOptions::Weight::w0 : SlopesOptions::Weight::p11;
      return cmd_slopes(sl, std::cout, std::cerr);
    }
    if (suite->parsed()) {
      su.format = parse_format(su_format);
      if (su_nmax > 0) {
        su.adb_nmax = su_nmax;
        su.integrality_nmax = su_nmax;
        su.minors_nmax = su_nmax;
        su.selfadjoint_nmax = su_nmax;
      }
      return cmd_suite(su, std::cout, std::cerr);
    }
    if (qexp->parsed()) return cmd_qexp(qe, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "matfac/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Matrix factorizations over cyclotomic fields"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Run the commands of a problem document");

  std::string doc, format = "human", report;
  std::optional<unsigned> precision;
  long zeta = 1;
  run->add_option("doc", doc, "problem document (JSON)")->required();
  run->add_option("--precision", precision, "jet order, overriding every default");
  run->add_option("--zeta", zeta, "use zeta^k for the canonical primitive root zeta");
  run->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  run->add_option("--report", report, "also write the machine report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  mfac::RunOptions opts;
  opts.precision = precision;
  opts.zeta_power = zeta;
  opts.machine = format == "machine";
  mfac::RunResult r = mfac::run_file(doc, opts);
  std::cout << r.output(opts);
  if (!report.empty()) {
    std::ofstream out(report, std::ios::binary);
    if (!out) {
      std::cerr << "matfac: cannot write " << report << "\n";
      return 2;
    }
    out << r.machine.dump(2) << "\n";
  }
  return r.exit_code;
}

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mumhodge_cli/commands.hpp"

using namespace mumhodge;
using namespace mumhodge::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hodge-theoretic invariants of MUM points of fourth-order Picard-Fuchs operators"};
  app.require_subcommand(1);

  Options opt;
  std::string file, output, bound = "1000000";
  bool json_stdout = false;
  unsigned long precision = opt.precision;

  const auto add_common = [&](CLI::App* sub, bool series) {
    sub->add_option("file", file, "operator document (JSON)")->required()->check(CLI::ExistingFile);
    if (series) sub->add_option("--order", opt.order, "series order")->check(CLI::Range(1, 100000));
    sub->add_option("--precision-bits", precision, "working precision in bits")->check(CLI::Range(64, 1 << 20));
    sub->add_option("--denominator-bound", bound, "denominator bound for recognition");
    sub->add_option("--output,-o", output, "write the full report to this file");
    sub->add_flag("--json", json_stdout, "print the full report instead of the summary");
  };
  auto* analyze = app.add_subcommand("analyze", "singular points, Frobenius data, MUM invariants and Torelli verdicts");
  add_common(analyze, true);
  analyze->add_option("--base-point", opt.base_point, "base point 're,im' (exact rationals)");
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius basis at z = 0");
  add_common(frobenius, true);
  auto* mirror = app.add_subcommand("mirror-map", "mirror map and its inverse");
  add_common(mirror, true);
  auto* monodromy = app.add_subcommand("monodromy", "loop monodromy matrices in the Frobenius frame");
  add_common(monodromy, false);
  monodromy->add_option("--base-point", opt.base_point, "base point 're,im' (exact rationals)");
  auto* normal = app.add_subcommand("normal-form", "normal forms from an operator or an integral unipotent matrix");
  add_common(normal, false);
  normal->add_option("--base-point", opt.base_point, "base point 're,im' (exact rationals)");
  auto* torelli = app.add_subcommand("torelli", "Torelli criterion between MUM points or per-MUM records");
  add_common(torelli, false);
  torelli->add_option("--base-point", opt.base_point, "base point 're,im' (exact rationals)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    opt.precision = static_cast<Precision>(precision);
    opt.precision_cap = std::max(opt.precision, precision_cap_from_env(2048));
    const Rational b = Rational::parse(bound);
    if (!b.is_integer() || b.sign() <= 0) throw Error(ErrorKind::parse, "denominator bound must be a positive integer");
    opt.denominator_bound = b.num();

    nlohmann::json report;
    if (analyze->parsed()) report = cmd_analyze(read_operator_file(file), opt);
    if (frobenius->parsed()) report = cmd_frobenius(read_operator_file(file), opt);
    if (mirror->parsed()) report = cmd_mirror_map(read_operator_file(file), opt);
    if (monodromy->parsed()) report = cmd_monodromy(read_operator_file(file), opt);
    if (normal->parsed()) report = cmd_normal_form(read_json_file(file), opt);
    if (torelli->parsed()) report = cmd_torelli(read_json_file(file), opt);

    const std::string text = report.dump(2) + "\n";
    if (!output.empty()) {
      std::ofstream out(output);
      if (!out) throw Error(ErrorKind::parse, "cannot write '" + output + "'");
      out << text;
    }
    std::cout << (json_stdout ? text : summarize(report));
    return ok;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

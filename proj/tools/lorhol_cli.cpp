#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json_io.hpp"

using lorhol::cli::CommandOptions;

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for Lorentzian holonomy and homogeneous structures"};
  app.require_subcommand(1, 1);

  std::string input, output, a_text, c_text, expect_feasible;
  CommandOptions opts;
  std::string module;
  int n = 0;
  std::string expect_kind;
  std::size_t expect_dim = 0;

  for (const auto& name : lorhol::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input,-i", input, "JSON input: a path, '-' for stdin, or inline JSON");
    sub->add_option("--output,-o", output, "Write the report here instead of stdout");
    sub->add_option("--module", module, "Module kind")->check(CLI::IsMember({"hom", "torsion", "curvature", "vector"}));
    sub->add_option("--a", a_text, "Parameter a (rational)");
    sub->add_option("--c", c_text, "Parameter c (rational)");
    sub->add_option("--n", n, "Screen dimension n");
    sub->add_option("--expect-kind", expect_kind, "Fail unless the classification is this kind");
    sub->add_option("--expect-dim", expect_dim, "Fail unless the computed space has this dimension");
    sub->add_option("--expect-feasible", expect_feasible, "Fail unless feasibility matches")
        ->check(CLI::IsMember({"true", "false"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  opts.name = sub->get_name();
  nlohmann::json report;
  int code = 0;
  try {
    if (!input.empty()) opts.input = lorhol::cli::read_input(input);
    if (!module.empty()) opts.module = module;
    if (!a_text.empty()) opts.a = lorhol::Rational::parse(a_text);
    if (!c_text.empty()) opts.c = lorhol::Rational::parse(c_text);
    if (sub->count("--n")) opts.n = n;
    if (!expect_kind.empty()) opts.expect_kind = expect_kind;
    if (sub->count("--expect-dim")) opts.expect_dim = expect_dim;
    if (!expect_feasible.empty()) opts.expect_feasible = expect_feasible == "true";
    const auto result = lorhol::cli::run_command(opts);
    report = result.report;
    code = result.exit_code;
  } catch (const std::logic_error& e) {
    report = {{"schema", "lorhol.error.v1"}, {"command", opts.name}, {"ok", false}, {"error", e.what()}};
    code = 2;
  }
  if (code == 2) std::cerr << "error: " << report.value("error", std::string("invalid input")) << "\n";

  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write '" << output << "'\n";
      return 2;
    }
    out << text;
  }
  return code;
}

// relb: Burnside-ring idempotents, B_K-groups and ideal lattices from a group
// definition document.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <relb/cli/invocation.hpp>

int main(int argc, char** argv) {
  relb::cli::Invocation inv;
  bool no_validate = false;
  std::string report_path;

  CLI::App app{"relb: relative Burnside rings, B_K-groups and their ideals"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--max-order", inv.max_order, "Largest group order to build")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-validate", no_validate, "Skip group-axiom checks on constructed tables");
  app.add_option("--format", inv.format, "Report format on stdout")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--report", report_path, "Also write a JSON report to this path");
  app.add_flag("--check,!--no-check", inv.check, "Run cross-check oracles");

  auto spec_arg = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("spec", inv.spec, "Group definition document")->required();
  };

  auto* idem = app.add_subcommand("idempotent", "Gluck idempotent of a subgroup");
  spec_arg(idem);
  idem->add_option("--group", inv.group, "Group name")->required();
  idem->add_option("--subgroup", inv.subgroup,
                   "Generating words, comma separated ('*' for the whole group)");

  auto* beta = app.add_subcommand("beta", "Largest B_K-group quotient of (L, phi)");
  spec_arg(beta);
  auto* simple = app.add_subcommand("simple", "Minimal groups and dimensions of S_{L,phi}");
  spec_arg(simple);
  for (auto* sub : {beta, simple}) {
    sub->add_option("--k", inv.k, "Name of K")->required();
    sub->add_option("--l", inv.l, "Name of L")->required();
    sub->add_option("--phi", inv.phi, "Name of phi: L -> K")->required();
  }
  simple->add_option("--targets", inv.targets, "Groups to evaluate at")->delimiter(',');

  auto* plat = app.add_subcommand("plattice", "Ideals of the p-restricted functor");
  spec_arg(plat);
  plat->add_option("--k", inv.k, "Name of K")->required();
  plat->add_option("--p", inv.p, "Prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  inv.validate = !no_validate;
  inv.command = app.get_subcommands().front()->get_name();

  try {
    const auto r = relb::cli::execute(inv);
    std::cout << relb::cli::render(r, inv.format);
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out)
        throw relb::ValidationError("cannot write report to '" + report_path + "'");
      out << relb::cli::render_json(r);
    }
    return r.exit_status;
  } catch (const relb::Error& e) {
    std::cerr << "relb: error: " << e.what() << "\n";
    return e.exit_code();
  }
}

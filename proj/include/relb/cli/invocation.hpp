#pragma once

// One run of the relb tool, independent of argv: load the document, dispatch
// to the command, fill in the command and config echoes.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "relb/cli/commands.hpp"

namespace relb::cli {

struct Invocation {
  std::string command; // idempotent | beta | simple | plattice
  std::string spec;
  std::size_t max_order = 128;
  bool validate = true;
  bool check = true;
  std::string format = "text";

  std::string group, subgroup;
  std::string k, l, phi;
  std::vector<std::string> targets;
  std::uint64_t p = 2;

  // Canonical command line echoed in the report (spec by basename).
  std::string echo() const {
    const auto file = std::filesystem::path(spec).filename().string();
    std::string s = command + " " + file;
    if (command == "idempotent") {
      s += " --group " + group;
      if (!subgroup.empty())
        s += " --subgroup " + subgroup;
    } else if (command == "beta" || command == "simple") {
      s += " --k " + k + " --l " + l + " --phi " + phi;
      if (!targets.empty()) {
        s += " --targets ";
        for (std::size_t i = 0; i < targets.size(); ++i)
          s += (i ? "," : "") + targets[i];
      }
    } else {
      s += " --k " + k + " --p " + std::to_string(p);
    }
    return s;
  }
};

inline GroupSpecDocument load_document(const Invocation& inv) {
  std::ifstream in(inv.spec);
  if (!in)
    throw ValidationError("cannot open spec document '" + inv.spec + "'");
  DocumentOptions d;
  d.validation = inv.validate ? Validation::full : Validation::off;
  d.max_order = inv.max_order;
  return GroupSpecDocument::parse(in, d);
}

inline Report execute(const Invocation& inv, const GroupSpecDocument& doc) {
  CommandOptions opt;
  opt.limits.max_order = inv.max_order;
  opt.check = inv.check;
  Report r;
  if (inv.command == "idempotent")
    r = cmd_idempotent(doc, inv.group, inv.subgroup, opt);
  else if (inv.command == "beta")
    r = cmd_beta(doc, inv.k, inv.l, inv.phi, opt);
  else if (inv.command == "simple")
    r = cmd_simple(doc, inv.k, inv.l, inv.phi, inv.targets, opt);
  else if (inv.command == "plattice")
    r = cmd_p_lattice(doc, inv.k, inv.p, opt);
  else
    throw ParseError("unknown command '" + inv.command + "'");
  r.command = inv.echo();
  r.config = {{"spec", std::filesystem::path(inv.spec).filename().string()},
              {"max-order", std::to_string(inv.max_order)},
              {"validate", inv.validate ? "on" : "off"},
              {"check", inv.check ? "on" : "off"},
              {"format", inv.format}};
  return r;
}

inline Report execute(const Invocation& inv) { return execute(inv, load_document(inv)); }

inline std::string render(const Report& r, const std::string& format) {
  return format == "json" ? render_json(r) : render_text(r);
}

} // namespace relb::cli

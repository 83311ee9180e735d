#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unital/cli/commands.hpp"
#include "unital/errors.hpp"

using namespace unital;
using namespace unital::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Args {
  std::string in, nerve, against;
  bool json = false, text = false, check_acyclic = false;
  std::uint64_t max_states = Limits{}.max_states;
};

int report_error(const std::string& command, bool json, int code, const std::string& msg) {
  if (json) std::cout << error_json(command, code, msg).dump(2) << "\n";
  else std::cerr << error_text(command, code, msg);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unital: units of Picard stacks over finite abelian groups and crossed modules"};
  app.require_subcommand(1);
  Args args;
  for (const auto& name : command_names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--in", args.in, "input spec file (JSON)")->required();
    sub->add_option("--nerve", args.nerve, "nerve file (JSON cover description)");
    auto* j = sub->add_flag("--json", args.json, "JSON report");
    sub->add_flag("--text", args.text, "text report (default)")->excludes(j);
    sub->add_option("--max-states", args.max_states, "search state cap")->check(CLI::PositiveNumber);
    if (name == "unit-complex") sub->add_flag("--check-acyclic", args.check_acyclic, "check every homology group vanishes");
    if (name == "qiso")
      sub->add_option("--against", args.against, "comparison complex")
          ->check(CLI::IsMember({"idA", "kerLambda", "cone", "alt1", "alt2"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input_error;
  }

  RunOptions opts;
  opts.command = app.get_subcommands().front()->get_name();
  opts.against = args.against;
  opts.check_acyclic = args.check_acyclic;
  opts.limits.max_states = args.max_states;
  try {
    const ComplexSpecFile spec = parse_spec(slurp(args.in));
    if (!args.nerve.empty()) opts.nerve = parse_cover(slurp(args.nerve));
    const Report r = run(opts, spec);
    if (args.json) std::cout << r.to_json().dump(2) << "\n";
    else std::cout << r.to_text();
    return r.exit_code();
  } catch (const CapExceeded& e) {
    return report_error(opts.command, args.json, exit_cap_exceeded, e.what());
  } catch (const Error& e) {
    return report_error(opts.command, args.json, exit_input_error, e.what());
  }
}

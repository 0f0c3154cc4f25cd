// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Command-line front end: one subcommand per job kind, or `run --config`
// for a job stored as JSON.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "owlab/cli.hpp"
#include "owlab/errors.hpp"
#include "owlab/io.hpp"

namespace {

  struct Option {
    std::string name;
    std::string help;
    bool        repeatable = false;
  };

  struct Subcommand {
    std::string         name;
    std::string         help;
    std::vector<Option> options;
  };

  std::string const kSetHelp = "box:<lo>:<hi> (half-open, comma-separated corners) or list:<path.json>";

  std::vector<Subcommand> const& subcommands() {
    static std::vector<Subcommand> const subs = {
        {"boundary",
         "Right K-interior, K-boundary and alpha(A, K) as JSON",
         {{"set", "the set A: " + kSetHelp}, {"K", "the set K: " + kSetHelp}}},
        {"alpha",
         "alpha(A, K) = |boundary_K(A)|/|A| as {\"alpha\":{\"num\",\"den\"}}",
         {{"set", "the set A: " + kSetHelp}, {"K", "the set K: " + kSetHelp}}},
        {"folner-report",
         "Amenability constants and defects along a builtin Følner sequence",
         {{"kind", "boxes | shifted_boxes | heis_boxes (default boxes)"},
          {"K", "the set K: " + kSetHelp},
          {"indices", "comma-separated indices n >= 1"}}},
        {"fill",
         "Greedy (eps, K)-filling pattern of Omega as JSON",
         {{"omega", "the set Omega: " + kSetHelp},
          {"K", "the tile K: " + kSetHelp},
          {"eps", "eps in (0, 1] as p/q or a decimal"}}},
        {"tile",
         "Iterative filling of D by tiles K_1, ..., K_n as JSON",
         {{"mode", "strict | best-effort (default best-effort)"},
          {"D", "the set D: " + kSetHelp},
          {"K", "a tile, repeated in order K_1 ... K_n: " + kSetHelp, true},
          {"eps", "eps in (0, 1/2]"},
          {"n", "expected number of tiles (checked against --K)"}}},
        {"ow",
         "Ratios h(F_n)/|F_n| and their trailing-window estimate",
         {{"folner", "boxes | shifted_boxes | heis_boxes (default boxes)"},
          {"h",
           "card:<c> | invmax | fekete:<linear|sqrt> | sft:<name|path> | bernoulli:<p1,...> | "
           "markov:<path> | cmd:<command>"},
          {"max", "largest index n"},
          {"window", "trailing window for lambda_hat (default 5)"},
          {"singleton-bound", "override M with h({s}) <= M"}}},
        {"entropy",
         "Pattern counts and entropy ratios of a subshift of finite type",
         {{"sft", "full2 | golden | hardsq | <path.json>"},
          {"folner", "boxes | shifted_boxes (default boxes)"},
          {"max", "largest index n"},
          {"window", "trailing window for lambda_hat (default 5)"}}},
        {"certify",
         "Check the upper-bound chain for h(D)/|D| on a best-effort tiling",
         {{"D", "the set D: " + kSetHelp},
          {"K", "a tile, repeated in order: " + kSetHelp, true},
          {"eps", "eps in (0, 1/2]"},
          {"h", "set function, as for ow"},
          {"lambda", "lambda to certify; estimated along --folner when omitted"},
          {"folner", "Følner sequence for the estimate (default boxes)"},
          {"max", "largest index for the estimate (default 30)"},
          {"window", "window for the estimate (default 5)"},
          {"singleton-bound", "override M with h({s}) <= M"}}},
    };
    return subs;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"owlab: Følner sets, fillings and Ornstein-Weiss limits on semigroups"};
  app.require_subcommand(1);
  app.footer(
      "Semigroups: zd:<d> | nat:<d> | heis | table:<path.json>\n"
      "Environment: OWLAB_BUDGET caps pattern-counting work (default 50000000).\n"
      "Exit status: 0 success, 1 malformed configuration, 2 domain error, 3 resource budget exhausted.");

  owlab::cli::JobConfig                                        config;
  std::map<std::string, std::map<std::string, std::vector<std::string>>> values;

  for (auto const& sub : subcommands()) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    // --h names the set function, so help is long-form only.
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--semigroup", config.semigroup, "zd:<d> | nat:<d> | heis | table:<path.json>");
    cmd->add_option("--output", config.output, "write results to this file instead of standard output");
    cmd->add_option("--format", config.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--jobs", config.jobs, "worker threads for independent rows")
        ->check(CLI::PositiveNumber);
    for (auto const& opt : sub.options) {
      auto* o = cmd->add_option("--" + opt.name, values[sub.name][opt.name], opt.help);
      if (!opt.repeatable) {
        o->expected(1);
      }
    }
    cmd->footer(owlab::cli::csv_columns(sub.name));
  }

  std::string config_path;
  CLI::App*   run = app.add_subcommand("run", "Run a job stored as JSON");
  run->add_option("--config", config_path, "job file {command, semigroup, params, output, format, jobs}")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  if (run->parsed()) {
    try {
      config = owlab::cli::JobConfig::from_json(owlab::io::read_json_file(config_path));
    } catch (owlab::ConfigError const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
    return owlab::cli::run(config, std::cout, std::cerr);
  }

  for (auto const& sub : subcommands()) {
    if (app.got_subcommand(sub.name)) {
      config.command = sub.name;
      for (auto const& [name, vals] : values[sub.name]) {
        if (!vals.empty()) {
          config.params[name] = vals;
        }
      }
    }
  }
  return owlab::cli::run(config, std::cout, std::cerr);
}

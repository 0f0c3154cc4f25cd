// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Job descriptions and the command runner behind the owlab tool.

#ifndef OWLAB_CLI_HPP_
#define OWLAB_CLI_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace owlab::cli {

  //! One invocation of the tool.
  //!
  //! Every command-specific option lives in `params`, keyed by its flag
  //! name without dashes; options that may repeat (such as K for tile)
  //! keep their order.
  struct JobConfig {
    std::string                                     command;
    std::string                                     semigroup;  // empty: command default
    std::map<std::string, std::vector<std::string>> params;
    std::string                                     output;  // empty: standard output
    std::string                                     format;  // empty: command default
    unsigned                                        jobs = 1;

    [[nodiscard]] nlohmann::ordered_json to_json() const;
    //! Throws ConfigError naming the offending field.
    static JobConfig from_json(nlohmann::ordered_json const& j);

    friend bool operator==(JobConfig const&, JobConfig const&) = default;
  };

  //! The commands understood by run().
  std::vector<std::string> const& commands();

  //! Checks the command name, format and parameter names, filling in
  //! defaults; throws ConfigError naming the offending field.
  JobConfig canonical(JobConfig const& config);

  //! Executes the job. Results go to config.output (or \p out); diagnostics
  //! go to \p err. Returns 0 on success, 1 for malformed configuration,
  //! 2 for domain errors and 3 when a resource budget is exhausted.
  int run(JobConfig const& config, std::ostream& out, std::ostream& err);

  //! Column documentation for --help.
  std::string csv_columns(std::string const& command);

}  // namespace owlab::cli

#endif  // OWLAB_CLI_HPP_

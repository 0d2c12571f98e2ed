#ifndef VOGAN_CLI_HPP
#define VOGAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vogan::cli {

/// Runs one command. Exit status: 0 on success, 1 on a domain error
/// (malformed diagram, invalid type, sweep over the rank cap), 2 on a
/// usage error (unknown verb or flag, wrong arity).
///
/// Verbs: roots, check, equiv, class, normalize, sweep, render.
/// Flags: --format text|json (render: ascii|dot), --theta <id|list>,
/// --all-theta, --full, --up-to-iso. The environment variable
/// VOGAN_MAX_RANK overrides the default sweep rank cap of 8.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vogan::cli

#endif

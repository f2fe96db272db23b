// Command-line entry point exposing the deciders, catalog, enumeration, and
// gluing experiments.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordrep::cli {

// Exit status 0 on success (verdicts are data, not exit codes), 1 when
// --fail-on-negative maps a non-representable verdict, 2 on usage or parse
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordrep::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridhilbert::cli {

/// Exit status: 0 on success, 1 on a usage or domain error (reported on
/// err as "error: <ErrorName>: ..."), 2 when a verify suite finds a
/// counterexample. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridhilbert::cli

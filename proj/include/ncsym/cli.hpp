#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncsym {

// Entry point behind the ncsym executable. Takes the arguments after the
// program name in natural order and returns the process exit code:
// 0 success, 1 verification failure, 2 usage or parse error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ncsym

#ifndef HQA_CLI_HPP
#define HQA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hqa {

/// Exit codes of the command-line front end.
enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hqa

#endif

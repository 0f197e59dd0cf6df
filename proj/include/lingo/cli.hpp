#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lingo {

// Exit codes: 0 success, 1 runtime failure, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

} // namespace lingo

#pragma once

#include <iosfwd>

namespace vnlab::cli {

// Exit codes: 0 all checks pass, 1 a check failed (report still written),
// 2 usage, input or precondition error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vnlab::cli

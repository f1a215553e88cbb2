#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qs::cli {

// Exit codes: 0 success or all checks passed, 1 a verification failed,
// 2 bad input (schema, parse or module precondition errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qs::cli

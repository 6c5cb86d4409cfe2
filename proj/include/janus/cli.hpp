#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace janus::cli {

/// Exit codes: 0 success, 1 usage error, 2 computational error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace janus::cli

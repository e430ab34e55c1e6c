#pragma once

#include <string>
#include <vector>

// Command-line entry points.  The vector overload is the in-process form
// (no program name); the reproducibility self-check drives it directly.
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 failed
// self-test criteria.

namespace phasekit::cli {

int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace phasekit::cli

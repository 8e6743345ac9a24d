#pragma once

#include <string>
#include <vector>

namespace kdv {

/// Command-line entry point, factored out of main() so tests can drive it
/// in-process. Returns the process exit code: 0 success, 1 validation
/// error, 2 runtime error (blow-up, singular matrix), 3 I/O error.
int cli_main(const std::vector<std::string>& args);

} // namespace kdv

#ifndef HEIGHTLAB_CLI_HPP
#define HEIGHTLAB_CLI_HPP

#include <string>
#include <vector>

namespace heightlab {

/// Runs a full CLI invocation. Exit codes: 0 success, 1 validation
/// violation or bad input data (JSON report on stdout), 2 usage error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace heightlab

#endif

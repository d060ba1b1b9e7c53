#ifndef OFORGE_CLI_HPP
#define OFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oforge {

/// Batch entry point. Exit codes: 0 success, 1 usage/configuration error,
/// 2 identity or oracle failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oforge

#endif

#ifndef WITTSWAN_CLI_HPP
#define WITTSWAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wittswan {

// the full command-line surface; returns the process exit code:
// 0 success, 1 usage or input error, 2 verification failure (or an
// uncertified result under --strict)
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace wittswan

#endif

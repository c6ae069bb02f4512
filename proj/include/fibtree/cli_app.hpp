#ifndef FIBTREE_CLI_APP_HPP
#define FIBTREE_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fibtree {

// Full command-line front end. args excludes the program name. Returns the
// process exit code: 0 all checks pass, 1 a counterexample was found,
// 2 usage error (bad flags, malformed rationals, out-of-range arguments,
// enumeration-cap violations).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibtree

#endif

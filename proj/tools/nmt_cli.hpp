#ifndef NMT_CLI_HPP
#define NMT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nmt::cli {

// Runs one CLI invocation (argv without the program name).  Returns the
// process exit code: 0 success / Holds / Equivalent, 1 negative result,
// 2 Unknown (analyze), 3 usage or input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmt::cli

#endif  // NMT_CLI_HPP

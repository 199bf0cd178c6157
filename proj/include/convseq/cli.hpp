#ifndef CONVSEQ_CLI_HPP
#define CONVSEQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace convseq::cli {

// Runs the command-line surface against the given streams: results on
// `out`, diagnostics on `err`. Returns the process exit status:
//   0  success (including clean skips)
//   1  verification mismatch
//   2  usage or parse error
//   3  resource limit refused the request
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv adapter for main(); argv[0] is ignored.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace convseq::cli

#endif

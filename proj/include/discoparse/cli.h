#ifndef DISCOPARSE_CLI_H_
#define DISCOPARSE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace discoparse {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// `args` excludes the program name. Inputs named "-" (the default for most
// flags) are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace discoparse

#endif  // DISCOPARSE_CLI_H_

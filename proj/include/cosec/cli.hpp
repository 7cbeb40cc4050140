#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cosec {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verdict_false = 1;
inline constexpr int input_error = 2;
inline constexpr int no_solution = 3;
inline constexpr int claim_violation = 4;
}  // namespace exit_code

/// Worker count from COSEC_WORKERS, default 1.
unsigned workers_from_env();

/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosec

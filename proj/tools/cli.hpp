#ifndef FUZZYLT_TOOLS_CLI_HPP
#define FUZZYLT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzylt::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_numeric_failure = 3;

// Environment variable overriding the default verification tolerance.
inline constexpr const char *tolerance_env = "FUZZYLT_VERIFY_TOL";
inline constexpr double default_tolerance = 1e-6;

int cmd_solve(const std::string &problem_path, const std::string &out_dir, std::ostream &out, std::ostream &err);

struct verify_args {
    std::string problem_path;
    std::string case_selector;
    std::string solution_path;
    int steps = 10000;
    // Negative means: environment override or default_tolerance.
    double tol = -1;
};
int cmd_verify(const verify_args &args, std::ostream &out, std::ostream &err);

int cmd_cases(int order, std::ostream &out, std::ostream &err);

int cmd_bands(const std::string &problem_path, const std::string &case_selector, int samples, std::ostream &out,
              std::ostream &err);

// Full command line (args excludes the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fuzzylt::cli

#endif

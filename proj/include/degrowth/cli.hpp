#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace degrowth {

/// Exit codes of the command line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse_error = 2;
inline constexpr int analysis_abort = 3;
inline constexpr int verification_mismatch = 4;
}  // namespace exit_code

enum class OutputFormat { json, csv, text };

/// Options shared by the analysis subcommands.
struct RunConfig {
    std::size_t horizon = 10;
    std::size_t window = 3;
    OutputFormat format = OutputFormat::json;
    std::vector<std::string> params;  // "k=v"
    std::uint64_t seed = 1;
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degrowth

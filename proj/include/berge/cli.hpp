#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace berge::cli {

struct Command {
    std::string verb;   ///< construct, solve, check, verify, shadow, stats
    std::string action; ///< family for construct; subverb for solve/check/verify
    std::string input;  ///< .hg path or "-"
    std::string output; ///< empty means stdout

    int n = -1;
    int k = -1;
    int copies = 1;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    int cap = -1;
    bool dedup = false;
    std::size_t max_witnesses = 4;
    int all_cycles_up_to = 5;
    std::string uniformity;
    std::string witness_dir;

    std::vector<std::string> args;  ///< argv echo (without program name)
    std::optional<std::string> help; ///< set when --help was requested
};

/// Throws berge::Error with UsageError (bad flags), IoError (missing input file).
Command parse_args(const std::vector<std::string> & argv);

/// Exit codes: 0 success / verified, 1 violation found, 2 usage or input error.
int run(const Command & cmd, std::ostream & out, std::ostream & err);

/// parse_args + run with error reporting; what main() calls.
int main(const std::vector<std::string> & argv, std::ostream & out, std::ostream & err);

} // namespace berge::cli

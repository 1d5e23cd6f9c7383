#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace calcforge::cli {

enum class Format { Text, Json };

struct CliConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 50;
    Format format = Format::Text;
    std::size_t samples = 512;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // a verification failed or the engine could not compute the request
inline constexpr int kUsage = 2;

/// Runs one command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace calcforge::cli

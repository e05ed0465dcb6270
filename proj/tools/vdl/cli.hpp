#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdl::cli
{
    // Stable process exit codes.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 2,
        exit_numerical = 3,
        exit_io = 4,
    };

    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Entry point shared by main() and the tests. args excludes argv[0].
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

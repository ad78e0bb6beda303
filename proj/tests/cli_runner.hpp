#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace cli_runner {

struct Result {
    int exit_code = -1;
    std::string output;
};

// Runs `command` through the shell and captures stdout (stderr is dropped
// unless the caller redirects it).
inline Result run(const std::string& command) {
    Result result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

} // namespace cli_runner

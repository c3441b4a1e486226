#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace harnack::testing {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

/// Run a shell command, capturing stdout; stderr is redirected to a side
/// channel appended after a marker so callers can inspect both.
inline RunResult run_command(const std::string& command) {
    const std::string full = command + " 2>/tmp/harnack_cli_stderr.txt";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string read_stderr_capture() {
    FILE* f = fopen("/tmp/harnack_cli_stderr.txt", "r");
    if (!f) return {};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0)
        out.append(buf.data(), got);
    fclose(f);
    return out;
}

}  // namespace harnack::testing

#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

// Runs a shell command and captures stdout plus the exit status.
struct CmdResult {
    int status = -1;
    std::string out;
};

inline CmdResult run_command(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

inline CmdResult run_tool(const std::string& args, bool merge_stderr = true) {
    std::string cmd = std::string(DPFIBER_BIN) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    return run_command(cmd);
}

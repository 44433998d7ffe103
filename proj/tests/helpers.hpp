#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "refute/graph.hpp"

// Shared test utilities: data loading and CLI process capture.

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(REFUTE_TEST_DATA) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing test data: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline refute::Graph load_graph(const std::string& name) {
    return refute::parse_edge_list(read_file(data_path(name)));
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout (stderr folded in when merge_stderr)
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = true) {
    const std::string cmd = std::string(REFUTE_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    CliResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testutil

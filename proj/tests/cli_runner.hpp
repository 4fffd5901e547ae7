#pragma once

// Runs the mmnet executable in a shell and captures exit code and streams.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace mmnet::cli_test {

namespace fs = std::filesystem;

inline fs::path fixture(const std::string& name) { return fs::path(MMNET_FIXTURE_DIR) / name; }

/// Fresh scratch directory, unique per process.
inline fs::path scratch_dir(const std::string& tag) {
    const fs::path dir =
        fs::temp_directory_path() / ("mmnet_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

inline std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::string& args, const fs::path& scratch) {
    const fs::path out = scratch / "stdout.txt";
    const fs::path err = scratch / "stderr.txt";
    const std::string cmd = std::string("'") + MMNET_CLI_PATH + "' " + args + " >'" +
                            out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

inline std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace mmnet::cli_test

#pragma once

#include "qpov/cli.hpp"
#include "qpov/csv.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qpov::testing {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

inline CsvTable parse_output(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in, "cli output");
}

// Estimator CSV minus its trailing text column `mode`.
inline CsvTable parse_estimators(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream trimmed;
    std::string line;
    while (std::getline(in, line)) trimmed << line.substr(0, line.rfind(',')) << '\n';
    return parse_output(trimmed.str());
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A scratch directory removed when the object goes out of scope.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("qpov-" + tag + "-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

} // namespace qpov::testing

#pragma once

#include "sqry/frontend.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sqry::testing {

inline std::filesystem::path source_dir() { return SQRY_SOURCE_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline std::filesystem::path wifi_source_path() { return source_dir() / "corpus" / "wifi_access_point.sqry"; }

inline Program wifi_program() { return parse(read_file(wifi_source_path())); }

/// name -> bit string, from tests/golden/codec_vectors.txt.
inline std::map<std::string, std::string> golden_vectors() {
    std::map<std::string, std::string> out;
    std::istringstream in(read_file(source_dir() / "tests" / "golden" / "codec_vectors.txt"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto space = line.find(' ');
        out[line.substr(0, space)] = space == std::string::npos ? "" : line.substr(space + 1);
    }
    return out;
}

inline const std::vector<std::string>& example_strings() {
    static const std::vector<std::string> s = {
        "Wi-Fi activity detected",
        "Wi-Fi activity not detected",
        "Wi-Fi 802.11ax activity at 9600 Mbps",
    };
    return s;
}

/// Scratch directory unique to the running test binary.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("sqry-test-" + name);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace sqry::testing

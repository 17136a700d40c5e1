#pragma once

/// \file report.hpp
/// Reproducibility reports written next to every CLI output: command,
/// parameters, seeds, version, wall-clock timings and output digests. The
/// certificate files themselves carry no timestamps, so reruns at equal
/// parameters are byte-identical; timings live only here.

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace markedfree {

inline constexpr const char* kArtifactVersion = "0.1.0";

std::string sha256_hex(const std::string& bytes);
std::string sha256_file_hex(const std::string& path);

class RunReport {
public:
    RunReport(std::string command, nlohmann::json parameters);

    void add_output(const std::string& path);
    void add_summary(const std::string& key, nlohmann::json value);

    /// Writes <first_output>.report.json (or the explicit path).
    void write(const std::string& path) const;

private:
    std::string command_;
    nlohmann::json parameters_;
    std::chrono::steady_clock::time_point started_;
    std::vector<std::pair<std::string, std::string>> outputs_; // path, digest
    nlohmann::json summary_;
};

} // namespace markedfree

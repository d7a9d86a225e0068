#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace netprio {

// Reproducibility record emitted alongside every command output: tool
// version, timestamp, resolved configuration, and SHA-256 digests of all
// inputs. Configuration keys are plain flag names so a manifest can be
// fed back through --config.
class Manifest {
public:
    explicit Manifest(std::string command);

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::int64_t value);
    void set(const std::string& key, bool value);

    // Records path and content digest under input.<name>.*.
    void add_input(const std::string& name, const std::filesystem::path& path);

    void write(const std::filesystem::path& path) const;

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> settings_;
    std::vector<std::pair<std::string, std::string>> inputs_;
};

// Hex SHA-256 of a file's contents.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace netprio

#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace invar::app {

// Hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

// Content-addressed result store. An entry records the tool version, its key and a digest of the
// payload; entries with another version, another key or a bad digest are treated as misses and
// removed. Writes go through a temporary file and a rename, so readers never see partial entries.
class Cache {
public:
    explicit Cache(std::filesystem::path dir, std::string version = INVAR_VERSION);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    std::optional<std::string> get(const std::string& key) const;
    // Failures to write are ignored; the cache is an optimization.
    void put(const std::string& key, const std::string& payload) const;

private:
    std::filesystem::path dir_;
    std::string version_;
};

}  // namespace invar::app

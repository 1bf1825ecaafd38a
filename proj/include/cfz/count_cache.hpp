#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cfz/point_count.hpp"

namespace cfz {

/// Hex SHA-256 of the variety's canonical string.
std::string spec_key(const VarietySpec& spec);

/// Append-only JSON-lines store of point counts keyed by (spec hash, p, k).
/// Lines that fail to parse are skipped.
class CountCache {
public:
    explicit CountCache(std::filesystem::path path);

    /// $CFZ_CACHE, or ".cfz-cache.jsonl" in the working directory.
    static std::filesystem::path default_path();

    const std::filesystem::path& path() const { return path_; }

    std::optional<CountRecord> lookup(const std::string& key, std::uint32_t p, unsigned k) const;
    void append(const std::string& key, const CountRecord& rec) const;

private:
    std::filesystem::path path_;
};

} // namespace cfz

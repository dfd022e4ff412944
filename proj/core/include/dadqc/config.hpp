#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dadqc {

// Experiment config: "key: value" lines, '#' comments, strict key whitelist.
// Unknown or duplicate keys are rejected with their line number; typed
// accessors validate values against the key's line.
class ExperimentConfig {
public:
    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig parse(const std::string& text);

    bool has(const std::string& key) const;
    int line_of(const std::string& key) const;  // 0 when absent

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<std::int64_t> get_int_list(const std::string& key) const;

    // FNV-1a of the raw file bytes, for provenance headers.
    std::uint64_t hash() const { return hash_; }

private:
    struct Entry {
        std::string value;
        int line = 0;
    };

    [[noreturn]] void fail(const std::string& key, const std::string& why) const;
    const Entry& require(const std::string& key) const;

    std::map<std::string, Entry> entries_;
    std::uint64_t hash_ = 0;
};

}  // namespace dadqc

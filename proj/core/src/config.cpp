#include "dadqc/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "dadqc/error.hpp"
#include "dadqc/io.hpp"

namespace dadqc {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        // host graph
        "host", "n", "offsets", "d", "swap_steps",
        // Ising layer
        "ising", "ising_file", "beta", "delta_par",
        // schedule block
        "A0", "B0", "T", "delta", "mu", "target_eps",
        // evolution
        "steps", "tolerance", "adaptive",
        // ensemble / harness
        "instances", "theta", "fixed_v", "target_s", "n_grid", "mode",
        // sampling / output
        "samples", "emit_distribution",
        // reproducibility
        "seed",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig cfg;
    cfg.hash_ = fnv1a(text);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto colon = stripped.find(':');
        if (colon == std::string::npos)
            throw ConfigError("expected 'key: value'", line_no);
        const std::string key = trim(stripped.substr(0, colon));
        const std::string value = trim(stripped.substr(colon + 1));
        if (key.empty()) throw ConfigError("empty key", line_no);
        if (!known_keys().contains(key))
            throw ConfigError("unknown key '" + key + "'", line_no);
        if (value.empty()) throw ConfigError("empty value for key '" + key + "'", line_no);
        if (!cfg.entries_.emplace(key, Entry{value, line_no}).second)
            throw ConfigError("duplicate key '" + key + "'", line_no);
    }
    return cfg;
}

bool ExperimentConfig::has(const std::string& key) const { return entries_.contains(key); }

int ExperimentConfig::line_of(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
}

void ExperimentConfig::fail(const std::string& key, const std::string& why) const {
    throw ConfigError("key '" + key + "': " + why, line_of(key));
}

const ExperimentConfig::Entry& ExperimentConfig::require(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing required key '" + key + "'");
    return it->second;
}

std::string ExperimentConfig::get_string(const std::string& key) const {
    return require(key).value;
}

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
    return has(key) ? entries_.at(key).value : fallback;
}

double ExperimentConfig::get_double(const std::string& key) const {
    const auto& e = require(key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        fail(key, "expected a number, got '" + e.value + "'");
    }
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

std::int64_t ExperimentConfig::get_int(const std::string& key) const {
    const auto& e = require(key);
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        fail(key, "expected an integer, got '" + e.value + "'");
    }
}

std::int64_t ExperimentConfig::get_int(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool ExperimentConfig::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = entries_.at(key).value;
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(key, "expected true/false, got '" + v + "'");
}

std::vector<std::int64_t> ExperimentConfig::get_int_list(const std::string& key) const {
    const auto& e = require(key);
    std::vector<std::int64_t> out;
    std::istringstream in(e.value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(key, "empty list item");
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            fail(key, "expected comma-separated integers");
        }
    }
    if (out.empty()) fail(key, "empty list");
    return out;
}

}  // namespace dadqc

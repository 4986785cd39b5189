#include "nung/run_config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nung {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': not a number: '" + value + "'");
    }
}

std::int64_t parse_integer(const std::string& key, const std::string& value) {
    std::int64_t v = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("config key '" + key + "': not an integer: '" + value + "'");
    }
    return v;
}

}  // namespace

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    RunConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config " + path.string() + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config " + path.string() + ":" + std::to_string(lineno) +
                                        ": empty key");
        }
        cfg.values_[key] = value;
    }
    return cfg;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    values_[key] = value;
    resolved_.erase(key);  // a later lookup re-resolves against the override
}

bool RunConfig::has(const std::string& key) const { return values_.count(key) > 0; }

double RunConfig::number(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    const double v = it != values_.end() ? parse_double(key, it->second) : fallback;
    resolved_[key] = format_number(v);
    return v;
}

std::int64_t RunConfig::integer(const std::string& key, std::int64_t fallback) const {
    const auto it = values_.find(key);
    const std::int64_t v = it != values_.end() ? parse_integer(key, it->second) : fallback;
    resolved_[key] = std::to_string(v);
    return v;
}

std::string RunConfig::text(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    const std::string v = it != values_.end() ? it->second : fallback;
    resolved_[key] = v;
    return v;
}

std::map<std::string, std::string> RunConfig::resolved() const {
    std::map<std::string, std::string> merged = values_;
    for (const auto& [k, v] : resolved_) {
        merged[k] = v;
    }
    return merged;
}

void RunConfig::write_resolved(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write resolved config: " + path.string());
    }
    for (const auto& [k, v] : resolved()) {
        out << k << " = " << v << "\n";
    }
}

std::string RunConfig::format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace nung

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace nung {

// Layered run configuration: per-command defaults, overridden by a
// line-based "key = value" config file (UTF-8, # comments), overridden by
// CLI flags. Every lookup records the final value, so the fully resolved
// configuration can be written beside the outputs and re-running from that
// echo reproduces the run exactly.
class RunConfig {
public:
    RunConfig() = default;

    static RunConfig from_file(const std::filesystem::path& path);

    // CLI override; highest precedence.
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    double number(const std::string& key, double fallback) const;
    std::int64_t integer(const std::string& key, std::int64_t fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;

    // All keys consulted so far plus any explicitly set ones, sorted.
    std::map<std::string, std::string> resolved() const;
    void write_resolved(const std::filesystem::path& path) const;

    static std::string format_number(double value);  // 17 significant digits

private:
    std::map<std::string, std::string> values_;
    mutable std::map<std::string, std::string> resolved_;
};

}  // namespace nung

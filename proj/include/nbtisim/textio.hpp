#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nbtisim {

/// Raised for malformed config files and bad scenario settings (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for file-system level failures (CLI exit code 4).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// string helpers

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);
std::vector<std::string> split_ws(std::string_view s);

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);
double parse_double(std::string_view s, std::string_view what);
long long parse_int(std::string_view s, std::string_view what);
bool parse_bool(std::string_view s, std::string_view what);

// ---------------------------------------------------------------------------
// digests

/// 64-bit FNV-1a over a byte string, as a fixed-width lowercase hex string.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// Accumulating digest for canonical serializations of in-memory values.
class DigestBuilder {
public:
    DigestBuilder& add(std::string_view token);
    DigestBuilder& add(double v) { return add(format_double(v)); }
    DigestBuilder& add(std::int64_t v) { return add(std::to_string(v)); }
    DigestBuilder& add(std::uint64_t v) { return add(std::to_string(v)); }
    DigestBuilder& add(bool v) { return add(v ? std::string_view("1") : std::string_view("0")); }
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

// ---------------------------------------------------------------------------
// sectioned key-value config files
//
// Format: `key = value` lines, optional `[section]` headers, `#` comments.
// Keys may repeat within a section (used for ordered entries such as stress
// phases); lookup helpers return the first match.

struct KvEntry {
    std::string section;  // "" for the leading unsectioned block
    std::string key;
    std::string value;
};

class KvFile {
public:
    static KvFile parse(const std::string& text, const std::string& origin);
    static KvFile load(const std::filesystem::path& file);

    const std::vector<KvEntry>& entries() const { return entries_; }

    std::optional<std::string> find(std::string_view section, std::string_view key) const;
    std::vector<std::string> find_all(std::string_view section, std::string_view key) const;
    bool has_section(std::string_view section) const;

    std::string get(std::string_view section, std::string_view key,
                    std::string_view fallback) const;
    double get_double(std::string_view section, std::string_view key, double fallback) const;
    long long get_int(std::string_view section, std::string_view key, long long fallback) const;
    bool get_bool(std::string_view section, std::string_view key, bool fallback) const;

    const std::string& origin() const { return origin_; }
    const std::string& raw_text() const { return raw_; }

private:
    std::vector<KvEntry> entries_;
    std::string origin_;
    std::string raw_;
};

// ---------------------------------------------------------------------------
// file helpers

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view content);

}  // namespace nbtisim

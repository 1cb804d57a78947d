#include "nbtisim/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace nbtisim {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::string_view what) {
    const std::string t = trim(s);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw config_error("expected a number for " + std::string(what) + ", got '" + t + "'");
    return v;
}

long long parse_int(std::string_view s, std::string_view what) {
    const std::string t = trim(s);
    long long v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw config_error("expected an integer for " + std::string(what) + ", got '" + t + "'");
    return v;
}

bool parse_bool(std::string_view s, std::string_view what) {
    std::string t = trim(s);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
    if (t == "false" || t == "no" || t == "off" || t == "0") return false;
    throw config_error("expected a boolean for " + std::string(what) + ", got '" + t + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

static std::string to_hex16(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string fnv1a64_hex(std::string_view bytes) { return to_hex16(fnv1a64(bytes)); }

DigestBuilder& DigestBuilder::add(std::string_view token) {
    for (unsigned char c : token) {
        state_ ^= c;
        state_ *= 0x100000001b3ull;
    }
    // field separator so that ("ab","c") and ("a","bc") differ
    state_ ^= 0x1f;
    state_ *= 0x100000001b3ull;
    return *this;
}

std::string DigestBuilder::hex() const { return to_hex16(state_); }

KvFile KvFile::parse(const std::string& text, const std::string& origin) {
    KvFile out;
    out.origin_ = origin;
    out.raw_ = text;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw config_error(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(std::string_view(t).substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        KvEntry e;
        e.section = section;
        e.key = trim(std::string_view(t).substr(0, eq));
        e.value = trim(std::string_view(t).substr(eq + 1));
        if (e.key.empty())
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        out.entries_.push_back(std::move(e));
    }
    return out;
}

KvFile KvFile::load(const std::filesystem::path& file) {
    return parse(read_text_file(file), file.string());
}

std::optional<std::string> KvFile::find(std::string_view section, std::string_view key) const {
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) return e.value;
    return std::nullopt;
}

std::vector<std::string> KvFile::find_all(std::string_view section, std::string_view key) const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) out.push_back(e.value);
    return out;
}

bool KvFile::has_section(std::string_view section) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const KvEntry& e) { return e.section == section; });
}

std::string KvFile::get(std::string_view section, std::string_view key,
                        std::string_view fallback) const {
    auto v = find(section, key);
    return v ? *v : std::string(fallback);
}

double KvFile::get_double(std::string_view section, std::string_view key, double fallback) const {
    auto v = find(section, key);
    return v ? parse_double(*v, key) : fallback;
}

long long KvFile::get_int(std::string_view section, std::string_view key, long long fallback) const {
    auto v = find(section, key);
    return v ? parse_int(*v, key) : fallback;
}

bool KvFile::get_bool(std::string_view section, std::string_view key, bool fallback) const {
    auto v = find(section, key);
    return v ? parse_bool(*v, key) : fallback;
}

std::string read_text_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw io_error("cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("read failed for " + file.string());
    return ss.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view content) {
    if (file.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        if (ec) throw io_error("cannot create directory " + file.parent_path().string());
    }
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + file.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw io_error("write failed for " + file.string());
}

}  // namespace nbtisim

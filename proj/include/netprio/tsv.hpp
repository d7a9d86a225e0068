#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace netprio {

// Line-oriented reader for the tab-separated formats used across the
// toolkit. Skips blank lines and '#' comments, tracks physical line
// numbers for error reporting.
class TsvReader {
public:
    explicit TsvReader(const std::filesystem::path& path);

    // Advances to the next data line and splits it on tabs.
    // Returns false at end of file. Field views stay valid until the
    // next call.
    bool next(std::vector<std::string_view>& fields);

    std::size_t line_number() const noexcept { return line_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    std::string buf_;
    std::size_t line_ = 0;
};

// Strict numeric field parsers; throw ParseError naming file and line.
double parse_double_field(std::string_view field, const std::string& file, std::size_t line);
std::int64_t parse_int_field(std::string_view field, const std::string& file, std::size_t line);

// Fixed-format helpers so every emitted file is byte-stable across runs.
std::string format_score(double v);  // shortest round-tripping-ish "%.10g"
std::string format_fixed(double v, int digits);

}  // namespace netprio

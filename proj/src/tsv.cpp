#include "netprio/tsv.hpp"

#include <charconv>
#include <cstdio>

#include "netprio/errors.hpp"

namespace netprio {

TsvReader::TsvReader(const std::filesystem::path& path)
    : path_(path.string()), in_(path) {
    if (!in_) {
        throw IoError("cannot open " + path_);
    }
}

bool TsvReader::next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, buf_)) {
        ++line_;
        if (!buf_.empty() && buf_.back() == '\r') {
            buf_.pop_back();
        }
        if (buf_.empty() || buf_[0] == '#') {
            continue;
        }
        fields.clear();
        std::string_view rest = buf_;
        for (;;) {
            const std::size_t tab = rest.find('\t');
            if (tab == std::string_view::npos) {
                fields.push_back(rest);
                break;
            }
            fields.push_back(rest.substr(0, tab));
            rest = rest.substr(tab + 1);
        }
        return true;
    }
    return false;
}

double parse_double_field(std::string_view field, const std::string& file, std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ParseError(file, line, "expected a number, got '" + std::string(field) + "'");
    }
    return value;
}

std::int64_t parse_int_field(std::string_view field, const std::string& file, std::size_t line) {
    std::int64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ParseError(file, line, "expected an integer, got '" + std::string(field) + "'");
    }
    return value;
}

std::string format_score(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

ConvergenceError::ConvergenceError(int iterations, double residual)
    : Error("no convergence after " + std::to_string(iterations) + " iterations (last L1 step " +
            format_score(residual) + ")"),
      iterations_(iterations),
      residual_(residual) {}

}  // namespace netprio

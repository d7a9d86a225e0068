#include "netprio/manifest.hpp"

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <utility>

#include "netprio/errors.hpp"
#include "netprio/tsv.hpp"
#include "netprio/version.hpp"

namespace netprio {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for hashing");
    }
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw IoError("SHA-256 context initialization failed");
    }
    char buf[65536];
    while (in) {
        in.read(buf, sizeof(buf));
        const std::streamsize got = in.gcount();
        if (got > 0 && EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(got)) != 1) {
            EVP_MD_CTX_free(ctx);
            throw IoError("SHA-256 update failed for '" + path.string() + "'");
        }
    }
    if (in.bad()) {
        EVP_MD_CTX_free(ctx);
        throw IoError("read failed while hashing '" + path.string() + "'");
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw IoError("SHA-256 finalization failed");
    }
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

Manifest::Manifest(std::string command) : command_(std::move(command)) {}

void Manifest::set(const std::string& key, const std::string& value) {
    settings_.emplace_back(key, value);
}

void Manifest::set(const std::string& key, double value) {
    settings_.emplace_back(key, format_score(value));
}

void Manifest::set(const std::string& key, std::int64_t value) {
    settings_.emplace_back(key, std::to_string(value));
}

void Manifest::set(const std::string& key, bool value) {
    settings_.emplace_back(key, value ? "true" : "false");
}

void Manifest::add_input(const std::string& name, const std::filesystem::path& path) {
    inputs_.emplace_back("input." + name + ".path", path.string());
    inputs_.emplace_back("input." + name + ".sha256", sha256_file(path));
}

void Manifest::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << "# netprio manifest\n";
    out << "meta.version=" << kVersion << '\n';
    out << "meta.timestamp=" << utc_timestamp() << '\n';
    out << "meta.command=" << command_ << '\n';
    for (const auto& [key, value] : settings_) {
        out << key << '=' << value << '\n';
    }
    for (const auto& [key, value] : inputs_) {
        out << key << '=' << value << '\n';
    }
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

}  // namespace netprio

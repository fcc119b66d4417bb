#include "invar_app/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace invar::app {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

Cache::Cache(std::filesystem::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

std::filesystem::path Cache::path_for(const std::string& key) const {
    return dir_ / (sha256_hex(version_ + '\0' + key) + ".json");
}

std::optional<std::string> Cache::get(const std::string& key) const {
    auto path = path_for(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    try {
        auto j = nlohmann::json::parse(ss.str());
        std::string payload = j.at("payload").get<std::string>();
        if (j.at("version").get<std::string>() == version_ && j.at("key").get<std::string>() == key &&
            j.at("payload_sha256").get<std::string>() == sha256_hex(payload))
            return payload;
    } catch (const nlohmann::json::exception&) {
    }
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
}

void Cache::put(const std::string& key, const std::string& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    nlohmann::json j{{"version", version_}, {"key", key}, {"payload_sha256", sha256_hex(payload)}, {"payload", payload}};
    auto path = path_for(key);
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;
        out << j.dump();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace invar::app

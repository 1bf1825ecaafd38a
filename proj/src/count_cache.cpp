#include "cfz/count_cache.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace cfz {

std::string spec_key(const VarietySpec& spec)
{
    const std::string text = spec.canonical_string();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path CountCache::default_path()
{
    if (const char* env = std::getenv("CFZ_CACHE"); env && *env) return env;
    return ".cfz-cache.jsonl";
}

std::optional<CountRecord> CountCache::lookup(const std::string& key, std::uint32_t p, unsigned k) const
{
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::string line;
    std::optional<CountRecord> hit;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) continue;
        try {
            if (j.at("key").get<std::string>() != key || j.at("p").get<std::uint32_t>() != p ||
                j.at("k").get<unsigned>() != k)
                continue;
            hit = CountRecord{j.at("variety").get<std::string>(), p, k, j.at("count").get<std::uint64_t>(),
                              count_method_from_string(j.at("method").get<std::string>())};
        } catch (const std::exception&) {
            continue;
        }
    }
    return hit;
}

void CountCache::append(const std::string& key, const CountRecord& rec) const
{
    nlohmann::ordered_json j;
    j["key"] = key;
    j["variety"] = rec.variety;
    j["p"] = rec.p;
    j["k"] = rec.k;
    j["count"] = rec.count;
    j["method"] = to_string(rec.method);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot write count cache '" + path_.string() + "'");
    out << j.dump() << '\n';
}

} // namespace cfz

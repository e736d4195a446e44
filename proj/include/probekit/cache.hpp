#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "probekit/io_common.hpp"
#include "probekit/tensor.hpp"

namespace probekit {

// Extracted representations, keyed by sentence index and layer. Entry keys:
//   s<index>.l<layer>.pooled   [d]
//   s<index>.l<layer>.tokens   [n_real, d]
struct RepresentationCache {
    std::string dataset_id;
    std::string pooling;  // "mean" or "cls"
    std::vector<int> layers;
    int sentence_count = 0;
    std::vector<int> n_real;  // per sentence
    std::string config_hash;
    uint64_t seed = 0;
    std::map<std::string, Tensor> entries;

    static std::string pooled_key(int sentence, int layer) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "s%06d.l%02d.pooled", sentence, layer);
        return buf;
    }
    static std::string tokens_key(int sentence, int layer) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "s%06d.l%02d.tokens", sentence, layer);
        return buf;
    }

    const Tensor& pooled(int sentence, int layer) const { return at(pooled_key(sentence, layer)); }
    const Tensor& tokens(int sentence, int layer) const { return at(tokens_key(sentence, layer)); }
    bool has(const std::string& key) const { return entries.count(key) > 0; }

private:
    const Tensor& at(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) throw ValueError("cache entry missing: " + key);
        return it->second;
    }
};

inline constexpr char kCacheMagic[7] = {'P', 'K', 'C', 'A', 'C', 'H', 'E'};
inline constexpr uint8_t kCacheVersion = 1;

inline void write_cache(const std::string& path, const RepresentationCache& cache) {
    nlohmann::json manifest = {
        {"dataset", cache.dataset_id}, {"pooling", cache.pooling},
        {"layers", cache.layers},      {"sentence_count", cache.sentence_count},
        {"n_real", cache.n_real},      {"config_hash", cache.config_hash},
        {"seed", cache.seed},
    };
    io::write_file(path, io::serialize_container(kCacheMagic, kCacheVersion, std::move(manifest),
                                                 cache.entries));
}

inline RepresentationCache read_cache(const std::string& path) {
    const auto buf = io::read_file(path);
    io::Container c = io::parse_container(buf, kCacheMagic, kCacheVersion, path);
    RepresentationCache cache;
    cache.dataset_id = c.manifest.at("dataset").get<std::string>();
    cache.pooling = c.manifest.at("pooling").get<std::string>();
    cache.layers = c.manifest.at("layers").get<std::vector<int>>();
    cache.sentence_count = c.manifest.at("sentence_count").get<int>();
    cache.n_real = c.manifest.at("n_real").get<std::vector<int>>();
    cache.config_hash = c.manifest.at("config_hash").get<std::string>();
    cache.seed = c.manifest.at("seed").get<uint64_t>();
    cache.entries = std::move(c.tensors);
    return cache;
}

}  // namespace probekit

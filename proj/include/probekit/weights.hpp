#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "probekit/io_common.hpp"
#include "probekit/tensor.hpp"

namespace probekit {

struct ConfigError : Error {
    using Error::Error;
};

struct EncoderConfig {
    int num_layers = 12;
    int num_heads = 12;
    int hidden_size = 768;
    int intermediate_size = 3072;
    int vocab_size = 30522;
    int max_position = 512;
    int type_vocab_size = 2;
    float layer_norm_eps = 1e-12f;

    int head_size() const { return hidden_size / num_heads; }

    void validate() const {
        if (num_layers <= 0 || num_heads <= 0 || hidden_size <= 0 || intermediate_size <= 0 ||
            vocab_size <= 0 || max_position <= 0 || type_vocab_size <= 0)
            throw ConfigError("encoder config: all counts must be positive");
        if (hidden_size % num_heads != 0)
            throw ConfigError("encoder config: hidden_size not divisible by num_heads");
    }

    // HF-style config.json keys, so published checkpoints' configs load as-is
    static EncoderConfig from_json(const nlohmann::json& j) {
        EncoderConfig c;
        c.num_layers = j.at("num_hidden_layers").get<int>();
        c.num_heads = j.at("num_attention_heads").get<int>();
        c.hidden_size = j.at("hidden_size").get<int>();
        c.intermediate_size = j.at("intermediate_size").get<int>();
        c.vocab_size = j.at("vocab_size").get<int>();
        c.max_position = j.at("max_position_embeddings").get<int>();
        c.type_vocab_size = j.value("type_vocab_size", 2);
        c.layer_norm_eps = j.value("layer_norm_eps", 1e-12f);
        c.validate();
        return c;
    }

    static EncoderConfig from_file(const std::string& path) {
        const auto buf = io::read_file(path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(buf.begin(), buf.end());
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("cannot parse encoder config " + path + ": " + e.what());
        }
        return from_json(j);
    }
};

// Tensor archive: u64 LE header length, JSON header mapping tensor name to
// {dtype, shape, data_offsets}, then raw little-endian payload. Offsets are
// relative to the end of the header. Only F32 payloads are accepted.
namespace archive {

inline std::map<std::string, Tensor> read(const std::string& path) {
    const auto buf = io::read_file(path);
    if (buf.size() < 8)
        throw LoadError(LoadError::Code::truncated, path + ": shorter than the length field");
    const uint64_t hlen = io::read_u64_le(buf.data());
    if (hlen == 0)
        throw LoadError(LoadError::Code::malformed_header, path + ": zero-length header");
    if (8 + hlen > buf.size())
        throw LoadError(LoadError::Code::truncated, path + ": header extends past end of file");

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(buf.begin() + 8, buf.begin() + 8 + static_cast<long>(hlen));
    } catch (const nlohmann::json::exception& e) {
        throw LoadError(LoadError::Code::malformed_header,
                        path + ": header JSON parse failure: " + e.what());
    }
    if (!header.is_object())
        throw LoadError(LoadError::Code::malformed_header, path + ": header is not an object");

    const char* payload = buf.data() + 8 + hlen;
    const uint64_t payload_len = buf.size() - 8 - hlen;

    std::map<std::string, Tensor> tensors;
    std::vector<std::pair<uint64_t, uint64_t>> spans;
    for (const auto& [name, info] : header.items()) {
        if (name == "__metadata__") continue;
        const std::string dtype = info.at("dtype").get<std::string>();
        if (dtype != "F32")
            throw LoadError(LoadError::Code::dtype,
                            path + ": unsupported dtype " + dtype + " for tensor " + name +
                                " (only F32 payloads are accepted)");
        const auto shape = info.at("shape").get<std::vector<int64_t>>();
        const auto offs = info.at("data_offsets").get<std::vector<uint64_t>>();
        int64_t count = 1;
        for (int64_t d : shape) {
            if (d < 0) throw LoadError(LoadError::Code::malformed_header,
                                       path + ": negative dimension for tensor " + name);
            count *= d;
        }
        if (offs.size() != 2 || offs[1] < offs[0] || offs[1] > payload_len)
            throw LoadError(LoadError::Code::offsets,
                            path + ": out-of-range offsets for tensor " + name);
        if (offs[1] - offs[0] != static_cast<uint64_t>(count) * 4)
            throw LoadError(LoadError::Code::offsets,
                            path + ": offsets do not match shape for tensor " + name);
        spans.emplace_back(offs[0], offs[1]);
        std::vector<float> data(static_cast<size_t>(count));
        std::memcpy(data.data(), payload + offs[0], static_cast<size_t>(count) * 4);
        tensors.emplace(name, Tensor(shape, std::move(data)));
    }

    std::sort(spans.begin(), spans.end());
    for (size_t i = 1; i < spans.size(); ++i)
        if (spans[i].first < spans[i - 1].second)
            throw LoadError(LoadError::Code::offsets, path + ": overlapping tensor data ranges");

    return tensors;
}

inline void write(const std::string& path, const std::map<std::string, Tensor>& tensors) {
    nlohmann::json header = nlohmann::json::object();
    uint64_t offset = 0;
    for (const auto& [name, t] : tensors) {
        const uint64_t nbytes = static_cast<uint64_t>(t.size()) * 4;
        header[name] = {{"dtype", "F32"},
                        {"shape", t.shape()},
                        {"data_offsets", {offset, offset + nbytes}}};
        offset += nbytes;
    }
    const std::string hjson = header.dump();
    std::string out;
    out.reserve(8 + hjson.size() + offset);
    io::append_u64_le(out, hjson.size());
    out += hjson;
    for (const auto& [name, t] : tensors) {
        const size_t pos = out.size();
        out.resize(pos + static_cast<size_t>(t.size()) * 4);
        std::memcpy(out.data() + pos, t.data(), static_cast<size_t>(t.size()) * 4);
    }
    io::write_file(path, out);
}

}  // namespace archive

struct LayerWeights {
    Tensor q_w, q_b, k_w, k_b, v_w, v_b;  // [d,d] / [d], [out,in] layout
    Tensor attn_out_w, attn_out_b;        // [d,d] / [d]
    Tensor attn_ln_gamma, attn_ln_beta;   // [d]
    Tensor ffn_in_w, ffn_in_b;            // [I,d] / [I]
    Tensor ffn_out_w, ffn_out_b;          // [d,I] / [d]
    Tensor out_ln_gamma, out_ln_beta;     // [d]
};

struct EncoderWeights {
    EncoderConfig config;
    Tensor word_embeddings;        // [V,d]
    Tensor position_embeddings;    // [P,d]
    Tensor token_type_embeddings;  // [T,d]
    Tensor emb_ln_gamma, emb_ln_beta;
    std::vector<LayerWeights> layers;
};

// Expected tensor names (HF BertModel convention) and shapes for a config.
inline std::vector<std::pair<std::string, std::vector<int64_t>>> architecture_manifest(
    const EncoderConfig& c) {
    const int64_t d = c.hidden_size, I = c.intermediate_size;
    std::vector<std::pair<std::string, std::vector<int64_t>>> m = {
        {"embeddings.word_embeddings.weight", {c.vocab_size, d}},
        {"embeddings.position_embeddings.weight", {c.max_position, d}},
        {"embeddings.token_type_embeddings.weight", {c.type_vocab_size, d}},
        {"embeddings.LayerNorm.weight", {d}},
        {"embeddings.LayerNorm.bias", {d}},
    };
    for (int l = 0; l < c.num_layers; ++l) {
        const std::string p = "encoder.layer." + std::to_string(l) + ".";
        m.emplace_back(p + "attention.self.query.weight", std::vector<int64_t>{d, d});
        m.emplace_back(p + "attention.self.query.bias", std::vector<int64_t>{d});
        m.emplace_back(p + "attention.self.key.weight", std::vector<int64_t>{d, d});
        m.emplace_back(p + "attention.self.key.bias", std::vector<int64_t>{d});
        m.emplace_back(p + "attention.self.value.weight", std::vector<int64_t>{d, d});
        m.emplace_back(p + "attention.self.value.bias", std::vector<int64_t>{d});
        m.emplace_back(p + "attention.output.dense.weight", std::vector<int64_t>{d, d});
        m.emplace_back(p + "attention.output.dense.bias", std::vector<int64_t>{d});
        m.emplace_back(p + "attention.output.LayerNorm.weight", std::vector<int64_t>{d});
        m.emplace_back(p + "attention.output.LayerNorm.bias", std::vector<int64_t>{d});
        m.emplace_back(p + "intermediate.dense.weight", std::vector<int64_t>{I, d});
        m.emplace_back(p + "intermediate.dense.bias", std::vector<int64_t>{I});
        m.emplace_back(p + "output.dense.weight", std::vector<int64_t>{d, I});
        m.emplace_back(p + "output.dense.bias", std::vector<int64_t>{d});
        m.emplace_back(p + "output.LayerNorm.weight", std::vector<int64_t>{d});
        m.emplace_back(p + "output.LayerNorm.bias", std::vector<int64_t>{d});
    }
    return m;
}

// Loads and shape-checks encoder weights. Accepts manifest names either bare
// or with a "bert." prefix (checkpoints exported from the full pretraining
// model keep the prefix); extra tensors such as pooler.* are ignored.
inline EncoderWeights load_encoder_weights(const std::string& path, const EncoderConfig& config) {
    config.validate();
    auto raw = archive::read(path);

    std::map<std::string, Tensor> named;
    for (auto& [name, t] : raw) {
        std::string key = name;
        if (key.rfind("bert.", 0) == 0) key = key.substr(5);
        auto [it, inserted] = named.emplace(key, std::move(t));
        if (!inserted)
            throw LoadError(LoadError::Code::collision,
                            path + ": tensor \"" + name + "\" collides with another source name on manifest entry \"" + key + "\"");
    }

    auto take = [&](const std::string& name, const std::vector<int64_t>& shape) -> Tensor {
        auto it = named.find(name);
        if (it == named.end())
            throw LoadError(LoadError::Code::missing_tensor,
                            path + ": required tensor missing: " + name);
        if (it->second.shape() != shape) {
            std::string want = "[";
            for (size_t i = 0; i < shape.size(); ++i)
                want += (i ? "," : "") + std::to_string(shape[i]);
            throw LoadError(LoadError::Code::offsets,
                            path + ": tensor " + name + " has shape " + shape_string(it->second) +
                                ", encoder config implies " + want + "]");
        }
        Tensor t = std::move(it->second);
        named.erase(it);
        return t;
    };

    const int64_t d = config.hidden_size, I = config.intermediate_size;
    EncoderWeights w;
    w.config = config;
    w.word_embeddings = take("embeddings.word_embeddings.weight", {config.vocab_size, d});
    w.position_embeddings = take("embeddings.position_embeddings.weight", {config.max_position, d});
    w.token_type_embeddings =
        take("embeddings.token_type_embeddings.weight", {config.type_vocab_size, d});
    w.emb_ln_gamma = take("embeddings.LayerNorm.weight", {d});
    w.emb_ln_beta = take("embeddings.LayerNorm.bias", {d});
    w.layers.reserve(static_cast<size_t>(config.num_layers));
    for (int l = 0; l < config.num_layers; ++l) {
        const std::string p = "encoder.layer." + std::to_string(l) + ".";
        LayerWeights lw;
        lw.q_w = take(p + "attention.self.query.weight", {d, d});
        lw.q_b = take(p + "attention.self.query.bias", {d});
        lw.k_w = take(p + "attention.self.key.weight", {d, d});
        lw.k_b = take(p + "attention.self.key.bias", {d});
        lw.v_w = take(p + "attention.self.value.weight", {d, d});
        lw.v_b = take(p + "attention.self.value.bias", {d});
        lw.attn_out_w = take(p + "attention.output.dense.weight", {d, d});
        lw.attn_out_b = take(p + "attention.output.dense.bias", {d});
        lw.attn_ln_gamma = take(p + "attention.output.LayerNorm.weight", {d});
        lw.attn_ln_beta = take(p + "attention.output.LayerNorm.bias", {d});
        lw.ffn_in_w = take(p + "intermediate.dense.weight", {I, d});
        lw.ffn_in_b = take(p + "intermediate.dense.bias", {I});
        lw.ffn_out_w = take(p + "output.dense.weight", {d, I});
        lw.ffn_out_b = take(p + "output.dense.bias", {d});
        lw.out_ln_gamma = take(p + "output.LayerNorm.weight", {d});
        lw.out_ln_beta = take(p + "output.LayerNorm.bias", {d});
        w.layers.push_back(std::move(lw));
    }
    return w;
}

}  // namespace probekit

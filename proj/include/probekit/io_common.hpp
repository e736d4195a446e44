#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "probekit/tensor.hpp"

namespace probekit {

struct LoadError : Error {
    enum class Code {
        io,                // cannot open / read
        truncated,         // file shorter than declared content
        malformed_header,  // bad magic / header length / header JSON
        version,           // unknown format version or magic
        dtype,             // unsupported tensor dtype
        offsets,           // out-of-range or overlapping data offsets
        missing_tensor,    // architecture manifest entry absent
        collision,         // two source names map to one manifest entry
        checksum,          // whole-file checksum mismatch
    };

    LoadError(Code c, const std::string& msg) : Error(msg), code(c) {}
    Code code;
};

namespace io {

inline std::vector<char> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw LoadError(LoadError::Code::io, "cannot open file: " + path);
    f.seekg(0, std::ios::end);
    const std::streamoff len = f.tellg();
    f.seekg(0);
    std::vector<char> buf(static_cast<size_t>(len));
    if (len > 0) f.read(buf.data(), len);
    if (!f) throw LoadError(LoadError::Code::io, "cannot read file: " + path);
    return buf;
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw LoadError(LoadError::Code::io, "cannot open file for writing: " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw LoadError(LoadError::Code::io, "cannot write file: " + path);
}

inline uint64_t read_u64_le(const char* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<uint8_t>(p[i]);
    return v;
}

inline void append_u64_le(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void append_u32_le(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// CRC-32 (IEEE 802.3), table-driven
inline uint32_t crc32(const char* data, size_t len, uint32_t seed = 0) {
    static const std::array<uint32_t, 256> table = [] {
        std::array<uint32_t, 256> t{};
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    uint32_t crc = ~seed;
    for (size_t i = 0; i < len; ++i)
        crc = table[(crc ^ static_cast<uint8_t>(data[i])) & 0xffu] ^ (crc >> 8);
    return ~crc;
}

// FNV-1a 64; used for config hashes and seed fan-out, not integrity
inline uint64_t fnv1a64(const std::string& s, uint64_t seed = 0xcbf29ce484222325ull) {
    uint64_t h = seed;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    if (index == 0) return seed;
    // splitmix64 step over (seed, index)
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * index;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

// Versioned binary container shared by the cache and probe checkpoints:
//   magic[7] + version byte, u64 manifest length, manifest JSON,
//   raw little-endian f32 payload, trailing u32 CRC-32 of everything before.
// Tensor offsets in the manifest are relative to the payload start.
struct Container {
    nlohmann::json manifest;
    std::map<std::string, Tensor> tensors;
};

inline std::string serialize_container(const char magic[7], uint8_t version,
                                       nlohmann::json manifest,
                                       const std::map<std::string, Tensor>& tensors) {
    nlohmann::json entries = nlohmann::json::object();
    uint64_t offset = 0;
    for (const auto& [name, t] : tensors) {
        const uint64_t nbytes = static_cast<uint64_t>(t.size()) * 4;
        entries[name] = {{"shape", t.shape()},
                         {"data_offsets", {offset, offset + nbytes}}};
        offset += nbytes;
    }
    manifest["entries"] = std::move(entries);

    std::string out(magic, magic + 7);
    out.push_back(static_cast<char>(version));
    const std::string mjson = manifest.dump();
    append_u64_le(out, mjson.size());
    out += mjson;
    for (const auto& [name, t] : tensors) {
        static_assert(sizeof(float) == 4);
        const size_t pos = out.size();
        out.resize(pos + static_cast<size_t>(t.size()) * 4);
        std::memcpy(out.data() + pos, t.data(), static_cast<size_t>(t.size()) * 4);
    }
    append_u32_le(out, crc32(out.data(), out.size()));
    return out;
}

inline Container parse_container(const std::vector<char>& buf, const char magic[7],
                                 uint8_t expected_version, const std::string& what) {
    if (buf.size() < 8 || std::memcmp(buf.data(), magic, 7) != 0)
        throw LoadError(LoadError::Code::version, what + ": bad magic bytes");
    if (static_cast<uint8_t>(buf[7]) != expected_version)
        throw LoadError(LoadError::Code::version,
                        what + ": unsupported format version " + std::to_string(buf[7]));
    if (buf.size() < 8 + 8 + 4)
        throw LoadError(LoadError::Code::truncated, what + ": file too short");

    // trailing 4 bytes hold the CRC; recompute over the rest
    uint32_t stored_crc = 0;
    for (int i = 3; i >= 0; --i)
        stored_crc = (stored_crc << 8) | static_cast<uint8_t>(buf[buf.size() - 4 + i]);
    if (crc32(buf.data(), buf.size() - 4) != stored_crc)
        throw LoadError(LoadError::Code::checksum, what + ": checksum mismatch");

    const uint64_t mlen = read_u64_le(buf.data() + 8);
    if (mlen == 0 || 16 + mlen + 4 > buf.size())
        throw LoadError(LoadError::Code::malformed_header, what + ": bad manifest length");

    Container c;
    try {
        c.manifest = nlohmann::json::parse(buf.begin() + 16, buf.begin() + 16 + static_cast<long>(mlen));
    } catch (const nlohmann::json::exception& e) {
        throw LoadError(LoadError::Code::malformed_header,
                        what + ": manifest JSON parse failure: " + e.what());
    }

    const char* payload = buf.data() + 16 + mlen;
    const uint64_t payload_len = buf.size() - 16 - mlen - 4;
    for (const auto& [name, info] : c.manifest.at("entries").items()) {
        const auto shape = info.at("shape").get<std::vector<int64_t>>();
        const auto offs = info.at("data_offsets").get<std::vector<uint64_t>>();
        int64_t count = 1;
        for (int64_t d : shape) count *= d;
        if (offs.size() != 2 || offs[1] < offs[0] || offs[1] > payload_len ||
            offs[1] - offs[0] != static_cast<uint64_t>(count) * 4)
            throw LoadError(LoadError::Code::offsets, what + ": bad offsets for entry " + name);
        std::vector<float> data(static_cast<size_t>(count));
        std::memcpy(data.data(), payload + offs[0], static_cast<size_t>(count) * 4);
        c.tensors.emplace(name, Tensor(shape, std::move(data)));
    }
    return c;
}

}  // namespace io
}  // namespace probekit

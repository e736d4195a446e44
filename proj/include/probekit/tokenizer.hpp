#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "probekit/tensor.hpp"
#include "probekit/unicode_data.hpp"

namespace probekit {

struct ParseError : Error {
    ParseError(const std::string& msg, int line = -1)
        : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_number(line) {}
    int line_number;
};

namespace uni {

inline constexpr uint32_t kReplacement = 0xFFFD;

// decodes the codepoint at s[i], advancing i; invalid bytes yield U+FFFD
inline uint32_t next_codepoint(std::string_view s, size_t& i) {
    const auto b0 = static_cast<uint8_t>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + static_cast<size_t>(len) > s.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<uint8_t>(s[i + static_cast<size_t>(k)]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += static_cast<size_t>(len);
    return cp;
}

inline void append_codepoint(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline bool in_ranges(uint32_t cp, const unicode_data::Range* table, size_t n) {
    size_t lo = 0, hi = n;
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        if (cp < table[mid].lo)
            hi = mid;
        else if (cp > table[mid].hi)
            lo = mid + 1;
        else
            return true;
    }
    return false;
}

inline const char* lookup_mapped(uint32_t cp, const unicode_data::MappedChar* table, size_t n) {
    size_t lo = 0, hi = n;
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        if (cp < table[mid].cp)
            hi = mid;
        else if (cp > table[mid].cp)
            lo = mid + 1;
        else
            return table[mid].replacement;
    }
    return nullptr;
}

inline bool is_space(uint32_t cp) {
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r') return true;
    return in_ranges(cp, unicode_data::kSpaceSeparators, std::size(unicode_data::kSpaceSeparators));
}

inline bool is_control(uint32_t cp) {
    if (cp == '\t' || cp == '\n' || cp == '\r') return false;
    return in_ranges(cp, unicode_data::kControlFormat, std::size(unicode_data::kControlFormat));
}

// ASCII symbol ranges count as punctuation in addition to category P*
inline bool is_punctuation(uint32_t cp) {
    if ((cp >= 33 && cp <= 47) || (cp >= 58 && cp <= 64) || (cp >= 91 && cp <= 96) ||
        (cp >= 123 && cp <= 126))
        return true;
    return in_ranges(cp, unicode_data::kPunctuation, std::size(unicode_data::kPunctuation));
}

inline bool is_combining_mark(uint32_t cp) {
    return in_ranges(cp, unicode_data::kCombiningMarks, std::size(unicode_data::kCombiningMarks));
}

inline bool is_cjk(uint32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
           (cp >= 0x20000 && cp <= 0x2A6DF) || (cp >= 0x2A700 && cp <= 0x2B73F) ||
           (cp >= 0x2B740 && cp <= 0x2B81F) || (cp >= 0x2B820 && cp <= 0x2CEAF) ||
           (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0x2F800 && cp <= 0x2FA1F);
}

}  // namespace uni

struct Vocabulary {
    std::unordered_map<std::string, int> token_to_id;
    std::vector<std::string> id_to_token;
    int pad_id = -1, unk_id = -1, cls_id = -1, sep_id = -1, mask_id = -1;

    int size() const { return static_cast<int>(id_to_token.size()); }

    int id(std::string_view token) const {
        auto it = token_to_id.find(std::string(token));
        return it == token_to_id.end() ? -1 : it->second;
    }

    bool contains(std::string_view token) const { return id(token) >= 0; }
};

// one token per line; id equals the zero-based line number
inline Vocabulary load_vocab(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open vocab file: " + path);
    Vocabulary v;
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && f.peek() == EOF) break;  // trailing newline
        auto [it, inserted] = v.token_to_id.emplace(line, line_no);
        if (!inserted) throw ParseError("duplicate vocab token \"" + line + "\"", line_no + 1);
        v.id_to_token.push_back(line);
        ++line_no;
    }
    v.pad_id = v.id("[PAD]");
    v.unk_id = v.id("[UNK]");
    v.cls_id = v.id("[CLS]");
    v.sep_id = v.id("[SEP]");
    v.mask_id = v.id("[MASK]");
    for (auto [name, id] : {std::pair<const char*, int>{"[PAD]", v.pad_id},
                            {"[UNK]", v.unk_id},
                            {"[CLS]", v.cls_id},
                            {"[SEP]", v.sep_id},
                            {"[MASK]", v.mask_id}})
        if (id < 0) throw ParseError(std::string("vocab missing special token ") + name);
    return v;
}

// Uncased BERT basic tokenization: control-char cleanup, CJK isolation,
// accent stripping (NFD minus combining marks), lowercasing, whitespace and
// punctuation splitting.
inline std::vector<std::string> basic_tokenize(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size() + 8);
    size_t i = 0;
    while (i < text.size()) {
        const uint32_t cp = uni::next_codepoint(text, i);
        if (cp == 0 || cp == uni::kReplacement || uni::is_control(cp)) continue;
        if (uni::is_space(cp)) {
            cleaned.push_back(' ');
            continue;
        }
        if (uni::is_cjk(cp)) {
            cleaned.push_back(' ');
            uni::append_codepoint(cleaned, cp);
            cleaned.push_back(' ');
            continue;
        }
        uni::append_codepoint(cleaned, cp);
    }

    std::string normalized;
    normalized.reserve(cleaned.size());
    i = 0;
    while (i < cleaned.size()) {
        const uint32_t cp = uni::next_codepoint(cleaned, i);
        std::string piece;
        if (const char* repl = uni::lookup_mapped(cp, unicode_data::kStripMarks,
                                                  std::size(unicode_data::kStripMarks))) {
            piece = repl;
        } else if (uni::is_combining_mark(cp)) {
            continue;
        } else {
            uni::append_codepoint(piece, cp);
        }
        // lowercase each codepoint of the stripped form
        size_t k = 0;
        while (k < piece.size()) {
            const uint32_t pc = uni::next_codepoint(piece, k);
            if (const char* low = uni::lookup_mapped(pc, unicode_data::kLowercase,
                                                     std::size(unicode_data::kLowercase)))
                normalized += low;
            else
                uni::append_codepoint(normalized, pc);
        }
    }

    std::vector<std::string> words;
    std::string current;
    i = 0;
    while (i < normalized.size()) {
        const size_t start = i;
        const uint32_t cp = uni::next_codepoint(normalized, i);
        if (cp == ' ') {
            if (!current.empty()) words.push_back(std::move(current));
            current.clear();
        } else if (uni::is_punctuation(cp)) {
            if (!current.empty()) words.push_back(std::move(current));
            current.clear();
            words.emplace_back(normalized.substr(start, i - start));
        } else {
            current += normalized.substr(start, i - start);
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

inline constexpr int kMaxWordpieceChars = 100;

// greedy longest-match-first sub-word split; unmatched words become [UNK]
inline std::vector<std::string> wordpiece(std::string_view word, const Vocabulary& vocab) {
    std::vector<size_t> bounds;  // codepoint boundaries
    bounds.push_back(0);
    size_t i = 0;
    while (i < word.size()) {
        uni::next_codepoint(word, i);
        bounds.push_back(i);
    }
    const size_t nchars = bounds.size() - 1;
    if (nchars == 0) return {};
    if (nchars > kMaxWordpieceChars) return {"[UNK]"};

    std::vector<std::string> pieces;
    size_t start = 0;
    while (start < nchars) {
        size_t end = nchars;
        std::string match;
        while (start < end) {
            std::string candidate(word.substr(bounds[start], bounds[end] - bounds[start]));
            if (start > 0) candidate = "##" + candidate;
            if (vocab.contains(candidate)) {
                match = std::move(candidate);
                break;
            }
            --end;
        }
        if (match.empty()) return {"[UNK]"};
        pieces.push_back(std::move(match));
        start = end;
    }
    return pieces;
}

struct TokenizedSentence {
    std::vector<std::string> tokens;
    std::vector<int> ids;
    std::vector<int> word_index;      // source word per token; -1 for specials/pad
    std::vector<uint8_t> is_special;  // [CLS], [SEP], [PAD]
    int n_real = 0;                   // tokens before padding, incl. [CLS]/[SEP]

    int size() const { return static_cast<int>(tokens.size()); }
    bool is_pad(int i) const { return i >= n_real; }
};

// [CLS] + pieces + [SEP], truncated to max_len, padded with [PAD]
inline TokenizedSentence encode(std::string_view text, const Vocabulary& vocab, int max_len = 128) {
    if (max_len < 3) throw ValueError("encode: max_len must be at least 3");

    TokenizedSentence s;
    auto push = [&](std::string token, int word, bool special) {
        const int tid = vocab.id(token);
        s.ids.push_back(tid >= 0 ? tid : vocab.unk_id);
        s.tokens.push_back(std::move(token));
        s.word_index.push_back(word);
        s.is_special.push_back(special ? 1 : 0);
    };

    push("[CLS]", -1, true);
    const auto words = basic_tokenize(text);
    for (size_t w = 0; w < words.size() && s.size() < max_len - 1; ++w) {
        for (auto& piece : wordpiece(words[w], vocab)) {
            if (s.size() >= max_len - 1) break;  // leave room for [SEP]
            push(std::move(piece), static_cast<int>(w), false);
        }
    }
    push("[SEP]", -1, true);
    s.n_real = s.size();
    while (s.size() < max_len) push("[PAD]", -1, true);
    return s;
}

}  // namespace probekit

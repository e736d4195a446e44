#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "probekit/io_common.hpp"
#include "probekit/tokenizer.hpp"

namespace probekit {

struct ProbingExample {
    std::string split;  // tr / va / te
    std::string label;
    std::string sentence;
    std::optional<std::string> twin;  // perturbed or reconstructed counterpart
    std::vector<int> meta;            // perturbation word indices
};

struct DataError : Error {
    using Error::Error;
};

// SentEval probing TSV: split \t label \t sentence
inline std::vector<ProbingExample> load_senteval_tsv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open dataset: " + path);
    std::vector<ProbingExample> out;
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const size_t t1 = line.find('\t');
        const size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos ||
            line.find('\t', t2 + 1) != std::string::npos)
            throw ParseError(path + ": expected 3 tab-separated columns", line_no);
        ProbingExample ex;
        ex.split = line.substr(0, t1);
        ex.label = line.substr(t1 + 1, t2 - t1 - 1);
        ex.sentence = line.substr(t2 + 1);
        if (ex.split != "tr" && ex.split != "va" && ex.split != "te")
            throw ParseError(path + ": unknown split tag \"" + ex.split + "\"", line_no);
        if (ex.label.empty()) throw ParseError(path + ": empty label", line_no);
        out.push_back(std::move(ex));
    }
    return out;
}

inline std::map<std::string, std::map<std::string, int>> class_counts(
    const std::vector<ProbingExample>& examples) {
    std::map<std::string, std::map<std::string, int>> counts;
    for (const auto& ex : examples) ++counts[ex.split][ex.label];
    return counts;
}

inline std::vector<std::string> split_words(const std::string& sentence) {
    std::istringstream ss(sentence);
    std::vector<std::string> words;
    std::string w;
    while (ss >> w) words.push_back(std::move(w));
    return words;
}

inline std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += words[i];
    }
    return out;
}

inline bool is_punctuation_word(const std::string& word) {
    if (word.empty()) return false;
    size_t i = 0;
    while (i < word.size()) {
        if (!uni::is_punctuation(uni::next_codepoint(word, i))) return false;
    }
    return true;
}

struct CannotPerturb : DataError {
    using DataError::DataError;
};

struct BigramShift {
    std::string shifted;
    int left_word = -1;  // word index of the first member of the swapped pair
    int right_word = -1;
};

// swaps one uniformly chosen adjacent word pair; the sentence-initial word
// and punctuation-only words are never swapped
inline BigramShift bigram_shift(const std::string& sentence, std::mt19937_64& rng) {
    auto words = split_words(sentence);
    std::vector<int> eligible;
    for (int i = 1; i + 1 < static_cast<int>(words.size()); ++i) {
        if (!is_punctuation_word(words[static_cast<size_t>(i)]) &&
            !is_punctuation_word(words[static_cast<size_t>(i + 1)]))
            eligible.push_back(i);
    }
    if (eligible.empty())
        throw CannotPerturb("no eligible adjacent word pair in: " + sentence);
    std::uniform_int_distribution<size_t> pick(0, eligible.size() - 1);
    const int k = eligible[pick(rng)];
    std::swap(words[static_cast<size_t>(k)], words[static_cast<size_t>(k + 1)]);
    return {join_words(words), k, k + 1};
}

// applies a specific swap (used for involution checks and twin regeneration)
inline std::string swap_words(const std::string& sentence, int left, int right) {
    auto words = split_words(sentence);
    if (left < 0 || right >= static_cast<int>(words.size()) || left >= right)
        throw DataError("swap_words: bad indices");
    std::swap(words[static_cast<size_t>(left)], words[static_cast<size_t>(right)]);
    return join_words(words);
}

struct ShiftMask {
    std::vector<uint8_t> m;      // per token of the shifted tokenization
    std::vector<int> positions;  // V: token positions of the shifted bigram
};

// marks every sub-word token of both swapped words on the tokenization of
// the shifted sentence; specials stay 0
inline ShiftMask build_shift_mask(const TokenizedSentence& shifted, int left_word, int right_word) {
    ShiftMask mask;
    mask.m.assign(static_cast<size_t>(shifted.size()), 0);
    for (int i = 0; i < shifted.size(); ++i) {
        if (shifted.is_special[static_cast<size_t>(i)]) continue;
        const int w = shifted.word_index[static_cast<size_t>(i)];
        if (w == left_word || w == right_word) {
            mask.m[static_cast<size_t>(i)] = 1;
            mask.positions.push_back(i);
        }
    }
    if (mask.positions.size() < 2)
        throw DataError("shift mask lost alignment (swapped words truncated or unmatched)");
    return mask;
}

struct CoordInvPair {
    std::string original;
    std::string inverted;
    int coord_word_original = -1;
    int coord_word_inverted = -1;
};

// swaps the clauses around the coordinator; trailing punctuation-only words
// stay terminal
inline std::vector<std::string> swap_clauses(const std::vector<std::string>& words, int coord) {
    int term = static_cast<int>(words.size());
    while (term > coord + 1 && is_punctuation_word(words[static_cast<size_t>(term - 1)])) --term;
    std::vector<std::string> out;
    out.reserve(words.size());
    for (int i = coord + 1; i < term; ++i) out.push_back(words[static_cast<size_t>(i)]);
    out.push_back(words[static_cast<size_t>(coord)]);
    for (int i = 0; i < coord; ++i) out.push_back(words[static_cast<size_t>(i)]);
    for (int i = term; i < static_cast<int>(words.size()); ++i)
        out.push_back(words[static_cast<size_t>(i)]);
    return out;
}

// Rebuilds the (original, inverted) pair for a CoordInv example. Returns
// nothing when the sentence is filtered out: no coordinator, several
// coordinators, or an empty clause on either side.
inline std::optional<CoordInvPair> coordinv_reconstruct(const std::string& sentence,
                                                        const std::string& label) {
    const auto words = split_words(sentence);
    int coord = -1;
    int count = 0;
    for (int i = 0; i < static_cast<int>(words.size()); ++i) {
        if (words[static_cast<size_t>(i)] == "and" || words[static_cast<size_t>(i)] == "but") {
            coord = i;
            ++count;
        }
    }
    if (count != 1) return std::nullopt;

    int term = static_cast<int>(words.size());
    while (term > coord + 1 && is_punctuation_word(words[static_cast<size_t>(term - 1)])) --term;
    if (coord == 0 || coord + 1 >= term) return std::nullopt;  // empty clause

    const auto swapped = swap_clauses(words, coord);
    CoordInvPair pair;
    if (label == "I") {
        // the dataset text is the malformed order; the swap recovers the original
        pair.original = join_words(swapped);
        pair.inverted = sentence;
        pair.coord_word_original = term - 1 - coord;
        pair.coord_word_inverted = coord;
    } else {
        pair.original = sentence;
        pair.inverted = join_words(swapped);
        pair.coord_word_original = coord;
        pair.coord_word_inverted = term - 1 - coord;
    }
    return pair;
}

// class-stratified uniform sample of ceil(fraction * N) examples from the
// training split, deterministic under the seed; va/te splits pass through
inline std::vector<ProbingExample> subsample_train(const std::vector<ProbingExample>& examples,
                                                   double fraction, uint64_t seed) {
    if (!(fraction > 0.0) || fraction > 1.0)
        throw ValueError("subsample fraction must be in (0, 1]");
    if (fraction == 1.0) return examples;

    std::vector<size_t> train_indices;
    std::map<std::string, std::vector<size_t>> by_class;
    for (size_t i = 0; i < examples.size(); ++i) {
        if (examples[i].split == "tr") {
            train_indices.push_back(i);
            by_class[examples[i].label].push_back(i);
        }
    }
    if (train_indices.empty()) throw ValueError("subsample: empty training split");

    const size_t total = static_cast<size_t>(
        std::ceil(fraction * static_cast<double>(train_indices.size())));

    // proportional quotas, largest remainder
    std::vector<std::pair<std::string, size_t>> quotas;
    std::vector<std::pair<double, std::string>> remainders;
    size_t assigned = 0;
    for (const auto& [label, idxs] : by_class) {
        const double exact = fraction * static_cast<double>(idxs.size());
        const size_t base = static_cast<size_t>(exact);
        quotas.emplace_back(label, base);
        remainders.emplace_back(exact - static_cast<double>(base), label);
        assigned += base;
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (size_t i = 0; assigned < total && i < remainders.size(); ++i, ++assigned) {
        for (auto& [label, q] : quotas)
            if (label == remainders[i].second) ++q;
    }

    std::vector<char> keep(examples.size(), 0);
    for (const auto& [label, quota] : quotas) {
        auto idxs = by_class.at(label);
        std::mt19937_64 rng(io::mix_seed(seed, io::fnv1a64(label)));
        std::shuffle(idxs.begin(), idxs.end(), rng);
        const size_t q = std::min(quota, idxs.size());
        for (size_t i = 0; i < q; ++i) keep[idxs[i]] = 1;
    }

    std::vector<ProbingExample> out;
    for (size_t i = 0; i < examples.size(); ++i)
        if (examples[i].split != "tr" || keep[i]) out.push_back(examples[i]);
    return out;
}

}  // namespace probekit

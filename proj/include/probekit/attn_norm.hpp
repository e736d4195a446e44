#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "probekit/tensor.hpp"
#include "probekit/tokenizer.hpp"

namespace probekit {

struct BetaMap {
    int layer = 0;
    Tensor values;  // [n, n], nonnegative
};

struct DeltaBetaMap {
    int layer = 0;
    Tensor values;          // [n, n] in [0,1] after min-max (constant maps -> all 0)
    int bigram_anchor = 0;  // token position of the first shifted token
};

// rows and columns permuted identically; perm maps output position ->
// source position and must be a bijection
inline BetaMap reorder_map(const BetaMap& map, const std::vector<int>& perm) {
    require_rank(map.values, 2, "reorder_map input");
    const int n = static_cast<int>(map.values.dim(0));
    if (static_cast<int>(perm.size()) != n) throw ShapeError("reorder_map: permutation length mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
            throw ValueError("reorder_map: permutation is not a bijection");
        seen[static_cast<size_t>(p)] = 1;
    }
    BetaMap out;
    out.layer = map.layer;
    out.values = Tensor({n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.values.at(i, j) = map.values.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    return out;
}

inline Tensor min_max_normalize(const Tensor& t) {
    Tensor out = t;
    float lo = std::numeric_limits<float>::infinity();
    float hi = -std::numeric_limits<float>::infinity();
    for (int64_t i = 0; i < t.size(); ++i) {
        lo = std::min(lo, t.at(i));
        hi = std::max(hi, t.at(i));
    }
    if (!(hi > lo)) {  // constant map
        for (int64_t i = 0; i < out.size(); ++i) out.at(i) = 0.0f;
        return out;
    }
    const float inv = 1.0f / (hi - lo);
    for (int64_t i = 0; i < out.size(); ++i) out.at(i) = (out.at(i) - lo) * inv;
    return out;
}

// |reorder(perturbed) - original| before any normalization
inline Tensor delta_beta_raw(const BetaMap& original, const BetaMap& perturbed,
                             const std::vector<int>& perm) {
    if (!original.values.same_shape(perturbed.values))
        throw ShapeError("delta_beta: map dimension mismatch");
    const BetaMap reordered = reorder_map(perturbed, perm);
    Tensor diff = original.values;
    for (int64_t i = 0; i < diff.size(); ++i)
        diff.at(i) = std::abs(reordered.values.at(i) - diff.at(i));
    return diff;
}

inline DeltaBetaMap delta_beta(const BetaMap& original, const BetaMap& perturbed,
                               const std::vector<int>& perm, int bigram_anchor = 0) {
    DeltaBetaMap out;
    out.layer = original.layer;
    out.bigram_anchor = bigram_anchor;
    out.values = min_max_normalize(delta_beta_raw(original, perturbed, perm));
    return out;
}

// Token-position permutation mapping original order -> shifted order, built
// from the shifted tokenization and the swapped word pair. Entry p[i] is the
// shifted-tokenization position of the token that sits at position i in the
// original order.
inline std::vector<int> build_token_permutation(const TokenizedSentence& shifted, int left_word,
                                                int right_word, int n = -1) {
    if (n < 0) n = shifted.n_real;
    std::vector<int> block_a, block_b;  // shifted positions of word left_word / right_word
    for (int i = 0; i < n; ++i) {
        if (shifted.is_special[static_cast<size_t>(i)]) continue;
        const int w = shifted.word_index[static_cast<size_t>(i)];
        if (w == left_word) block_a.push_back(i);
        if (w == right_word) block_b.push_back(i);
    }
    if (block_a.empty() || block_b.empty())
        throw ValueError("token permutation unavailable: swapped words not present in tokenization");

    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(n));
    const int start = block_a.front();
    for (int i = 0; i < start; ++i) perm.push_back(i);
    // in the shifted sentence, word slot left_word holds the text that was
    // originally second, so the original order lists block_b's pieces first
    for (int p : block_b) perm.push_back(p);
    for (int p : block_a) perm.push_back(p);
    for (int i = block_b.back() + 1; i < n; ++i) perm.push_back(i);
    return perm;
}

struct CenteredAverageMap {
    Tensor mean;    // [(2W+1), (2W+1)]
    Tensor counts;  // samples per cell (missing cells contribute nothing)
    int radius = 0;
};

// Extracts the (2W+1)^2 window centered at each map's anchor and averages
// cell-wise, ignoring out-of-range cells.
inline CenteredAverageMap center_and_average(const std::vector<DeltaBetaMap>& maps, int radius) {
    if (maps.empty()) throw ValueError("center_and_average: empty map list");
    const int side = 2 * radius + 1;
    CenteredAverageMap out;
    out.radius = radius;
    out.mean = Tensor({side, side});
    out.counts = Tensor({side, side});
    std::vector<double> acc(static_cast<size_t>(side) * side, 0.0);

    for (const auto& m : maps) {
        const int n = static_cast<int>(m.values.dim(0));
        for (int r = 0; r < side; ++r) {
            const int i = m.bigram_anchor - radius + r;
            if (i < 0 || i >= n) continue;
            for (int c = 0; c < side; ++c) {
                const int j = m.bigram_anchor - radius + c;
                if (j < 0 || j >= n) continue;
                acc[static_cast<size_t>(r) * side + c] += m.values.at(i, j);
                out.counts.at(r, c) += 1.0f;
            }
        }
    }
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            const float cnt = out.counts.at(r, c);
            out.mean.at(r, c) =
                cnt > 0 ? static_cast<float>(acc[static_cast<size_t>(r) * side + c] / cnt) : 0.0f;
        }
    return out;
}

// Fig.-style cumulative view: entry l is the aggregate of the per-layer
// averaged maps for layers 0..l, as a running mean (default) or running sum.
inline std::vector<CenteredAverageMap> cumulative_maps(const std::vector<CenteredAverageMap>& per_layer,
                                                       bool running_sum = false) {
    std::vector<CenteredAverageMap> out;
    out.reserve(per_layer.size());
    Tensor acc;
    for (size_t l = 0; l < per_layer.size(); ++l) {
        if (l == 0)
            acc = per_layer[0].mean;
        else
            acc = add(acc, per_layer[l].mean);
        CenteredAverageMap c = per_layer[l];
        c.mean = running_sum ? acc : scale(acc, 1.0f / static_cast<float>(l + 1));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace probekit

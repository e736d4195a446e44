#pragma once

#include <string>
#include <vector>

#include "probekit/encoder.hpp"
#include "probekit/tokenizer.hpp"

namespace probekit {

struct PooledRepresentation {
    int layer = 0;
    Tensor vector;         // [d]
    std::string strategy;  // "mean" or "cls"
};

// unweighted average over tokens that are neither [PAD] nor [CLS];
// [SEP] is included
inline PooledRepresentation mean_pool(const LayerTrace& trace, const TokenizedSentence& sentence,
                                      int layer) {
    if (layer < 0 || layer >= static_cast<int>(trace.hidden_states.size()))
        throw ValueError("mean_pool: layer " + std::to_string(layer) + " not in trace");
    const Tensor& h = trace.hidden_states[static_cast<size_t>(layer)];
    const int64_t d = h.dim(1);

    std::vector<double> acc(static_cast<size_t>(d), 0.0);
    int count = 0;
    for (int i = 0; i < sentence.size() && i < h.dim(0); ++i) {
        if (sentence.is_pad(i) || sentence.tokens[static_cast<size_t>(i)] == "[CLS]") continue;
        const float* row = h.data() + static_cast<int64_t>(i) * d;
        for (int64_t r = 0; r < d; ++r) acc[static_cast<size_t>(r)] += row[r];
        ++count;
    }
    if (count == 0) throw ValueError("mean_pool: no pooling-eligible tokens");

    PooledRepresentation out;
    out.layer = layer;
    out.strategy = "mean";
    out.vector = Tensor({d});
    for (int64_t r = 0; r < d; ++r)
        out.vector.at(r) = static_cast<float>(acc[static_cast<size_t>(r)] / count);
    return out;
}

inline PooledRepresentation cls_pool(const LayerTrace& trace, int layer) {
    if (layer < 0 || layer >= static_cast<int>(trace.hidden_states.size()))
        throw ValueError("cls_pool: layer " + std::to_string(layer) + " not in trace");
    const Tensor& h = trace.hidden_states[static_cast<size_t>(layer)];
    PooledRepresentation out;
    out.layer = layer;
    out.strategy = "cls";
    out.vector = Tensor({h.dim(1)});
    for (int64_t r = 0; r < h.dim(1); ++r) out.vector.at(r) = h.at(0, r);
    return out;
}

inline PooledRepresentation pool(const LayerTrace& trace, const TokenizedSentence& sentence,
                                 int layer, const std::string& strategy) {
    if (strategy == "mean") return mean_pool(trace, sentence, layer);
    if (strategy == "cls") return cls_pool(trace, layer);
    throw ValueError("unknown pooling strategy: " + strategy);
}

}  // namespace probekit

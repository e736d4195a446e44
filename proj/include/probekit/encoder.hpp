#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "probekit/tensor.hpp"
#include "probekit/tokenizer.hpp"
#include "probekit/weights.hpp"

namespace probekit {

// Per-sentence record of the instrumented forward pass.
// hidden_states[0] is the embedding output, hidden_states[l] the output of
// encoder layer l. beta_maps / attention_weights are filled on demand and
// cover non-pad positions only (pad rows and columns are dropped).
struct LayerTrace {
    std::vector<Tensor> hidden_states;      // (L+1) x [n, d]
    std::vector<Tensor> beta_maps;          // L x [n_real, n_real]
    std::vector<Tensor> attention_weights;  // L x [H, n, n]

    int layer_count() const { return static_cast<int>(hidden_states.size()) - 1; }
};

struct AttentionAnalysis {
    Tensor alpha;          // [H, n, n] attention weights
    Tensor beta;           // [n_real, n_real] norms of summed head contributions
    Tensor contributions;  // [n_real, n_real, d] when requested, else empty
    Tensor context;        // [n, d] concatenated per-head weighted values
};

namespace detail {

// rows [n, d] split per head: head h covers columns [h*hs, (h+1)*hs)
inline void attention_scores_softmax(const Tensor& q, const Tensor& k, int num_heads,
                                     int n_real, Tensor& alpha) {
    const int64_t n = q.dim(0);
    const int64_t hs = q.dim(1) / num_heads;
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(hs));
    for (int h = 0; h < num_heads; ++h) {
        Tensor scores({n, n});
        for (int64_t i = 0; i < n; ++i) {
            const float* qi = q.data() + i * q.dim(1) + h * hs;
            for (int64_t j = 0; j < n; ++j) {
                if (j >= n_real) {
                    scores.at(i, j) = -std::numeric_limits<float>::infinity();
                    continue;
                }
                const float* kj = k.data() + j * k.dim(1) + h * hs;
                double acc = 0.0;
                for (int64_t p = 0; p < hs; ++p) acc += static_cast<double>(qi[p]) * kj[p];
                scores.at(i, j) = static_cast<float>(acc * inv_sqrt);
            }
        }
        const Tensor sm = softmax_rows(scores);
        for (int64_t i = 0; i < n; ++i)
            for (int64_t j = 0; j < n; ++j) alpha.at(h, i, j) = sm.at(i, j);
    }
}

}  // namespace detail

// Runs the self-attention block of one layer on its input (post previous
// layer-norm), producing attention weights, the context rows, and the
// per-token-pair attention-norms beta(i,j) = ||sum_h alpha_h(i,j) f_h(x_j)||
// where f_h(x) = (x W_V^T + b_V)_h W_O(h-slice)^T. Setting keep_contributions
// materializes the [n, n, d] summed contribution vectors for analysis; the
// forward pass itself reduces them to norms immediately.
inline AttentionAnalysis attention_analysis(const Tensor& x, const LayerWeights& lw, int num_heads,
                                            int n_real, bool want_beta,
                                            bool keep_contributions = false) {
    require_rank(x, 2, "attention input");
    const int64_t n = x.dim(0), d = x.dim(1);
    const int64_t hs = d / num_heads;
    if (n_real <= 0 || n_real > n) throw ShapeError("attention: bad n_real");

    const Tensor q = linear(x, lw.q_w, lw.q_b);
    const Tensor k = linear(x, lw.k_w, lw.k_b);
    const Tensor v = linear(x, lw.v_w, lw.v_b);

    AttentionAnalysis out;
    out.alpha = Tensor({num_heads, n, n});
    detail::attention_scores_softmax(q, k, num_heads, n_real, out.alpha);

    // context rows: concat_h sum_j alpha_h(i,j) v_h(j)
    out.context = Tensor({n, d});
    for (int h = 0; h < num_heads; ++h) {
        for (int64_t i = 0; i < n; ++i) {
            float* ctx = out.context.data() + i * d + h * hs;
            std::vector<double> acc(static_cast<size_t>(hs), 0.0);
            for (int64_t j = 0; j < n_real; ++j) {
                const double a = out.alpha.at(h, i, j);
                const float* vj = v.data() + j * d + h * hs;
                for (int64_t p = 0; p < hs; ++p) acc[static_cast<size_t>(p)] += a * vj[p];
            }
            for (int64_t p = 0; p < hs; ++p) ctx[p] = static_cast<float>(acc[static_cast<size_t>(p)]);
        }
    }

    if (want_beta || keep_contributions) {
        // f_h(x_j), laid out [H, n_real, d]: value slice times the head slice
        // of the output projection (columns h*hs..(h+1)*hs of attn_out_w)
        Tensor f({num_heads, n_real, d});
        for (int h = 0; h < num_heads; ++h) {
            for (int64_t j = 0; j < n_real; ++j) {
                const float* vj = v.data() + j * d + h * hs;
                float* fj = f.data() + (static_cast<int64_t>(h) * n_real + j) * d;
                for (int64_t r = 0; r < d; ++r) {
                    const float* wrow = lw.attn_out_w.data() + r * d + h * hs;
                    double acc = 0.0;
                    for (int64_t p = 0; p < hs; ++p) acc += static_cast<double>(vj[p]) * wrow[p];
                    fj[r] = static_cast<float>(acc);
                }
            }
        }

        out.beta = Tensor({n_real, n_real});
        if (keep_contributions) out.contributions = Tensor({n_real, n_real, d});
        std::vector<double> acc(static_cast<size_t>(d));
        for (int64_t i = 0; i < n_real; ++i) {
            for (int64_t j = 0; j < n_real; ++j) {
                std::fill(acc.begin(), acc.end(), 0.0);
                for (int h = 0; h < num_heads; ++h) {
                    const double a = out.alpha.at(h, i, j);
                    const float* fj = f.data() + (static_cast<int64_t>(h) * n_real + j) * d;
                    for (int64_t r = 0; r < d; ++r) acc[static_cast<size_t>(r)] += a * fj[r];
                }
                double norm = 0.0;
                for (int64_t r = 0; r < d; ++r) norm += acc[static_cast<size_t>(r)] * acc[static_cast<size_t>(r)];
                out.beta.at(i, j) = static_cast<float>(std::sqrt(norm));
                if (keep_contributions)
                    for (int64_t r = 0; r < d; ++r)
                        out.contributions.at(i, j, r) = static_cast<float>(acc[static_cast<size_t>(r)]);
            }
        }
    }
    return out;
}

// beta map of one layer given its input rows (spec'd entry point; the
// instrumented forward uses the same routine)
inline Tensor attention_norms(const Tensor& layer_input, const LayerWeights& lw, int num_heads,
                              int n_real = -1) {
    if (n_real < 0) n_real = static_cast<int>(layer_input.dim(0));
    return attention_analysis(layer_input, lw, num_heads, n_real, /*want_beta=*/true).beta;
}

class Encoder {
public:
    explicit Encoder(const EncoderWeights& weights) : w_(weights) { w_.config.validate(); }

    const EncoderConfig& config() const { return w_.config; }

    // token + position + segment(0) lookup, then layer-norm
    Tensor embed(const TokenizedSentence& sentence) const {
        const int64_t n = sentence.size();
        const int64_t d = w_.config.hidden_size;
        if (n > w_.config.max_position)
            throw ValueError("sentence length " + std::to_string(n) +
                             " exceeds max position embeddings");
        Tensor x({n, d});
        for (int64_t i = 0; i < n; ++i) {
            const int id = sentence.ids[static_cast<size_t>(i)];
            if (id < 0 || id >= w_.config.vocab_size)
                throw ValueError("token id " + std::to_string(id) + " out of range at position " +
                                 std::to_string(i));
            const float* we = w_.word_embeddings.data() + static_cast<int64_t>(id) * d;
            const float* pe = w_.position_embeddings.data() + i * d;
            const float* te = w_.token_type_embeddings.data();  // segment 0
            float* out = x.data() + i * d;
            for (int64_t r = 0; r < d; ++r) out[r] = we[r] + pe[r] + te[r];
        }
        return layer_norm(x, w_.emb_ln_gamma, w_.emb_ln_beta, w_.config.layer_norm_eps);
    }

    // post-layer-norm transformer encoder; records every layer's output and,
    // when asked, attention weights and beta maps
    LayerTrace forward(const TokenizedSentence& sentence, bool with_attention_internals = false) const {
        const int n_real = sentence.n_real;
        const float eps = w_.config.layer_norm_eps;

        LayerTrace trace;
        trace.hidden_states.reserve(w_.layers.size() + 1);
        trace.hidden_states.push_back(embed(sentence));

        for (const LayerWeights& lw : w_.layers) {
            const Tensor& x = trace.hidden_states.back();
            AttentionAnalysis attn =
                attention_analysis(x, lw, w_.config.num_heads, n_real, with_attention_internals);
            const Tensor attn_out = linear(attn.context, lw.attn_out_w, lw.attn_out_b);
            const Tensor h1 = layer_norm(add(x, attn_out), lw.attn_ln_gamma, lw.attn_ln_beta, eps);
            const Tensor ffn = linear(gelu(linear(h1, lw.ffn_in_w, lw.ffn_in_b)), lw.ffn_out_w,
                                      lw.ffn_out_b);
            trace.hidden_states.push_back(
                layer_norm(add(h1, ffn), lw.out_ln_gamma, lw.out_ln_beta, eps));
            if (with_attention_internals) {
                trace.attention_weights.push_back(std::move(attn.alpha));
                trace.beta_maps.push_back(std::move(attn.beta));
            }
        }
        return trace;
    }

    const EncoderWeights& weights() const { return w_; }

private:
    const EncoderWeights& w_;
};

}  // namespace probekit

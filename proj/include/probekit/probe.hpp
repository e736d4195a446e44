#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "probekit/io_common.hpp"
#include "probekit/pooling.hpp"
#include "probekit/tensor.hpp"

namespace probekit {

enum class ProbeKind { classifier, regressor };

// Diagnostic probe over pooled representations: either linear (w2/b2 only)
// or one sigmoid hidden layer. Regressors have class_count == 1 and operate
// on standardized labels internally.
struct ProbeModel {
    ProbeKind kind = ProbeKind::classifier;
    int trained_on_layer = -1;
    std::string pooling = "mean";
    int input_dim = 0;
    int hidden_dim = 0;  // 0 = linear
    int class_count = 0;
    std::vector<std::string> class_names;

    Tensor w1, b1;  // [h,d], [h] (hidden layer, optional)
    Tensor w2, b2;  // [C,h or d], [C]

    // regressor label statistics (training-split)
    double label_mean = 0.0, label_std = 1.0;
    double label_min = 0.0, label_max = 0.0;

    bool trained() const { return input_dim > 0 && w2.size() > 0; }

    std::vector<double> logits(const Tensor& h) const {
        check_input(h);
        std::vector<double> a;
        const float* in = h.data();
        std::vector<double> hidden;
        if (hidden_dim > 0) {
            hidden.resize(static_cast<size_t>(hidden_dim));
            for (int r = 0; r < hidden_dim; ++r) {
                const float* wrow = w1.data() + static_cast<int64_t>(r) * input_dim;
                double acc = b1.at(r);
                for (int k = 0; k < input_dim; ++k) acc += static_cast<double>(wrow[k]) * in[k];
                hidden[static_cast<size_t>(r)] = 1.0 / (1.0 + std::exp(-acc));
            }
        }
        const int in_dim = hidden_dim > 0 ? hidden_dim : input_dim;
        std::vector<double> out(static_cast<size_t>(class_count));
        for (int c = 0; c < class_count; ++c) {
            const float* wrow = w2.data() + static_cast<int64_t>(c) * in_dim;
            double acc = b2.at(c);
            if (hidden_dim > 0)
                for (int k = 0; k < in_dim; ++k) acc += static_cast<double>(wrow[k]) * hidden[static_cast<size_t>(k)];
            else
                for (int k = 0; k < in_dim; ++k) acc += static_cast<double>(wrow[k]) * in[k];
            out[static_cast<size_t>(c)] = acc;
        }
        return out;
    }

    std::vector<double> probabilities(const Tensor& h) const {
        auto o = logits(h);
        if (kind == ProbeKind::regressor) return o;
        const double mx = *std::max_element(o.begin(), o.end());
        double sum = 0.0;
        for (double& x : o) {
            x = std::exp(x - mx);
            sum += x;
        }
        for (double& x : o) x /= sum;
        return o;
    }

    // de-standardized regression estimate
    double predict_value(const Tensor& h) const {
        if (kind != ProbeKind::regressor) throw ValueError("predict_value: not a regressor");
        return logits(h)[0] * label_std + label_mean;
    }

    int predict_class(const Tensor& h) const {
        const auto p = logits(h);
        return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
    }

    // analytic d y_target / d h. For classifiers y is the post-softmax
    // probability unless wrt_logit; for regressors y is the de-standardized
    // estimate.
    Tensor gradient(const Tensor& h, int target, bool wrt_logit = false) const {
        check_input(h);
        if (target < 0 || target >= class_count) throw ValueError("gradient: bad target class");

        // upstream sensitivity per logit
        std::vector<double> s(static_cast<size_t>(class_count), 0.0);
        if (kind == ProbeKind::regressor) {
            s[0] = label_std;
        } else if (wrt_logit) {
            s[static_cast<size_t>(target)] = 1.0;
        } else {
            const auto y = probabilities(h);
            const double yc = y[static_cast<size_t>(target)];
            for (int j = 0; j < class_count; ++j)
                s[static_cast<size_t>(j)] = yc * ((j == target ? 1.0 : 0.0) - y[static_cast<size_t>(j)]);
        }

        Tensor g({input_dim});
        if (hidden_dim == 0) {
            for (int k = 0; k < input_dim; ++k) {
                double acc = 0.0;
                for (int c = 0; c < class_count; ++c)
                    acc += s[static_cast<size_t>(c)] * w2.at(c, k);
                g.at(k) = static_cast<float>(acc);
            }
            return g;
        }

        // through the sigmoid hidden layer
        std::vector<double> a(static_cast<size_t>(hidden_dim));
        const float* in = h.data();
        for (int r = 0; r < hidden_dim; ++r) {
            const float* wrow = w1.data() + static_cast<int64_t>(r) * input_dim;
            double acc = b1.at(r);
            for (int k = 0; k < input_dim; ++k) acc += static_cast<double>(wrow[k]) * in[k];
            a[static_cast<size_t>(r)] = 1.0 / (1.0 + std::exp(-acc));
        }
        std::vector<double> da(static_cast<size_t>(hidden_dim), 0.0);
        for (int r = 0; r < hidden_dim; ++r) {
            double acc = 0.0;
            for (int c = 0; c < class_count; ++c) acc += s[static_cast<size_t>(c)] * w2.at(c, r);
            const double ar = a[static_cast<size_t>(r)];
            da[static_cast<size_t>(r)] = acc * ar * (1.0 - ar);
        }
        for (int k = 0; k < input_dim; ++k) {
            double acc = 0.0;
            for (int r = 0; r < hidden_dim; ++r) acc += da[static_cast<size_t>(r)] * w1.at(r, k);
            g.at(k) = static_cast<float>(acc);
        }
        return g;
    }

private:
    void check_input(const Tensor& h) const {
        if (!trained()) throw ValueError("probe is untrained");
        if (h.rank() != 1 || h.dim(0) != input_dim)
            throw ShapeError("probe input must be [" + std::to_string(input_dim) + "], got " +
                             shape_string(h));
    }
};

// Eq.-style per-dimension sensitivity of the target output to the pooled
// input, and its mean absolute value
inline Tensor dimension_sensitivity(const ProbeModel& model, const Tensor& h, int target,
                                    bool wrt_logit = false) {
    return model.gradient(h, target, wrt_logit);
}

inline double mean_abs_sensitivity(const ProbeModel& model, const Tensor& h, int target,
                                   bool wrt_logit = false) {
    const Tensor g = model.gradient(h, target, wrt_logit);
    double acc = 0.0;
    for (int64_t k = 0; k < g.size(); ++k) acc += std::abs(static_cast<double>(g.at(k)));
    return acc / static_cast<double>(g.size());
}

struct AttributionResult {
    int layer = -1;
    Tensor gradient;                        // [d], d y_c / d h_pooled
    std::vector<double> token_scores;       // signed, per token (incl. specials)
    std::vector<double> normalized_abs;     // nonnegative, sums to 1; pads get 0
    int correct_class = -1;
};

// saliency score of every token: gradient of the target probability w.r.t.
// the pooled vector, dotted with each token representation
inline AttributionResult saliency_scores(const ProbeModel& model, const LayerTrace& trace,
                                         const TokenizedSentence& sentence, int layer, int target,
                                         bool wrt_logit = false) {
    if (!model.trained()) throw ValueError("saliency_scores: probe is untrained");
    if (layer != model.trained_on_layer)
        throw ValueError("saliency_scores: probe was trained on layer " +
                         std::to_string(model.trained_on_layer) + ", asked for layer " +
                         std::to_string(layer));

    const PooledRepresentation pooled = pool(trace, sentence, layer, model.pooling);
    AttributionResult res;
    res.layer = layer;
    res.correct_class = target;
    res.gradient = model.gradient(pooled.vector, target, wrt_logit);

    const Tensor& h = trace.hidden_states[static_cast<size_t>(layer)];
    const int n = static_cast<int>(h.dim(0));
    res.token_scores.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        res.token_scores[static_cast<size_t>(i)] = dot(std::span(res.gradient.values()), h.row(i));

    res.normalized_abs.assign(static_cast<size_t>(n), 0.0);
    double total = 0.0;
    int eligible = 0;
    for (int i = 0; i < n; ++i) {
        if (sentence.is_pad(i)) continue;
        total += std::abs(res.token_scores[static_cast<size_t>(i)]);
        ++eligible;
    }
    for (int i = 0; i < n; ++i) {
        if (sentence.is_pad(i)) continue;
        res.normalized_abs[static_cast<size_t>(i)] =
            total > 0.0 ? std::abs(res.token_scores[static_cast<size_t>(i)]) / total
                        : 1.0 / eligible;
    }
    return res;
}

struct TrainOptions {
    std::vector<int> hidden_sizes = {50, 100, 200};
    std::vector<double> dropouts = {0.0, 0.1};
    bool linear = false;  // skip the hidden layer and the grid
    double learning_rate = 1e-3;
    int batch_size = 64;
    int max_epochs = 10;
    int patience = 2;
    uint64_t seed = 0;
};

struct EvalMetrics {
    double accuracy = 0.0;
    double rmse = 0.0;
    int count = 0;
};

namespace detail {

// Adam-trained MLP/linear head; all math in double, converted to f32 at the
// end so checkpoints and attribution run from the same numbers
class ProbeTrainer {
public:
    ProbeTrainer(ProbeKind kind, int input_dim, int hidden_dim, int class_count, double dropout,
                 double lr, uint64_t seed)
        : kind_(kind), d_(input_dim), h_(hidden_dim), c_(class_count), dropout_(dropout), lr_(lr),
          rng_(seed) {
        const int in2 = h_ > 0 ? h_ : d_;
        if (h_ > 0) {
            w1_.assign(static_cast<size_t>(h_) * d_, 0.0);
            b1_.assign(static_cast<size_t>(h_), 0.0);
            glorot(w1_, d_, h_);
        }
        w2_.assign(static_cast<size_t>(c_) * in2, 0.0);
        b2_.assign(static_cast<size_t>(c_), 0.0);
        glorot(w2_, in2, c_);
        init_adam();
    }

    // one epoch over shuffled minibatches; targets are class ids or
    // standardized regression targets
    void train_epoch(const Tensor& x, const std::vector<double>& targets) {
        const int n = static_cast<int>(x.dim(0));
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        std::shuffle(order.begin(), order.end(), rng_);

        const int batch = batch_size_;
        for (int start = 0; start < n; start += batch) {
            const int bsz = std::min(batch, n - start);
            std::vector<double> gw1(w1_.size(), 0.0), gb1(b1_.size(), 0.0);
            std::vector<double> gw2(w2_.size(), 0.0), gb2(b2_.size(), 0.0);

            for (int bi = 0; bi < bsz; ++bi) {
                const int idx = order[static_cast<size_t>(start + bi)];
                const float* in = x.data() + static_cast<int64_t>(idx) * d_;

                std::vector<double> a, mask;
                if (h_ > 0) {
                    a.resize(static_cast<size_t>(h_));
                    mask.assign(static_cast<size_t>(h_), 1.0);
                    for (int r = 0; r < h_; ++r) {
                        double acc = b1_[static_cast<size_t>(r)];
                        const double* wrow = w1_.data() + static_cast<size_t>(r) * d_;
                        for (int k = 0; k < d_; ++k) acc += wrow[k] * in[k];
                        a[static_cast<size_t>(r)] = 1.0 / (1.0 + std::exp(-acc));
                    }
                    if (dropout_ > 0.0) {
                        std::uniform_real_distribution<double> u(0.0, 1.0);
                        for (int r = 0; r < h_; ++r)
                            mask[static_cast<size_t>(r)] =
                                u(rng_) < dropout_ ? 0.0 : 1.0 / (1.0 - dropout_);
                        for (int r = 0; r < h_; ++r) a[static_cast<size_t>(r)] *= mask[static_cast<size_t>(r)];
                    }
                }

                const int in2 = h_ > 0 ? h_ : d_;
                std::vector<double> o(static_cast<size_t>(c_));
                for (int c = 0; c < c_; ++c) {
                    double acc = b2_[static_cast<size_t>(c)];
                    const double* wrow = w2_.data() + static_cast<size_t>(c) * in2;
                    if (h_ > 0)
                        for (int k = 0; k < in2; ++k) acc += wrow[k] * a[static_cast<size_t>(k)];
                    else
                        for (int k = 0; k < in2; ++k) acc += wrow[k] * in[k];
                    o[static_cast<size_t>(c)] = acc;
                }

                // d loss / d logits
                std::vector<double> dout(static_cast<size_t>(c_));
                if (kind_ == ProbeKind::classifier) {
                    const double mx = *std::max_element(o.begin(), o.end());
                    double sum = 0.0;
                    for (double& v : o) {
                        v = std::exp(v - mx);
                        sum += v;
                    }
                    const int t = static_cast<int>(targets[static_cast<size_t>(idx)]);
                    for (int c = 0; c < c_; ++c)
                        dout[static_cast<size_t>(c)] = o[static_cast<size_t>(c)] / sum - (c == t ? 1.0 : 0.0);
                } else {
                    dout[0] = 2.0 * (o[0] - targets[static_cast<size_t>(idx)]);
                }

                std::vector<double> dhidden(static_cast<size_t>(h_ > 0 ? h_ : 0), 0.0);
                for (int c = 0; c < c_; ++c) {
                    const double dc = dout[static_cast<size_t>(c)];
                    double* gw = gw2.data() + static_cast<size_t>(c) * in2;
                    if (h_ > 0) {
                        const double* wrow = w2_.data() + static_cast<size_t>(c) * in2;
                        for (int k = 0; k < in2; ++k) {
                            gw[k] += dc * a[static_cast<size_t>(k)];
                            dhidden[static_cast<size_t>(k)] += dc * wrow[k];
                        }
                    } else {
                        for (int k = 0; k < in2; ++k) gw[k] += dc * in[k];
                    }
                    gb2[static_cast<size_t>(c)] += dc;
                }
                if (h_ > 0) {
                    for (int r = 0; r < h_; ++r) {
                        const double ar = a[static_cast<size_t>(r)];
                        const double m = mask[static_cast<size_t>(r)];
                        // a was already masked; sigmoid' on the pre-mask value
                        const double pre = m > 0.0 ? ar / m : 0.0;
                        const double dz = dhidden[static_cast<size_t>(r)] * m * pre * (1.0 - pre);
                        double* gw = gw1.data() + static_cast<size_t>(r) * d_;
                        for (int k = 0; k < d_; ++k) gw[k] += dz * in[k];
                        gb1[static_cast<size_t>(r)] += dz;
                    }
                }
            }

            const double inv = 1.0 / bsz;
            for (auto* g : {&gw1, &gb1, &gw2, &gb2})
                for (double& v : *g) v *= inv;
            ++step_;
            adam_update(w1_, gw1, mw1_, vw1_);
            adam_update(b1_, gb1, mb1_, vb1_);
            adam_update(w2_, gw2, mw2_, vw2_);
            adam_update(b2_, gb2, mb2_, vb2_);
        }
    }

    ProbeModel snapshot() const {
        ProbeModel m;
        m.kind = kind_;
        m.input_dim = d_;
        m.hidden_dim = h_;
        m.class_count = c_;
        const int in2 = h_ > 0 ? h_ : d_;
        if (h_ > 0) {
            m.w1 = to_tensor(w1_, {h_, d_});
            m.b1 = to_tensor(b1_, {h_});
        }
        m.w2 = to_tensor(w2_, {c_, in2});
        m.b2 = to_tensor(b2_, {c_});
        return m;
    }

    int batch_size_ = 64;

private:
    static Tensor to_tensor(const std::vector<double>& v, std::vector<int64_t> shape) {
        std::vector<float> f(v.size());
        for (size_t i = 0; i < v.size(); ++i) f[i] = static_cast<float>(v[i]);
        return Tensor(std::move(shape), std::move(f));
    }

    void glorot(std::vector<double>& w, int fan_in, int fan_out) {
        const double bound = std::sqrt(6.0 / (fan_in + fan_out));
        std::uniform_real_distribution<double> u(-bound, bound);
        for (double& v : w) v = u(rng_);
    }

    void init_adam() {
        mw1_.assign(w1_.size(), 0.0);
        vw1_.assign(w1_.size(), 0.0);
        mb1_.assign(b1_.size(), 0.0);
        vb1_.assign(b1_.size(), 0.0);
        mw2_.assign(w2_.size(), 0.0);
        vw2_.assign(w2_.size(), 0.0);
        mb2_.assign(b2_.size(), 0.0);
        vb2_.assign(b2_.size(), 0.0);
    }

    void adam_update(std::vector<double>& w, const std::vector<double>& g, std::vector<double>& m,
                     std::vector<double>& v) {
        constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
        const double bc1 = 1.0 - std::pow(beta1, step_);
        const double bc2 = 1.0 - std::pow(beta2, step_);
        for (size_t i = 0; i < w.size(); ++i) {
            m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
            v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
            w[i] -= lr_ * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + eps);
        }
    }

    ProbeKind kind_;
    int d_, h_, c_;
    double dropout_, lr_;
    std::mt19937_64 rng_;
    int step_ = 0;
    std::vector<double> w1_, b1_, w2_, b2_;
    std::vector<double> mw1_, vw1_, mb1_, vb1_, mw2_, vw2_, mb2_, vb2_;
};

}  // namespace detail

struct LabeledFeatures {
    Tensor x;                         // [N, d]
    std::vector<std::string> labels;  // raw label strings
};

struct TrainedProbe {
    ProbeModel model;
    double val_metric = 0.0;  // accuracy (classifier) or RMSE (regressor)
    int best_hidden = 0;
    double best_dropout = 0.0;
};

inline EvalMetrics evaluate(const ProbeModel& model, const LabeledFeatures& data);

// Trains with the Adam rule over the hyperparameter grid, early-stops on the
// validation metric, and returns the best-validation model. Deterministic
// under a fixed seed.
inline TrainedProbe train_probe(const LabeledFeatures& train, const LabeledFeatures& val,
                                ProbeKind kind, const TrainOptions& opts) {
    if (train.x.rank() != 2 || train.x.dim(0) == 0) throw ValueError("train_probe: empty training split");
    if (val.x.rank() != 2 || val.x.dim(0) == 0) throw ValueError("train_probe: empty validation split");
    const int d = static_cast<int>(train.x.dim(1));
    const int n = static_cast<int>(train.x.dim(0));

    // label space
    std::vector<std::string> class_names;
    std::vector<double> targets(static_cast<size_t>(n));
    double label_mean = 0.0, label_std = 1.0, label_min = 0.0, label_max = 0.0;
    int class_count = 1;
    if (kind == ProbeKind::classifier) {
        std::map<std::string, int> seen;
        for (const auto& l : train.labels) seen.emplace(l, 0);
        if (seen.size() < 2) throw ValueError("train_probe: degenerate single-class training data");
        int next = 0;
        for (auto& [name, id] : seen) {
            id = next++;
            class_names.push_back(name);
        }
        class_count = next;
        for (int i = 0; i < n; ++i) targets[static_cast<size_t>(i)] = seen.at(train.labels[static_cast<size_t>(i)]);
    } else {
        std::vector<double> raw(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) raw[static_cast<size_t>(i)] = std::stod(train.labels[static_cast<size_t>(i)]);
        label_min = *std::min_element(raw.begin(), raw.end());
        label_max = *std::max_element(raw.begin(), raw.end());
        for (double v : raw) label_mean += v;
        label_mean /= n;
        double var = 0.0;
        for (double v : raw) var += (v - label_mean) * (v - label_mean);
        label_std = std::sqrt(var / n);
        if (label_std == 0.0) label_std = 1.0;
        for (int i = 0; i < n; ++i) targets[static_cast<size_t>(i)] = (raw[static_cast<size_t>(i)] - label_mean) / label_std;
    }

    auto finalize = [&](ProbeModel m) {
        m.kind = kind;
        m.class_names = class_names;
        m.class_count = class_count;
        m.label_mean = label_mean;
        m.label_std = label_std;
        m.label_min = label_min;
        m.label_max = label_max;
        return m;
    };

    std::vector<std::pair<int, double>> grid;
    if (opts.linear) {
        grid.emplace_back(0, 0.0);
    } else {
        for (int h : opts.hidden_sizes)
            for (double p : opts.dropouts) grid.emplace_back(h, p);
    }

    std::optional<TrainedProbe> best;
    uint64_t config_index = 0;
    for (auto [hidden, dropout] : grid) {
        detail::ProbeTrainer trainer(kind, d, hidden, class_count, dropout, opts.learning_rate,
                                     io::mix_seed(opts.seed, config_index));
        trainer.batch_size_ = opts.batch_size;
        ++config_index;

        ProbeModel best_epoch_model;
        double best_epoch_metric = 0.0;
        bool have_best = false;
        int since_improved = 0;
        for (int epoch = 0; epoch < opts.max_epochs; ++epoch) {
            trainer.train_epoch(train.x, targets);
            ProbeModel m = finalize(trainer.snapshot());
            const EvalMetrics em = evaluate(m, val);
            const double metric = kind == ProbeKind::classifier ? em.accuracy : em.rmse;
            const bool better = !have_best || (kind == ProbeKind::classifier ? metric > best_epoch_metric
                                                                             : metric < best_epoch_metric);
            if (better) {
                best_epoch_metric = metric;
                best_epoch_model = std::move(m);
                have_best = true;
                since_improved = 0;
            } else if (++since_improved >= opts.patience) {
                break;
            }
        }

        const bool config_better =
            !best || (kind == ProbeKind::classifier ? best_epoch_metric > best->val_metric
                                                    : best_epoch_metric < best->val_metric);
        if (config_better) {
            best = TrainedProbe{std::move(best_epoch_model), best_epoch_metric, hidden, dropout};
        }
    }
    return *best;
}

// classifier: accuracy; regressor: RMSE of the de-standardized estimate plus
// accuracy after rounding to the nearest integer and clipping to the label
// range seen in training
inline EvalMetrics evaluate(const ProbeModel& model, const LabeledFeatures& data) {
    const int n = static_cast<int>(data.x.dim(0));
    EvalMetrics m;
    m.count = n;
    if (n == 0) return m;

    int correct = 0;
    double se = 0.0;
    for (int i = 0; i < n; ++i) {
        Tensor h({data.x.dim(1)});
        for (int64_t k = 0; k < h.size(); ++k) h.at(k) = data.x.at(i, k);
        if (model.kind == ProbeKind::classifier) {
            const int pred = model.predict_class(h);
            const auto& gold = data.labels[static_cast<size_t>(i)];
            if (pred < static_cast<int>(model.class_names.size()) &&
                model.class_names[static_cast<size_t>(pred)] == gold)
                ++correct;
        } else {
            const double est = model.predict_value(h);
            const double gold = std::stod(data.labels[static_cast<size_t>(i)]);
            se += (est - gold) * (est - gold);
            double rounded = std::round(est);
            rounded = std::min(std::max(rounded, model.label_min), model.label_max);
            if (rounded == std::round(gold)) ++correct;
        }
    }
    m.accuracy = static_cast<double>(correct) / n;
    m.rmse = std::sqrt(se / n);
    return m;
}

inline constexpr char kProbeMagic[7] = {'P', 'K', 'P', 'R', 'O', 'B', 'E'};
inline constexpr uint8_t kProbeVersion = 1;

inline void save_probe(const std::string& path, const ProbeModel& m,
                       nlohmann::json extra = nlohmann::json::object()) {
    nlohmann::json manifest = {
        {"kind", m.kind == ProbeKind::classifier ? "classifier" : "regressor"},
        {"layer", m.trained_on_layer},
        {"pooling", m.pooling},
        {"input_dim", m.input_dim},
        {"hidden_dim", m.hidden_dim},
        {"class_count", m.class_count},
        {"class_names", m.class_names},
        {"label_mean", m.label_mean},
        {"label_std", m.label_std},
        {"label_min", m.label_min},
        {"label_max", m.label_max},
    };
    manifest.update(extra);
    std::map<std::string, Tensor> tensors;
    if (m.hidden_dim > 0) {
        tensors.emplace("w1", m.w1);
        tensors.emplace("b1", m.b1);
    }
    tensors.emplace("w2", m.w2);
    tensors.emplace("b2", m.b2);
    io::write_file(path, io::serialize_container(kProbeMagic, kProbeVersion, std::move(manifest),
                                                 tensors));
}

inline ProbeModel load_probe(const std::string& path) {
    const auto buf = io::read_file(path);
    io::Container c = io::parse_container(buf, kProbeMagic, kProbeVersion, path);
    ProbeModel m;
    m.kind = c.manifest.at("kind").get<std::string>() == "regressor" ? ProbeKind::regressor
                                                                     : ProbeKind::classifier;
    m.trained_on_layer = c.manifest.at("layer").get<int>();
    m.pooling = c.manifest.at("pooling").get<std::string>();
    m.input_dim = c.manifest.at("input_dim").get<int>();
    m.hidden_dim = c.manifest.at("hidden_dim").get<int>();
    m.class_count = c.manifest.at("class_count").get<int>();
    m.class_names = c.manifest.at("class_names").get<std::vector<std::string>>();
    m.label_mean = c.manifest.at("label_mean").get<double>();
    m.label_std = c.manifest.at("label_std").get<double>();
    m.label_min = c.manifest.at("label_min").get<double>();
    m.label_max = c.manifest.at("label_max").get<double>();
    if (m.hidden_dim > 0) {
        m.w1 = std::move(c.tensors.at("w1"));
        m.b1 = std::move(c.tensors.at("b1"));
    }
    m.w2 = std::move(c.tensors.at("w2"));
    m.b2 = std::move(c.tensors.at("b2"));
    return m;
}

}  // namespace probekit

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace probekit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct ShapeError : Error {
    using Error::Error;
};
struct ValueError : Error {
    using Error::Error;
};

// Dense row-major float32 tensor. Reductions accumulate in double.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> shape)
        : shape_(std::move(shape)), data_(checked_size(shape_), 0.0f) {}

    Tensor(std::vector<int64_t> shape, std::vector<float> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (checked_size(shape_) != static_cast<int64_t>(data_.size()))
            throw ShapeError("tensor data length does not match shape");
    }

    static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<int64_t> shape, float value) {
        Tensor t(std::move(shape));
        for (auto& x : t.data_) x = value;
        return t;
    }

    static Tensor identity(int64_t n) {
        Tensor t({n, n});
        for (int64_t i = 0; i < n; ++i) t.at(i, i) = 1.0f;
        return t;
    }

    int rank() const { return static_cast<int>(shape_.size()); }
    int64_t dim(int i) const { return shape_.at(static_cast<size_t>(i)); }
    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    const std::vector<float>& values() const { return data_; }

    float& at(int64_t i) { return data_[static_cast<size_t>(i)]; }
    float at(int64_t i) const { return data_[static_cast<size_t>(i)]; }
    float& at(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * shape_[1] + j)]; }
    float at(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * shape_[1] + j)]; }
    float& at(int64_t i, int64_t j, int64_t k) {
        return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }
    float at(int64_t i, int64_t j, int64_t k) const {
        return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }

    // contiguous row of a rank-2 tensor
    std::span<float> row(int64_t i) {
        return {data_.data() + i * shape_[1], static_cast<size_t>(shape_[1])};
    }
    std::span<const float> row(int64_t i) const {
        return {data_.data() + i * shape_[1], static_cast<size_t>(shape_[1])};
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    bool all_finite() const {
        for (float x : data_)
            if (!std::isfinite(x)) return false;
        return true;
    }

private:
    static int64_t checked_size(const std::vector<int64_t>& shape) {
        int64_t n = 1;
        for (int64_t d : shape) {
            if (d < 0) throw ShapeError("negative dimension");
            n *= d;
        }
        return n;
    }

    std::vector<int64_t> shape_;
    std::vector<float> data_;
};

inline std::string shape_string(const Tensor& t) {
    std::string s = "[";
    for (int i = 0; i < t.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.dim(i));
    }
    return s + "]";
}

inline void require_rank(const Tensor& t, int rank, const char* what) {
    if (t.rank() != rank)
        throw ShapeError(std::string(what) + ": expected rank " + std::to_string(rank) +
                         ", got shape " + shape_string(t));
}

// a[m,k] * b[k,n]
inline Tensor matmul(const Tensor& a, const Tensor& b) {
    require_rank(a, 2, "matmul lhs");
    require_rank(b, 2, "matmul rhs");
    const int64_t m = a.dim(0), k = a.dim(1), n = b.dim(1);
    if (b.dim(0) != k)
        throw ShapeError("matmul: inner dimensions disagree: " + shape_string(a) + " x " +
                         shape_string(b));
    Tensor out({m, n});
    std::vector<double> acc(static_cast<size_t>(n));
    for (int64_t i = 0; i < m; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        const float* arow = a.data() + i * k;
        for (int64_t p = 0; p < k; ++p) {
            const double aip = arow[p];
            const float* brow = b.data() + p * n;
            for (int64_t j = 0; j < n; ++j) acc[static_cast<size_t>(j)] += aip * brow[j];
        }
        float* orow = out.data() + i * n;
        for (int64_t j = 0; j < n; ++j) orow[j] = static_cast<float>(acc[static_cast<size_t>(j)]);
    }
    return out;
}

// a[m,k] * b[n,k]^T; dot-product form, used for [out,in] weight layouts
inline Tensor matmul_nt(const Tensor& a, const Tensor& b) {
    require_rank(a, 2, "matmul_nt lhs");
    require_rank(b, 2, "matmul_nt rhs");
    const int64_t m = a.dim(0), k = a.dim(1), n = b.dim(0);
    if (b.dim(1) != k)
        throw ShapeError("matmul_nt: inner dimensions disagree: " + shape_string(a) + " x " +
                         shape_string(b) + "^T");
    Tensor out({m, n});
    for (int64_t i = 0; i < m; ++i) {
        const float* arow = a.data() + i * k;
        float* orow = out.data() + i * n;
        for (int64_t j = 0; j < n; ++j) {
            const float* brow = b.data() + j * k;
            double acc = 0.0;
            for (int64_t p = 0; p < k; ++p) acc += static_cast<double>(arow[p]) * brow[p];
            orow[j] = static_cast<float>(acc);
        }
    }
    return out;
}

// rows of x[m,n] shifted by bias[n]
inline Tensor add_row_bias(const Tensor& x, const Tensor& bias) {
    require_rank(x, 2, "add_row_bias input");
    require_rank(bias, 1, "add_row_bias bias");
    if (bias.dim(0) != x.dim(1)) throw ShapeError("add_row_bias: bias length mismatch");
    Tensor out = x;
    for (int64_t i = 0; i < x.dim(0); ++i) {
        float* row = out.data() + i * x.dim(1);
        for (int64_t j = 0; j < x.dim(1); ++j) row[j] += bias.at(j);
    }
    return out;
}

// x[m,k] * w[n,k]^T + b[n]
inline Tensor linear(const Tensor& x, const Tensor& weight, const Tensor& bias) {
    return add_row_bias(matmul_nt(x, weight), bias);
}

inline Tensor add(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b))
        throw ShapeError("add: shape mismatch " + shape_string(a) + " vs " + shape_string(b));
    Tensor out = a;
    for (int64_t i = 0; i < out.size(); ++i) out.at(i) += b.at(i);
    return out;
}

inline Tensor scale(const Tensor& a, float s) {
    Tensor out = a;
    for (int64_t i = 0; i < out.size(); ++i) out.at(i) *= s;
    return out;
}

// row-wise softmax with per-row max subtraction; -inf entries map to 0
inline Tensor softmax_rows(const Tensor& a) {
    require_rank(a, 2, "softmax_rows input");
    const int64_t m = a.dim(0), n = a.dim(1);
    Tensor out({m, n});
    for (int64_t i = 0; i < m; ++i) {
        const float* in = a.data() + i * n;
        float* o = out.data() + i * n;
        float mx = -std::numeric_limits<float>::infinity();
        for (int64_t j = 0; j < n; ++j) mx = std::max(mx, in[j]);
        double sum = 0.0;
        for (int64_t j = 0; j < n; ++j) {
            const double e = std::exp(static_cast<double>(in[j]) - mx);
            o[j] = static_cast<float>(e);
            sum += e;
        }
        const double inv = 1.0 / sum;
        for (int64_t j = 0; j < n; ++j) o[j] = static_cast<float>(o[j] * inv);
    }
    return out;
}

// per-row standardization (population variance) followed by affine scale/shift
inline Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, float eps) {
    require_rank(x, 2, "layer_norm input");
    const int64_t m = x.dim(0), d = x.dim(1);
    if (gamma.rank() != 1 || gamma.dim(0) != d || beta.rank() != 1 || beta.dim(0) != d)
        throw ShapeError("layer_norm: parameter length mismatch");
    Tensor out({m, d});
    for (int64_t i = 0; i < m; ++i) {
        const float* in = x.data() + i * d;
        float* o = out.data() + i * d;
        double mean = 0.0;
        for (int64_t j = 0; j < d; ++j) mean += in[j];
        mean /= static_cast<double>(d);
        double var = 0.0;
        for (int64_t j = 0; j < d; ++j) {
            const double c = in[j] - mean;
            var += c * c;
        }
        var /= static_cast<double>(d);
        const double denom = std::sqrt(var + eps);
        for (int64_t j = 0; j < d; ++j) {
            const double z = denom > 0.0 ? (in[j] - mean) / denom : 0.0;
            o[j] = static_cast<float>(z * gamma.at(j) + beta.at(j));
        }
    }
    return out;
}

// exact x * Phi(x) via the error function (not the tanh approximation)
inline float gelu_scalar(float x) {
    const double xd = x;
    return static_cast<float>(xd * 0.5 * (1.0 + std::erf(xd / std::sqrt(2.0))));
}

inline Tensor gelu(const Tensor& x) {
    Tensor out = x;
    for (int64_t i = 0; i < out.size(); ++i) out.at(i) = gelu_scalar(out.at(i));
    return out;
}

inline double l2_norm(std::span<const float> v) {
    double acc = 0.0;
    for (float x : v) acc += static_cast<double>(x) * x;
    return std::sqrt(acc);
}

inline double l2_norm(const Tensor& v) { return l2_norm(std::span(v.values())); }

inline double dot(std::span<const float> u, std::span<const float> v) {
    if (u.size() != v.size()) throw ShapeError("dot: length mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < u.size(); ++i) acc += static_cast<double>(u[i]) * v[i];
    return acc;
}

// 1 - cos(u, v), in [0, 2]; zero vectors have no defined distance
inline double cosine_distance(std::span<const float> u, std::span<const float> v) {
    if (u.size() != v.size()) throw ShapeError("cosine_distance: length mismatch");
    const double nu = l2_norm(u), nv = l2_norm(v);
    if (nu == 0.0 || nv == 0.0)
        throw ValueError("cosine_distance undefined for zero vector");
    return 1.0 - dot(u, v) / (nu * nv);
}

inline double cosine_distance(const Tensor& u, const Tensor& v) {
    return cosine_distance(std::span(u.values()), std::span(v.values()));
}

}  // namespace probekit
